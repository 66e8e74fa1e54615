"""
Tests for the filtration N_d: bases, coordinates, derived series, ranks.
"""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from unitri.algebra.derivation import UniDerivation, ad_power, bracket, ideal_index
from unitri.algebra.endomorphism import identity_map, zero_map
from unitri.algebra.filtration import (
    BasisIndex,
    SpannedSubalgebra,
    TruncatedLieMap,
    column_key,
    coords,
    derivation_vector,
    derived_length,
    derived_series,
    derived_span,
    dimension,
    enumerate_basis,
    ideal_length_certificate,
    membership_level,
    rank_of,
    subalgebra_g,
    subalgebra_h,
)
from unitri.algebra.linalg import EchelonSpace
from unitri.errors import FiltrationNotPreservedError, OutsideFiltrationError
from unitri.formats.grammar import parse_derivation
from tests.strategies import derivations


def D(text, n=None):
    return parse_derivation(text, n)


def test_enumerate_basis_examples():
    basis = enumerate_basis(2, 1)
    assert [str(b) for b in basis.elements] == ["1:", "2:0", "2:1"]
    assert basis.derivations() == [D("d1", 2), D("d2"), D("x1 d2")]
    assert len(enumerate_basis(2, 0)) == 2
    assert len(enumerate_basis(3, 4)) == 31


def test_enumerate_basis_order_is_graded_lex():
    basis = enumerate_basis(3, 1)
    assert [str(b) for b in basis.elements if b.j == 3] == ["3:0,0", "3:0,1", "3:1,0", "3:1,1"]


def test_enumerate_basis_rejects_small_n():
    with pytest.raises(ValueError, match="n >= 2"):
        enumerate_basis(1, 2)


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("d", [0, 1, 2, 3, 4])
def test_dimension_matches_enumeration(n, d):
    brute = sum(
        1
        for j in range(1, n + 1)
        for alpha in itertools.product(range(d + 1), repeat=j - 1)
    )
    assert dimension(n, d) == brute == len(enumerate_basis(n, d))


def test_basis_index_parse():
    assert BasisIndex.parse("1:") == BasisIndex(1, ())
    assert BasisIndex.parse("3:2,0") == BasisIndex(3, (2, 0))
    assert BasisIndex.parse("3:2,0").level == 2
    for bad in ("3", "x:1", "2:a", "3:1"):
        with pytest.raises(ValueError, match="Invalid basis index"):
            BasisIndex.parse(bad)


def test_coords_examples():
    basis = enumerate_basis(2, 1)
    assert coords(D("d1", 2), basis) == [1, 0, 0]
    assert coords(D("1/2 x1 d2"), basis) == [0, 0, Fraction(1, 2)]
    with pytest.raises(OutsideFiltrationError, match="outside filtration level 1"):
        coords(D("x1^2 d2"), basis)


def test_membership_level_examples():
    assert membership_level(D("d1", 3)) == 0
    assert membership_level(D("x1^2 d2")) == 2
    assert membership_level(D("x1 x2 d3")) == 1


@given(derivations(4, max_degree=3))
def test_membership_level_matches_adjoint_nilpotency(d):
    level = membership_level(d)
    for j in range(1, 4):
        partial = UniDerivation.partial(4, j)
        assert ad_power(partial, d, level + 1).is_zero()
    if not d.is_zero():
        assert any(not ad_power(UniDerivation.partial(4, j), d, level).is_zero() for j in range(1, 4))


@given(st.data())
def test_bracket_respects_filtration(data):
    a = data.draw(derivations(3))
    b = data.draw(derivations(3))
    assert membership_level(bracket(a, b)) <= membership_level(a) + membership_level(b)


def test_derived_span_examples():
    assert derived_span(SpannedSubalgebra(2, (D("d1", 2), D("x1 d2"))), 1) == [D("d2")]
    assert derived_span(SpannedSubalgebra(2, (D("d1", 2), D("d2"))), 1) == []
    basis = enumerate_basis(2, 1)
    assert derived_span(SpannedSubalgebra(2, tuple(basis.derivations())), 1) == [D("d2")]


def test_derived_span_budget_is_enforced():
    with pytest.raises(OutsideFiltrationError):
        derived_span(SpannedSubalgebra(2, (D("x1^2 d2"),)), 1)


def test_derived_span_returns_reduced_basis():
    S = SpannedSubalgebra(2, (D("d1", 2), D("x1^2 d2 + x1 d2")))
    # [d1, x1^2 d2 + x1 d2] = 2 x1 d2 + d2, normalized at its leading column d2
    assert derived_span(S, 2) == [D("d2 + 2 x1 d2")]


def test_derived_length_examples():
    assert derived_length(SpannedSubalgebra(2, (D("d1", 2), D("d2"))), 0) == 1
    assert derived_length(SpannedSubalgebra(2, tuple(enumerate_basis(2, 2).derivations())), 2) == 2
    assert derived_length(SpannedSubalgebra(2, ()), 0) == 0


def test_derived_series_terms():
    series = derived_series(SpannedSubalgebra(2, tuple(enumerate_basis(2, 2).derivations())), 2)
    assert [len(term) for term in series] == [4, 2]
    assert series[1] == [D("d2"), D("x1 d2")]


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("d", [0, 1, 2, 3])
def test_derived_span_of_ideal_truncation(n, d):
    upper = enumerate_basis(n, d + 1)
    lower = enumerate_basis(n, d)
    for i in range(1, n + 1):
        spanners = tuple(b.element(n) for b in upper.elements if b.j >= i)
        span = derived_span(SpannedSubalgebra(n, spanners), d + 1)
        assert all(ideal_index(v) >= i + 1 for v in span)
        space = EchelonSpace(column_key)
        space.extend(derivation_vector(v) for v in span)
        for b in lower.elements:
            if b.j >= i + 1:
                assert space.contains(derivation_vector(b.element(n)))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_ideal_length_certificate(n):
    for i in range(1, n + 1):
        cert = ideal_length_certificate(n, i, 1)
        assert cert.lower == n - i + 1
        assert cert.upper == n - i + 1
        assert cert.exact


def test_ideal_length_certificate_at_level_zero_is_only_a_lower_bound():
    # N_0 is abelian, so the truncation sees a single term
    cert = ideal_length_certificate(3, 1, 0)
    assert cert.lower == 1
    assert not cert.exact


@pytest.mark.parametrize("n, i", [(2, 1), (3, 1), (3, 2), (4, 2)])
def test_subalgebra_g_has_length_n_minus_i_plus_one(n, i):
    assert derived_length(subalgebra_g(n, i, 1), 1) == n - i + 1


def test_subalgebra_h_embeds_a_smaller_u():
    H = subalgebra_h(3, 2, 1)
    assert H.spanners == (D("d2", 3), D("d3", 3), D("x2 d3", 3))
    assert derived_length(H, 1) == 2


def test_rank_of_examples():
    assert rank_of(identity_map(2, 1), 1) == 3
    assert rank_of(zero_map(2, 1), 1) == 0
    assert rank_of(identity_map(3, 2), 1) == dimension(3, 1)


def test_rank_of_detects_escape():
    basis = enumerate_basis(2, 1)
    images = (D("d1 + x1^2 d2"), D("d2"), D("x1 d2"))
    phi = TruncatedLieMap(basis, images)
    with pytest.raises(FiltrationNotPreservedError, match="filtration not preserved") as excinfo:
        rank_of(phi, 1)
    assert excinfo.value.witness == BasisIndex(1, ())
    with pytest.raises(ValueError, match="outside"):
        rank_of(phi, 2)


def test_truncated_map_image_of():
    phi = identity_map(2, 1)
    assert phi.image_of(D("d1 + 3 x1 d2")) == D("d1 + 3 x1 d2")
    with pytest.raises(OutsideFiltrationError):
        phi.image_of(D("x1^2 d2"))
    with pytest.raises(ValueError, match="Expected 3 images"):
        TruncatedLieMap(enumerate_basis(2, 1), (D("d1", 2),))
