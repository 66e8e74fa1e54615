"""
Tests for u_n: bracket, action on P_n, ideals and adjoint exponentials.
"""

import pytest
from hypothesis import given, settings, strategies as st

from unitri.algebra.derivation import (
    UniDerivation,
    ad_power,
    apply,
    bracket,
    exp_ad,
    ideal_index,
    shift_embedding,
)
from unitri.algebra.polynomial import Polynomial
from unitri.errors import AmbientMismatchError, NilpotencyCapExceeded, TriangularityError
from unitri.formats.grammar import parse_derivation, parse_polynomial
from tests.strategies import derivations, polynomials


def D(text, n=None):
    return parse_derivation(text, n)


def P(text, n=None):
    return parse_polynomial(text, n)


def test_bracket_examples():
    assert bracket(D("d1", 2), D("x1 d2")) == D("d2", 2)
    assert bracket(D("x1 d2"), D("x1 d2")).is_zero()
    assert bracket(D("x1 d2"), D("d1", 2)) == D("-d2", 2)


def test_bracket_mismatched_n():
    with pytest.raises(AmbientMismatchError):
        bracket(D("d1", 2), D("d1", 3))


def test_apply_examples():
    assert apply(D("d2"), P("x2^2")) == P("2 x2")
    assert apply(D("x1 d2"), P("x2")) == P("x1", 2)
    assert apply(D("d1 + x1 d2"), Polynomial.one(2)).is_zero()


def test_ideal_index_examples():
    assert ideal_index(D("d2", 3)) == 2
    assert ideal_index(UniDerivation.zero(3)) == 4
    assert ideal_index(D("d1 + x1 d2")) == 1


def test_ad_power_examples():
    assert ad_power(D("d1", 2), D("x1^2 d2"), 2) == D("2 d2", 2)
    g = D("x1 d2")
    assert ad_power(g, D("d1", 2), 0) == D("d1", 2)
    assert ad_power(D("d1", 2), D("d2"), 1).is_zero()


def test_exp_ad_examples():
    assert exp_ad(D("x1 d2"), D("d1", 2)) == D("d1 - d2")
    assert exp_ad(D("d1", 2), D("d2")) == D("d2")
    assert exp_ad(UniDerivation.zero(2), D("x1 d2")) == D("x1 d2")


def test_exp_ad_divides_by_factorials():
    # ad(d1)^k (x1^2 d2) = 2 x1 d2, 2 d2, 0
    assert exp_ad(D("d1", 2), D("x1^2 d2")) == D("x1^2 d2 + 2 x1 d2 + d2")


def test_exp_ad_cap():
    with pytest.raises(NilpotencyCapExceeded, match="nilpotency cap exceeded"):
        exp_ad(D("d1", 2), D("x1^3 d2"), cap=2)
    with pytest.raises(ValueError, match="at least 1"):
        exp_ad(D("d1", 2), D("d2"), cap=0)


def test_constructor_rejects_non_triangular_coefficients():
    x2 = Polynomial.variable(2, 2)
    with pytest.raises(TriangularityError, match="P_1"):
        UniDerivation(2, [Polynomial.zero(2), x2])
    with pytest.raises(TriangularityError, match="Expected 2 coefficients"):
        UniDerivation(2, [Polynomial.zero(2)])


def test_monomial_constructor():
    assert UniDerivation.monomial(3, 3, (1, 2), 5) == D("5 x1 x2^2 d3")
    with pytest.raises(TriangularityError):
        UniDerivation.monomial(3, 3, (1,))


def test_linear_structure():
    a = D("d1 + x1 d2")
    assert a + (-a) == UniDerivation.zero(2)
    assert 2 * a == a.scale(2)
    assert (a * 3) / 3 == a
    assert a - a == UniDerivation.zero(2)


def test_shift_embedding():
    # u_2 -> u_3 with offset 1: d1 -> d2, x1 d2 -> x2 d3
    assert shift_embedding(D("d1 + x1 d2"), 3, 1) == D("d2 + x2 d3")
    with pytest.raises(ValueError, match="Cannot embed"):
        shift_embedding(D("d1", 2), 3, 2)


@given(derivations(3, max_degree=2), derivations(3, max_degree=2))
def test_shift_embedding_is_a_homomorphism(a, b):
    assert shift_embedding(bracket(a, b), 4, 1) == bracket(shift_embedding(a, 4, 1), shift_embedding(b, 4, 1))


@settings(max_examples=500)
@given(st.data())
def test_jacobi_and_antisymmetry(data):
    n = data.draw(st.sampled_from([2, 3, 4]))
    a, b, c = (data.draw(derivations(n)) for _ in range(3))
    jacobi = bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b)
    assert jacobi.is_zero()
    assert (bracket(a, b) + bracket(b, a)).is_zero()


@given(derivations(3), derivations(3), polynomials(3, 3))
def test_bracket_is_the_commutator(a, b, p):
    assert apply(bracket(a, b), p) == apply(a, apply(b, p)) - apply(b, apply(a, p))


IDEAL_PAIRS = [(n, i, j) for n in (2, 3, 4) for i in range(1, n + 1) for j in range(i, n + 1)]


@pytest.mark.parametrize("n, i, j", IDEAL_PAIRS)
@settings(max_examples=200)
@given(st.data())
def test_ideal_containments(n, i, j, data):
    a = data.draw(derivations(n, ideal=i))
    b = data.draw(derivations(n, ideal=j))
    bound = i + 1 if i == j else j
    assert ideal_index(bracket(a, b)) >= bound


@given(derivations(3, max_degree=2, ideal=2), derivations(3))
def test_exp_ad_inverse(g, d):
    assert exp_ad(-g, exp_ad(g, d)) == d
