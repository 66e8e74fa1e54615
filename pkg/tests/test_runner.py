"""
Tests for the verification runner.
"""

import random
import time
from fractions import Fraction

import pytest
from hypothesis import given, settings

from unitri.algebra.automorphism import Conjugation, TriangularAutomorphism
from unitri.algebra.derivation import UniDerivation
from unitri.algebra.endomorphism import endo_from_automorphism, endo_from_exp_ad, identity_map, zero_map
from unitri.algebra.filtration import TruncatedLieMap, enumerate_basis
from unitri.algebra.sampling import random_automorphism
from unitri.engine.result import CERTIFIED, REJECTED
from unitri.engine.runner import VerificationRunner, verify_theorem
from unitri.formats.grammar import parse_derivation
from tests.strategies import automorphisms, derivations


def D(text, n=None):
    return parse_derivation(text, n)


def non_homomorphism() -> TruncatedLieMap:
    basis = enumerate_basis(2, 1)
    return TruncatedLieMap(basis, (D("d1", 2), D("d2", 2), D("0", 2)))


def zero_scalar_map() -> TruncatedLieMap:
    # commuting and injective on N_0, but d2 -> d3
    basis = enumerate_basis(3, 0)
    return TruncatedLieMap(basis, (D("d1", 3), D("d3", 3), D("x2 d3", 3)))


def test_identity_is_certified():
    report = verify_theorem(identity_map(2, 2))

    assert report.verdict == CERTIFIED
    assert report.certified
    assert report.failed_step is None
    assert report.lambdas == [1, 1]
    assert report.sigma.is_identity()
    assert report.level_ranks == [(0, 2, 2), (1, 3, 3)]
    assert [s.step_name for s in report.steps] == list(VerificationRunner.STEPS)
    assert all(s.passed for s in report.steps)


def test_zero_map_rejected_at_injectivity():
    report = verify_theorem(zero_map(2, 1))

    assert report.verdict == REJECTED
    assert report.failed_step == "injectivity"
    assert "not a monomorphism" in report.reason
    assert report.sigma is None
    assert report.level_ranks == []


def test_non_homomorphism_rejected_with_witness():
    report = verify_theorem(non_homomorphism())

    assert report.failed_step == "homomorphism"
    assert report.reason.startswith("homomorphism law violated")
    assert report.violation is not None
    assert str(report.violation.expected) == "d2"
    assert report.violation.actual.is_zero()
    assert len(report.steps) == 1


def test_zero_scalar_rejected_at_generators():
    report = verify_theorem(zero_scalar_map())

    assert report.failed_step == "generators"
    details = report.steps[-1].details
    assert details["reason"] == "zero_scalar"
    assert details["index"] == 2
    assert details["length_G"] == 2
    assert details["length_ideal"] == 1
    assert "G = K d2" in details["explanation"]


@settings(max_examples=100)
@given(automorphisms(3, tail_degree=3))
def test_automorphism_round_trip(sigma0):
    report = verify_theorem(endo_from_automorphism(sigma0, 4), budget=2)

    assert report.certified, report.reason
    assert report.sigma == sigma0
    act, act0 = Conjugation(report.sigma), Conjugation(sigma0)
    for i in range(1, 4):
        assert act(UniDerivation.partial(3, i)) == act0(UniDerivation.partial(3, i))
    assert report.lambdas == [1 / c for c in sigma0.scales]
    assert [r for _, r, _ in report.level_ranks] == [3, 7, 13]


def test_exp_ad_is_certified():
    g = D("x1 d2 + x1 x2 d3 - 2 x1^2 d3", 3)
    report = verify_theorem(endo_from_exp_ad(g, 2))

    assert report.certified
    assert report.lambdas == [1, 1, 1]


def test_budget_override_and_bounds():
    phi = identity_map(2, 2)

    report = verify_theorem(phi, budget=2)
    assert [i for i, _, _ in report.level_ranks] == [0, 1, 2]

    with pytest.raises(ValueError, match="outside 0..2"):
        verify_theorem(phi, budget=3)


def test_level_zero_budget():
    report = verify_theorem(identity_map(3, 0))

    assert report.certified
    assert report.level_ranks == [(0, 3, 3)]


def test_disabled_step_is_skipped():
    runner = VerificationRunner(config={"levels": {"enabled": False}})
    report = runner.run(identity_map(2, 2))

    assert report.certified
    assert [s.step_name for s in report.steps] == ["homomorphism", "injectivity", "generators", "normalization"]
    assert report.level_ranks == []


def test_levels_without_normalization_fails():
    runner = VerificationRunner(config={"normalization": {"enabled": False}})
    report = runner.run(identity_map(2, 1))

    assert report.failed_step == "levels"
    assert report.reason.startswith("Step execution failed")
    assert "error" in report.steps[-1].details


def test_unknown_step_fails_cleanly():
    runner = VerificationRunner()
    result = runner._run_step("no_such_step", {}, {"phi": identity_map(2, 1)})

    assert not result.passed
    assert "not found" in result.message


def test_verbose_output(capsys):
    VerificationRunner(verbose=True).run(identity_map(2, 1))

    out = capsys.readouterr().out
    assert "[STEP] homomorphism" in out
    assert "✓ PASSED" in out
    assert "Verification Complete" in out


def test_report_dict_and_table_agree():
    report = verify_theorem(identity_map(2, 2))
    data = report.to_dict()

    assert data["verdict"] == "certified"
    assert data["lambdas"] == ["1", "1"]
    assert data["sigma"] == ["x1 -> x1", "x2 -> x2"]
    assert data["level_ranks"][1] == {"level": 1, "rank": 3, "dimension": 3}
    assert data["coverage"] == {"checked_pairs": 5, "unchecked_pairs": 1}
    assert data["summary"]["total"] == data["summary"]["passed"] == 5

    table = report.to_table()
    assert "Verdict: certified at level 2 (n = 2)" in table
    assert "lambda: (1, 1)" in table
    assert "Homomorphism pairs: 5 checked, 1 unchecked" in table
    for step in data["steps"]:
        assert step["step"] in table


def test_rejected_report_dict():
    data = verify_theorem(non_homomorphism()).to_dict()

    assert data["verdict"] == "rejected"
    assert data["failed_step"] == "homomorphism"
    assert data["sigma"] is None
    assert data["violation"]["expected"] == "d2"
    assert data["summary"]["failed"] == 1


def test_four_variables_level_three():
    sigma = random_automorphism(random.Random(7), 4, tail_degree=3)
    phi = endo_from_automorphism(sigma, 3)
    assert len(phi.images) == 85

    start = time.perf_counter()
    report = verify_theorem(phi, budget=1)
    assert time.perf_counter() - start < 5

    assert report.certified, report.reason
    assert report.sigma == sigma
    assert report.level_ranks == [(0, 4, 4), (1, 15, 15)]


def test_torus_lambdas_are_exact():
    sigma = TriangularAutomorphism.torus([2, Fraction(-1, 3)])
    report = verify_theorem(endo_from_automorphism(sigma, 2))

    assert report.lambdas == [Fraction(1, 2), -3]
    assert report.to_dict()["lambdas"] == ["1/2", "-3"]


@settings(max_examples=50)
@given(derivations(3, max_degree=2, ideal=2))
def test_random_exp_ad_is_certified(g):
    report = verify_theorem(endo_from_exp_ad(g, 3))

    assert report.certified, report.reason
    assert report.lambdas == [1, 1, 1]
