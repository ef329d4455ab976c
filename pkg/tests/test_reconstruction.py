import math
from fractions import Fraction

import pytest

from shlat import analyze, impossibility_margin, mutually_independent, rv, validate_components
from shlat.cases import integer_division
from shlat.errors import ComponentNotDerived
from shlat.logexpr import LogExpr, LogRatio
from shlat.properties import reconstruction, trial_rng
from shlat.reconstruction import components_from_maps


def test_validate_components(two_bits):
    assert validate_components(two_bits["X"], [two_bits["X1"], two_bits["X2"]])
    coin = rv(two_bits["space"], [0, 1, 1, 0])
    assert not validate_components(two_bits["X1"], [coin])
    assert validate_components(two_bits["X"], [])


def test_mutual_independence(two_bits):
    assert mutually_independent([two_bits["X1"], two_bits["X2"]])
    assert not mutually_independent([two_bits["X1"], two_bits["X2"], two_bits["X3"]])
    assert mutually_independent([two_bits["X3"]])


def test_analyze_two_bits(two_bits):
    rep = analyze(two_bits["X"], [two_bits["X1"], two_bits["X2"]])
    assert rep.sum_exact.rational() == 1
    assert rep.necessary_bound == 1
    assert rep.mutually_independent and rep.ground_truth_perfect
    assert rep.verdict == "PERFECT" and rep.theorem_verdict == "possible"
    assert rep.consistent
    m = impossibility_margin(rep)
    assert m.exact.rational() == 0 and not m.certified


def test_analyze_with_parity(two_bits):
    rep = analyze(two_bits["X"], [two_bits["X1"], two_bits["X2"], two_bits["X3"]])
    assert rep.sum_exact.rational() == Fraction(3, 2)
    assert not rep.mutually_independent
    assert rep.verdict == "PERFECT" and rep.consistent


def test_analyze_divisors(divisors):
    rep = analyze(divisors["X"], [divisors["X1"], divisors["X2"]])
    assert rep.sum_exact == LogRatio(LogExpr.log(6), LogExpr.log(12))
    assert math.isclose(rep.sum_distances, 0.7210570543488701, abs_tol=1e-12)
    assert rep.necessary_holds and not rep.ground_truth_perfect
    assert rep.verdict == "NOT PERFECT" and rep.theorem_verdict == "undetermined"
    assert rep.consistent


def test_single_component_margin(two_bits):
    rep = analyze(two_bits["X"], [two_bits["X1"]])
    m = impossibility_margin(rep)
    assert m.exact.rational() == Fraction(1, 2) and m.certified
    assert rep.verdict == "IMPOSSIBLE"
    # one component: redundancy equals the distance itself
    assert rep.checks["delta_lower_single"]


def test_component_not_derived(two_bits):
    with pytest.raises(ComponentNotDerived):
        analyze(two_bits["X1"], [two_bits["X"]])


def test_components_from_maps(two_bits):
    comps = components_from_maps(two_bits["X"], [{"00": 0, "01": 0, "10": 1, "11": 1}], ["first"])
    assert comps[0].name == "first"
    assert analyze(two_bits["X"], comps).distances == [0.5]


@pytest.mark.parametrize("m", [1, 10, 100])
def test_scaled_divisors(m):
    case = integer_division(m)
    rep = analyze(case.target, case.components)
    assert rep.sum_exact == LogRatio(LogExpr.log(6), LogExpr.log(12 * m))
    assert not rep.ground_truth_perfect and rep.consistent


def test_scaled_divisors_shrink():
    sums = [analyze(c.target, c.components).sum_distances for c in map(integer_division, (1, 10, 100))]
    assert sums[0] > sums[1] > sums[2]


def test_report_serializes(two_bits):
    d = analyze(two_bits["X"], [two_bits["X1"], two_bits["X2"]]).to_dict()
    assert d["sum_exact"] == "1" and d["verdict"] == "PERFECT"
    assert [c["name"] for c in d["components"]] == ["X1", "X2"]


def test_reconstruction_sweep_sample():
    fails = [(i, f) for i in range(500) for f in reconstruction(trial_rng(1, "reconstruction", i))]
    assert not fails
