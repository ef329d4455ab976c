import math
import random
from itertools import combinations

import pytest
from hypothesis import given

from shlat import (
    Limits,
    VariableSet,
    complement,
    convex_envelope,
    generated_sublattice,
    is_convex,
    is_leq,
    is_zero,
    join,
    rajski_distance,
    rv,
    segment,
    uniform_space,
)
from shlat.errors import SupportTooLarge, TooManyGenerators
from shlat.geometry import restricted_growth_strings
from shlat.random_fixtures import random_space, random_variable

from conftest import variable_tuples

BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140]


def test_segment_f1(two_bits):
    S = segment(two_bits["X1"], two_bits["X2"])
    assert len(S) == 3
    J = join(two_bits["X1"], two_bits["X2"])
    assert rajski_distance(two_bits["X1"], J) == 0.5
    assert rajski_distance(two_bits["X2"], J) == 0.5


def test_segment_degenerate(two_bits):
    assert len(segment(two_bits["X1"], two_bits["X"])) == 2
    assert len(segment(two_bits["X1"], two_bits["X1"])) == 1


def test_envelope_sizes(two_bits):
    E = convex_envelope([two_bits["X1"], two_bits["X2"], two_bits["X3"]], Limits())
    # the three bits are pairwise generic but any two determine the third
    assert len(E) == 4
    s = uniform_space(8)
    bits = [rv(s, [(o >> b) & 1 for o in range(8)], f"B{b}") for b in range(3)]
    E = convex_envelope(bits, Limits())
    assert len(E) == 7
    assert [m.name for m in E] == ["B0", "B1", "B2", "B0vB1", "B0vB2", "B1vB2", "B0vB1vB2"]
    E2 = convex_envelope([two_bits["X1"], two_bits["X2"]], Limits())
    assert len(E2) == len(segment(two_bits["X1"], two_bits["X2"]))
    assert len(convex_envelope([two_bits["X1"], two_bits["X"]], Limits())) == 2


def test_envelope_cap(two_bits):
    with pytest.raises(TooManyGenerators):
        convex_envelope([two_bits["X1"]] * 3, Limits(max_generators=2))


def test_is_convex(two_bits):
    assert is_convex(convex_envelope([two_bits["X1"], two_bits["X2"]], Limits()))
    assert not is_convex(VariableSet([two_bits["X1"], two_bits["X2"]]))
    assert is_convex(VariableSet([two_bits["X3"]]))


def test_generated_sublattice_sizes():
    s = uniform_space(4)
    assert len(generated_sublattice(rv(s, [0, 1, 2, 2]))) == 5
    assert len(generated_sublattice(rv(s, [0] * 4))) == 1
    two = generated_sublattice(rv(s, [0, 1, 1, 1]))
    assert len(two) == 2 and is_zero(two[0])


def test_generated_sublattice_cap(monkeypatch):
    X = rv(uniform_space(9), list(range(9)))
    with pytest.raises(SupportTooLarge):
        generated_sublattice(X)
    monkeypatch.setenv("SHLAT_MAX_SUPPORT", "3")
    with pytest.raises(SupportTooLarge):
        generated_sublattice(rv(uniform_space(4), [0, 1, 2, 3]))
    assert Limits.from_env().max_support == 3


def test_restricted_growth_strings():
    for n in range(7):
        rgs = list(restricted_growth_strings(n))
        assert len(rgs) == BELL[n]
        assert rgs == sorted(rgs)


def test_sublattice_convex_and_complemented():
    rnd = random.Random(11)
    for _ in range(15):
        X = random_variable(rnd, random_space(rnd), max_values=4)
        L = generated_sublattice(X)
        assert len(L) == BELL[X.cardinality]
        assert is_convex(L)
        members = list(L)
        for Y, Z in combinations(members, 2):
            for lo, hi in ((Y, Z), (Z, Y)):
                if is_leq(lo, hi):
                    C, _ = complement(lo, hi)
                    assert C in L
        for trio in combinations(members[:6], 3):
            for m in convex_envelope(list(trio), Limits()):
                assert m in L


def test_max_distance_only_at_zero():
    rnd = random.Random(5)
    for _ in range(30):
        X = random_variable(rnd, random_space(rnd), max_values=4)
        if X.cardinality < 2:
            continue
        for Y in generated_sublattice(X):
            assert math.isclose(rajski_distance(X, Y), 1.0, abs_tol=1e-12) == is_zero(Y)


@given(variable_tuples(2, max_values=5))
def test_segment_never_has_four_points(pair):
    X, Y = pair
    S = segment(X, Y)
    assert 1 <= len(S) <= 3
    # every member lies between the endpoints in the Rajski sense
    for M in S:
        assert math.isclose(rajski_distance(X, M) + rajski_distance(M, Y), rajski_distance(X, Y), abs_tol=1e-9)
