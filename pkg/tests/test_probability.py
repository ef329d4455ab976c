from fractions import Fraction

import pytest
from hypothesis import given

from shlat import (
    JointDistribution,
    PairLabel,
    ProbabilitySpace,
    from_function,
    join,
    joint,
    map_values,
    marginal,
    new_space,
    restrict_support,
    rv,
    space_from_weights,
    uniform_space,
)
from shlat.errors import EmptySupport, LengthMismatch, NegativeMass, SpaceMismatch, SumNotOne
from shlat.lattice import is_equivalent, meet
from shlat.metrics import entropy

from conftest import spaces, variable_tuples

Q = Fraction


def test_new_space_uniform():
    s = new_space(["1/4"] * 4)
    assert s.masses == (Q(1, 4),) * 4
    assert s.outcomes == (0, 1, 2, 3)
    assert s == uniform_space(4)


def test_single_outcome_space():
    s = new_space([1])
    X = rv(s, ["a"])
    assert X.cardinality == 1 and entropy(X) == 0


def test_new_space_rejects_bad_masses():
    with pytest.raises(SumNotOne):
        new_space([Q(1, 2), Q(1, 3)])
    with pytest.raises(NegativeMass):
        new_space([Q(3, 2), Q(-1, 2)])
    with pytest.raises(EmptySupport):
        new_space([])


def test_space_from_weights_reduces():
    s = space_from_weights([2, 4, 2])
    assert s.weights == (1, 2, 1) and s.total == 4


def test_restrict_support():
    s = new_space([Q(1, 2), 0, Q(1, 2)])
    r = restrict_support(s)
    assert r.masses == (Q(1, 2), Q(1, 2))
    assert r.outcomes == (0, 2)  # ids survive
    assert restrict_support(r) is r
    assert restrict_support(new_space([0, 1])).masses == (1,)


def test_rv_classes():
    s = uniform_space(4)
    parity = rv(s, [0, 1, 0, 1])
    assert marginal(parity) == {0: Q(1, 2), 1: Q(1, 2)}
    const = rv(s, ["c"] * 4)
    assert marginal(const) == {"c": 1}
    ident = rv(s, [0, 1, 2, 3])
    assert list(marginal(ident).values()) == [Q(1, 4)] * 4


def test_rv_length_mismatch():
    with pytest.raises(LengthMismatch):
        rv(uniform_space(4), [0, 1, 0])


def test_rv_from_mapping_and_function():
    s = uniform_space(3)
    a = rv(s, {0: "x", 1: "y", 2: "x"})
    b = from_function(s, lambda o: "x" if o != 1 else "y")
    assert a.codes == b.codes and a.values == b.values


def test_joint_f1(two_bits):
    J = joint(two_bits["X1"], two_bits["X2"])
    assert J.entries == [[Q(1, 4)] * 2] * 2


def test_self_joint_is_diagonal():
    X = rv(uniform_space(2), [0, 1])
    assert joint(X, X).entries == [[Q(1, 2), 0], [0, Q(1, 2)]]


def test_joint_with_deterministic_row():
    s = new_space([Q(1, 2), Q(1, 3), Q(1, 6)])
    const = rv(s, ["c"] * 3)
    Y = rv(s, [0, 1, 1])
    J = joint(const, Y)
    assert J.shape == (1, 2)
    assert J.entries[0] == [marginal(Y)[0], marginal(Y)[1]]


def test_marginal_f1(two_bits):
    assert marginal(two_bits["X1"]) == {0: Q(1, 2), 1: Q(1, 2)}


def test_space_mismatch():
    with pytest.raises(SpaceMismatch):
        joint(rv(uniform_space(2), [0, 1]), rv(uniform_space(3), [0, 1, 2]))


def test_pair_labels_render_and_flatten():
    s = uniform_space(2)
    a, b, c = rv(s, ["a", "b"]), rv(s, ["x", "y"]), rv(s, [1, 2])
    V = join(join(a, b), c)
    assert V.values[0] == PairLabel(("a", "x", 1))
    assert str(V.values[0]) == "(a,x,1)"
    assert str(join(a, b).values[1]) == "(b,y)"


def test_from_matrix_drops_zero_lines():
    J = JointDistribution.from_matrix([[Q(1, 2), 0, 0], [0, 0, 0], [0, 0, Q(1, 2)]])
    assert J.shape == (2, 2)
    assert J.row_sums() == [Q(1, 2), Q(1, 2)]


def test_space_validation():
    with pytest.raises(SumNotOne):
        ProbabilitySpace((0, 1), (1, 1), 3)


@given(variable_tuples(2))
def test_joint_sums_to_marginals(pair):
    X, Y = pair
    J = joint(X, Y)
    assert sum(map(sum, J.entries)) == 1
    mx, my = marginal(X), marginal(Y)
    assert J.row_sums() == [mx[v] for v in J.row_values]
    assert J.col_sums() == [my[v] for v in J.col_values]


@given(variable_tuples(1))
def test_marginal_positive(tup):
    (X,) = tup
    m = marginal(X)
    assert all(p > 0 for p in m.values()) and sum(m.values()) == 1


@given(spaces())
def test_restriction_is_transparent(space):
    labels = [o % 3 for o in space.outcomes]
    other = [o % 2 for o in space.outcomes]
    full_x, full_y = rv(space, labels), rv(space, other)
    r = restrict_support(space)
    keep = [i for i, w in enumerate(space.weights) if w]
    rx = rv(r, [labels[i] for i in keep])
    ry = rv(r, [other[i] for i in keep])
    assert joint(full_x, full_y) == joint(rx, ry)
    assert is_equivalent(meet(full_x, full_y), meet(rx, ry))
    assert entropy(full_x) == entropy(rx)


def test_map_values(two_bits):
    Y = map_values(two_bits["X"], lambda v: v[0])
    assert is_equivalent(Y, two_bits["X1"])
