import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from shlat import (
    JointDistribution,
    block_diagonalize,
    complement,
    is_equivalent,
    is_leq,
    is_zero,
    join,
    joint,
    meet,
    one,
    rv,
    uniform_space,
    zero,
)
from shlat.cases import epsilon_chain
from shlat.errors import NotComparable
from shlat.metrics import entropy
from shlat.oracles import components_oracle
from shlat.random_fixtures import random_matrix

from conftest import variable_tuples

Q = Fraction


def test_equivalence(two_bits):
    s = two_bits["space"]
    X = rv(s, [0, 1, 2, 3])
    shifted = rv(s, [10, 11, 12, 13])
    assert is_equivalent(X, shifted)
    assert not is_equivalent(two_bits["X1"], two_bits["X2"])
    assert is_equivalent(two_bits["X3"], two_bits["X3"])


def test_order(two_bits):
    assert is_leq(two_bits["X1"], two_bits["X"])
    assert not is_leq(two_bits["X"], two_bits["X1"])
    s = two_bits["space"]
    for V in two_bits.values():
        if V is s:
            continue
        assert is_leq(zero(s), V) and is_leq(V, one(s))


def test_join_identities(two_bits):
    assert is_equivalent(join(two_bits["X1"], two_bits["X2"]), two_bits["X"])
    X = two_bits["X3"]
    assert is_equivalent(join(X, zero(X.space)), X)
    assert is_equivalent(join(X, X), X)


def test_zero_one():
    s = uniform_space(4)
    assert zero(s).cardinality == 1 and entropy(zero(s)) == 0
    assert one(s).cardinality == 4 and entropy(one(s)) == 2.0
    t = uniform_space(1)
    assert is_equivalent(zero(t), one(t))


def test_blocks_full_support(two_bits):
    B = block_diagonalize(joint(two_bits["X1"], two_bits["X2"]))
    assert B.block_count == 1 and B.block_mass == (1,)


def test_blocks_diagonal():
    J = JointDistribution.from_matrix([[Q(1, 2), 0], [0, Q(1, 2)]])
    B = block_diagonalize(J)
    assert B.block_count == 2 and B.block_mass == (Q(1, 2), Q(1, 2))


def test_blocks_epsilon_chain():
    for eps, count in ((Q(1, 8), 1), (0, 4)):
        X, Y = epsilon_chain(4, eps).components
        assert block_diagonalize(joint(X, Y)).block_count == count


def test_dfs_trace():
    # rows 0 and 2 share column 0, row 0 also hits column 2; row 1 is isolated with column 1
    J = JointDistribution.from_matrix(
        [
            [Q(1, 8), 0, Q(1, 8)],
            [0, Q(1, 2), 0],
            [Q(1, 4), 0, 0],
        ]
    )
    B = block_diagonalize(J)
    # row 0 seeds, assigns columns 0 and 2; column 2 is popped first (no new rows),
    # then column 0 brings row 2; the restart picks row 1
    assert B.row_perm == (0, 2, 1)
    assert B.col_perm == (0, 2, 1)
    assert B.block_of_row == (0, 0, 1)
    assert B.block_of_col == (0, 0, 1)
    assert B.block_mass == (Q(1, 2), Q(1, 2))
    P = B.permuted(J)
    assert P == [[Q(1, 8), Q(1, 8), 0], [Q(1, 4), 0, 0], [0, 0, Q(1, 2)]]


def test_table1_non_distributive(nondist):
    X, Z1, Z2 = nondist["X"], nondist["Z1"], nondist["Z2"]
    assert is_zero(meet(X, Z1))
    assert is_zero(meet(X, Z2))
    assert is_equivalent(meet(X, join(Z1, Z2)), X)
    assert not is_equivalent(meet(X, join(Z1, Z2)), join(meet(X, Z1), meet(X, Z2)))


def test_meet_basics(two_bits):
    X = two_bits["X"]
    assert is_equivalent(meet(X, X), X)
    assert is_zero(meet(two_bits["X1"], two_bits["X2"]))  # independent


def test_complement_f1(two_bits):
    Z, T = complement(two_bits["X1"], two_bits["X"])
    assert Z.cardinality == 2
    assert is_equivalent(join(two_bits["X1"], Z), two_bits["X"])
    assert is_zero(meet(two_bits["X1"], Z))
    assert T.marginalize_z() == joint(two_bits["X1"], two_bits["X"])


def test_complement_extremes(two_bits):
    Y = two_bits["X"]
    Z, _ = complement(zero(Y.space), Y)
    assert is_equivalent(Z, Y)
    Z, _ = complement(Y, Y)
    assert is_zero(Z)


def test_complement_requires_order(two_bits):
    with pytest.raises(NotComparable):
        complement(two_bits["X"], two_bits["X1"])


def test_complement_canonical_scan():
    s = uniform_space(6)
    Y = rv(s, [0, 1, 2, 3, 4, 5])
    X = rv(s, ["a", "b", "a", "b", "a", "b"])
    Z, T = complement(X, Y)
    # row a holds columns 0,2,4 -> z = 0,1,2; row b holds 1,3,5 -> z = 0,1,2
    assert [Z.values[c] for c in Z.codes] == [0, 0, 1, 1, 2, 2]
    assert T.z_cardinality == 3


@given(variable_tuples(3, max_values=4))
def test_lattice_laws(tri):
    X, Y, Z = tri
    assert is_equivalent(join(X, Y), join(Y, X))
    assert is_equivalent(meet(X, Y), meet(Y, X))
    assert is_equivalent(join(join(X, Y), Z), join(X, join(Y, Z)))
    assert is_equivalent(meet(meet(X, Y), Z), meet(X, meet(Y, Z)))
    assert is_equivalent(meet(X, X), X) and is_equivalent(join(X, X), X)
    assert is_equivalent(meet(X, join(X, Y)), X)
    assert is_equivalent(join(X, meet(X, Y)), X)
    leq = is_leq(X, Y)
    assert leq == is_equivalent(join(X, Y), Y) == is_equivalent(meet(X, Y), X)


@given(variable_tuples(2, max_values=4))
def test_meet_below_both(pair):
    X, Y = pair
    M = meet(X, Y)
    assert is_leq(M, X) and is_leq(M, Y)


@given(variable_tuples(2, max_values=5), st.randoms(use_true_random=False))
def test_complement_postconditions(pair, rnd):
    Y, _ = pair
    table = {v: rnd.randrange(3) for v in Y.values}
    X = rv(Y.space, [table[Y.values[c]] for c in Y.codes])
    Z, T = complement(X, Y)
    assert is_equivalent(join(X, Z), Y)
    assert is_zero(meet(X, Z))
    assert T.marginalize_z() == joint(X, Y)


def _check_against_union_find(J):
    B = block_diagonalize(J)
    parts, masses = components_oracle(J.entries)
    n, m = J.shape
    got = {}
    for i in range(n):
        got.setdefault(B.row_block(i), set()).add(("r", i))
    for j in range(m):
        got.setdefault(B.col_block(j), set()).add(("c", j))
    assert {frozenset(g) for g in got.values()} == parts
    for b, g in got.items():
        assert B.block_mass[b] == masses[frozenset(g)]
    assert sorted(B.row_perm) == list(range(n)) and sorted(B.col_perm) == list(range(m))


@given(st.randoms(use_true_random=False))
def test_blocks_match_union_find(rnd):
    _check_against_union_find(random_matrix(rnd))


def test_blocks_match_union_find_seeded():
    rnd = random.Random(7)
    for _ in range(500):
        _check_against_union_find(random_matrix(rnd))
