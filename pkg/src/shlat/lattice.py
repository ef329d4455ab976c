"""Lattice algebra on random variables: order, join, meet, complement.

Every predicate here is structural: it looks only at which joint cells are
nonzero, never at entropies.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotComparable
from .probability import (
    JointDistribution,
    PairLabel,
    ProbabilitySpace,
    RandomVariable,
    _encode,
    joint,
    joint_weights,
    restrict_support,
    same_space,
)


def _pair_codes(X: RandomVariable, Y: RandomVariable) -> set[tuple[int, int]]:
    same_space(X, Y)
    return set(zip(X.codes, Y.codes))


def is_equivalent(X: RandomVariable, Y: RandomVariable) -> bool:
    """Whether the joint matrix is a permutation matrix.

    Every row and column of the restricted joint has a nonzero cell, so the
    matrix is a permutation matrix iff the nonzero count equals both the row
    count and the column count.
    """
    cells = _pair_codes(X, Y)
    return len(cells) == X.cardinality == Y.cardinality


def is_leq(X: RandomVariable, Y: RandomVariable) -> bool:
    """``X <= Y``: each column of joint(X, Y) holds exactly one nonzero cell."""
    return len(_pair_codes(X, Y)) == Y.cardinality


def _flatten(label) -> tuple:
    return tuple(label) if isinstance(label, PairLabel) else (label,)


def join(X: RandomVariable, Y: RandomVariable, name: str | None = None) -> RandomVariable:
    """The pair ``(X, Y)``; nested joins flatten to the left."""
    same_space(X, Y)
    index: dict = {}
    codes = []
    values = []
    for cx, cy in zip(X.codes, Y.codes):
        key = (cx, cy)
        c = index.get(key)
        if c is None:
            c = index[key] = len(index)
            values.append(PairLabel(_flatten(X.values[cx]) + (Y.values[cy],)))
        codes.append(c)
    return RandomVariable(X.space, tuple(codes), tuple(values), name)


def join_all(variables, name: str | None = None) -> RandomVariable:
    variables = list(variables)
    if not variables:
        raise ValueError("join_all needs at least one variable")
    acc = variables[0]
    for V in variables[1:]:
        acc = join(acc, V)
    return acc.with_name(name) if name else acc


def zero(space: ProbabilitySpace) -> RandomVariable:
    space = restrict_support(space)
    return RandomVariable(space, (0,) * len(space), (0,), "0")


def one(space: ProbabilitySpace) -> RandomVariable:
    space = restrict_support(space)
    return RandomVariable(space, tuple(range(len(space))), tuple(space.outcomes), "1")


def is_zero(X: RandomVariable) -> bool:
    return X.cardinality == 1


@dataclass(frozen=True)
class BlockStructure:
    """Row/column permutations putting a joint matrix in block-diagonal form.

    ``row_perm[i]`` is the new position of original row ``i`` (likewise for
    columns).  ``block_of_row``/``block_of_col`` are indexed by new position.
    """

    row_perm: tuple[int, ...]
    col_perm: tuple[int, ...]
    block_count: int
    block_of_row: tuple[int, ...]
    block_of_col: tuple[int, ...]
    block_mass: tuple[Fraction, ...]

    def row_block(self, original_row: int) -> int:
        return self.block_of_row[self.row_perm[original_row]]

    def col_block(self, original_col: int) -> int:
        return self.block_of_col[self.col_perm[original_col]]

    def permuted(self, J: JointDistribution) -> list[list[Fraction]]:
        """The dense block-diagonal matrix."""
        n, m = J.shape
        out = [[Fraction(0)] * m for _ in range(n)]
        for (i, j), w in J.weights.items():
            out[self.row_perm[i]][self.col_perm[j]] = Fraction(w, J.total)
        return out


def block_diagonalize(J: JointDistribution) -> BlockStructure:
    """Communication classes of a joint matrix by depth-first search.

    Rows and columns are nodes of the bipartite graph whose edges are the
    nonzero cells.  Popping a row scans its unassigned columns in ascending
    index order; each nonzero one is pushed and given the next free column
    slot (and symmetrically for columns).  The search starts from row 0 and,
    whenever the stack empties, restarts from the lowest unmarked row, then
    the lowest unmarked column.  Each restart opens a new block.
    """
    n_rows, n_cols = J.shape
    by_row: list[list[int]] = [[] for _ in range(n_rows)]
    by_col: list[list[int]] = [[] for _ in range(n_cols)]
    for i, j in J.weights:
        by_row[i].append(j)
        by_col[j].append(i)
    for lst in by_row:
        lst.sort()
    for lst in by_col:
        lst.sort()

    row_perm = [-1] * n_rows
    col_perm = [-1] * n_cols
    row_mark = [False] * n_rows
    col_mark = [False] * n_cols
    bottom = left = 0
    block_of_row: list[int] = []
    block_of_col: list[int] = []
    block = -1
    next_row = next_col = 0
    stack: list[tuple[bool, int]] = []

    while True:
        while next_row < n_rows and row_mark[next_row]:
            next_row += 1
        while next_col < n_cols and col_mark[next_col]:
            next_col += 1
        if next_row < n_rows:
            seed = (True, next_row)
            if row_perm[next_row] < 0:
                row_perm[next_row] = bottom
                bottom += 1
        elif next_col < n_cols:
            seed = (False, next_col)
            if col_perm[next_col] < 0:
                col_perm[next_col] = left
                left += 1
        else:
            break
        block += 1
        (block_of_row if seed[0] else block_of_col).append(block)
        stack.append(seed)
        while stack:
            is_row, i = stack.pop()
            if is_row:
                if row_mark[i]:
                    continue
                row_mark[i] = True
                for j in by_row[i]:
                    if col_perm[j] < 0:
                        col_perm[j] = left
                        left += 1
                        block_of_col.append(block)
                        stack.append((False, j))
            else:
                if col_mark[i]:
                    continue
                col_mark[i] = True
                for j in by_col[i]:
                    if row_perm[j] < 0:
                        row_perm[j] = bottom
                        bottom += 1
                        block_of_row.append(block)
                        stack.append((True, j))

    masses = [0] * (block + 1)
    for (i, j), w in J.weights.items():
        masses[block_of_row[row_perm[i]]] += w
    return BlockStructure(
        tuple(row_perm),
        tuple(col_perm),
        block + 1,
        tuple(block_of_row),
        tuple(block_of_col),
        tuple(Fraction(m, J.total) for m in masses),
    )


def meet(X: RandomVariable, Y: RandomVariable, name: str | None = None) -> RandomVariable:
    """Common information: the communication class of the ``(x, y)`` cell."""
    J = joint(X, Y)
    blocks = block_diagonalize(J)
    labels = [blocks.row_block(cx) for cx in X.codes]
    codes, values = _encode(labels)
    return RandomVariable(X.space, codes, values, name)


@dataclass(frozen=True)
class ComplementTensor:
    """Sparse joint tensor of ``(X, Y, Z)``; cells ``(x, y, z) -> mass``."""

    row_values: tuple
    col_values: tuple
    weights: dict[tuple[int, int, int], int]
    total: int
    z_cardinality: int

    def entry(self, i: int, j: int, k: int) -> Fraction:
        return Fraction(self.weights.get((i, j, k), 0), self.total)

    @property
    def entries(self) -> list[list[list[Fraction]]]:
        return [
            [[self.entry(i, j, k) for k in range(self.z_cardinality)] for j in range(len(self.col_values))]
            for i in range(len(self.row_values))
        ]

    def marginalize_z(self) -> JointDistribution:
        cells: dict[tuple[int, int], int] = {}
        for (i, j, _), w in self.weights.items():
            cells[(i, j)] = cells.get((i, j), 0) + w
        return JointDistribution(self.row_values, self.col_values, cells, self.total)


def complement(X: RandomVariable, Y: RandomVariable, name: str | None = None):
    """Complementary information ``Z`` of ``X`` in ``Y`` (requires ``X <= Y``).

    Each row ``x`` of joint(X, Y) is scanned in ascending column order and its
    successive nonzero cells are numbered ``z = 0, 1, 2, ...``.  The result
    is canonical for this scan order but not unique.
    """
    if not is_leq(X, Y):
        raise NotComparable("complement requires X <= Y")
    cells = joint_weights(X, Y)
    per_row: dict[int, list[int]] = {}
    for cx, cy in cells:
        per_row.setdefault(cx, []).append(cy)
    z_of_cell = {}
    for cx, cols in per_row.items():
        for k, cy in enumerate(sorted(cols)):
            z_of_cell[(cx, cy)] = k
    tensor = ComplementTensor(
        X.values,
        Y.values,
        {(cx, cy, z_of_cell[(cx, cy)]): w for (cx, cy), w in cells.items()},
        X.space.total,
        max(len(c) for c in per_row.values()),
    )
    labels = [z_of_cell[(cx, cy)] for cx, cy in zip(X.codes, Y.codes)]
    codes, values = _encode(labels)
    return RandomVariable(X.space, codes, values, name), tensor
