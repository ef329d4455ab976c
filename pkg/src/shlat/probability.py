"""Finite probability spaces and random variables in exact arithmetic.

Masses are held as non-negative integer weights over one common positive
denominator, so every probability is the rational ``weight / total`` and
all equality/zero tests reduce to integer comparisons.  ``Fraction`` views
are provided for callers who want rationals.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import EmptySupport, LengthMismatch, NegativeMass, SpaceMismatch, SumNotOne

Label = Hashable


@dataclass(frozen=True)
class ProbabilitySpace:
    """Finite outcome set with rational masses ``weights[i] / total``."""

    outcomes: tuple[int, ...]
    weights: tuple[int, ...]
    total: int

    def __post_init__(self):
        if len(self.outcomes) != len(self.weights):
            raise LengthMismatch("outcomes and weights differ in length")
        if not self.outcomes:
            raise EmptySupport("a probability space needs at least one outcome")
        if self.total <= 0:
            raise SumNotOne("total weight must be positive")
        if any(w < 0 for w in self.weights):
            raise NegativeMass("negative mass")
        if sum(self.weights) != self.total:
            raise SumNotOne(f"masses sum to {Fraction(sum(self.weights), self.total)}, not 1")

    def __len__(self):
        return len(self.outcomes)

    @property
    def masses(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(w, self.total) for w in self.weights)

    @property
    def mass(self) -> dict[int, Fraction]:
        return dict(zip(self.outcomes, self.masses))

    @property
    def is_restricted(self) -> bool:
        return all(w > 0 for w in self.weights)


class PairLabel(tuple):
    """Value label produced by ``join``; renders as ``(a,b)``."""

    __slots__ = ()

    def __str__(self):
        return "(" + ",".join(str(v) for v in self) + ")"

    __repr__ = __str__


@dataclass(frozen=True, eq=False)
class RandomVariable:
    """A labelling of the positive-mass outcomes of a space.

    ``codes[i]`` is the dense value index of ``space.outcomes[i]``; codes are
    numbered in order of first appearance and ``values[c]`` is the label of
    code ``c``.  Only a.s. values are represented.
    """

    space: ProbabilitySpace
    codes: tuple[int, ...]
    values: tuple[Label, ...]
    name: str | None = field(default=None, compare=False)

    @property
    def labels(self) -> dict[int, Label]:
        return {o: self.values[c] for o, c in zip(self.space.outcomes, self.codes)}

    @property
    def cardinality(self) -> int:
        return len(self.values)

    @cached_property
    def value_weights(self) -> tuple[int, ...]:
        acc = [0] * len(self.values)
        for c, w in zip(self.codes, self.space.weights):
            acc[c] += w
        return tuple(acc)

    def with_name(self, name: str | None) -> "RandomVariable":
        return RandomVariable(self.space, self.codes, self.values, name)

    def __repr__(self):
        tag = f" {self.name}" if self.name else ""
        return f"<RandomVariable{tag}: {self.cardinality} values on {len(self.space)} outcomes>"


@dataclass(frozen=True)
class JointDistribution:
    """Sparse exact joint mass table of a pair of variables.

    ``weights[(i, j)]`` is the (positive) weight of the cell
    ``(row_values[i], col_values[j])``; absent cells have mass zero.
    """

    row_values: tuple[Label, ...]
    col_values: tuple[Label, ...]
    weights: Mapping[tuple[int, int], int]
    total: int

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_values), len(self.col_values)

    def entry(self, i: int, j: int) -> Fraction:
        return Fraction(self.weights.get((i, j), 0), self.total)

    @property
    def entries(self) -> list[list[Fraction]]:
        n, m = self.shape
        return [[self.entry(i, j) for j in range(m)] for i in range(n)]

    def row_sums(self) -> list[Fraction]:
        acc = [0] * len(self.row_values)
        for (i, _), w in self.weights.items():
            acc[i] += w
        return [Fraction(a, self.total) for a in acc]

    def col_sums(self) -> list[Fraction]:
        acc = [0] * len(self.col_values)
        for (_, j), w in self.weights.items():
            acc[j] += w
        return [Fraction(a, self.total) for a in acc]

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence], row_values=None, col_values=None):
        """Build from a dense matrix of rationals summing to one.

        Zero rows and columns are dropped (support restriction).
        """
        rows = [[Fraction(v) for v in row] for row in matrix]
        if not rows or not rows[0]:
            raise EmptySupport("empty matrix")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise LengthMismatch("ragged matrix")
        if any(v < 0 for r in rows for v in r):
            raise NegativeMass("negative joint mass")
        if sum(v for r in rows for v in r) != 1:
            raise SumNotOne("joint masses do not sum to 1")
        row_values = tuple(range(len(rows))) if row_values is None else tuple(row_values)
        col_values = tuple(range(width)) if col_values is None else tuple(col_values)
        keep_r = [i for i, r in enumerate(rows) if any(r)]
        keep_c = [j for j in range(width) if any(r[j] for r in rows)]
        den = lcm(*(v.denominator for r in rows for v in r))
        cells = {}
        for ni, i in enumerate(keep_r):
            for nj, j in enumerate(keep_c):
                v = rows[i][j]
                if v:
                    cells[(ni, nj)] = v.numerator * (den // v.denominator)
        return cls(
            tuple(row_values[i] for i in keep_r),
            tuple(col_values[j] for j in keep_c),
            cells,
            den,
        )


def new_space(masses: Sequence) -> ProbabilitySpace:
    """Space with outcome ids ``0..len(masses)-1`` and the given masses."""
    if not masses:
        raise EmptySupport("no masses given")
    fr = [Fraction(m) for m in masses]
    if any(m < 0 for m in fr):
        raise NegativeMass("negative mass")
    if sum(fr) != 1:
        raise SumNotOne(f"masses sum to {sum(fr)}, not 1")
    den = lcm(*(m.denominator for m in fr))
    weights = tuple(m.numerator * (den // m.denominator) for m in fr)
    return ProbabilitySpace(tuple(range(len(fr))), weights, den)


def space_from_weights(weights: Sequence[int]) -> ProbabilitySpace:
    """Space whose masses are proportional to non-negative integer weights."""
    weights = [int(w) for w in weights]
    if any(w < 0 for w in weights):
        raise NegativeMass("negative weight")
    total = sum(weights)
    if total == 0:
        raise EmptySupport("all weights are zero")
    g = 0
    for w in weights:
        g = gcd(g, w)
    return ProbabilitySpace(tuple(range(len(weights))), tuple(w // g for w in weights), total // g)


def uniform_space(n: int) -> ProbabilitySpace:
    return ProbabilitySpace(tuple(range(n)), (1,) * n, n)


def restrict_support(space: ProbabilitySpace) -> ProbabilitySpace:
    """Keep only the positive-mass outcomes; outcome ids are preserved."""
    if space.is_restricted:
        return space
    kept = [(o, w) for o, w in zip(space.outcomes, space.weights) if w > 0]
    if not kept:
        raise EmptySupport("every outcome has zero mass")
    outcomes, weights = zip(*kept)
    return ProbabilitySpace(tuple(outcomes), tuple(weights), space.total)


def _encode(labels: Iterable[Label]) -> tuple[tuple[int, ...], tuple[Label, ...]]:
    index: dict = {}
    codes = []
    for lab in labels:
        c = index.get(lab)
        if c is None:
            c = index[lab] = len(index)
        codes.append(c)
    return tuple(codes), tuple(index)


def rv(space: ProbabilitySpace, labels: Sequence[Label], name: str | None = None) -> RandomVariable:
    """Variable given by one label per outcome of ``space`` (restricted internally)."""
    if isinstance(labels, Mapping):
        try:
            labels = [labels[o] for o in space.outcomes]
        except KeyError as exc:
            raise LengthMismatch(f"no label for outcome {exc.args[0]}") from None
    labels = list(labels)
    if len(labels) != len(space.outcomes):
        raise LengthMismatch(f"{len(labels)} labels for {len(space.outcomes)} outcomes")
    restricted = restrict_support(space)
    if restricted is not space:
        labels = [lab for lab, w in zip(labels, space.weights) if w > 0]
    codes, values = _encode(labels)
    return RandomVariable(restricted, codes, values, name)


def from_function(space: ProbabilitySpace, f, name: str | None = None) -> RandomVariable:
    """Variable ``f(outcome)`` for each outcome id."""
    return rv(space, [f(o) for o in space.outcomes], name)


def map_values(X: RandomVariable, f, name: str | None = None) -> RandomVariable:
    """The variable ``f(X)`` for a function ``f`` of X's labels."""
    return rv(X.space, [f(X.values[c]) for c in X.codes], name)


def same_space(X: RandomVariable, Y: RandomVariable) -> ProbabilitySpace:
    if X.space is not Y.space and X.space != Y.space:
        raise SpaceMismatch("variables are defined on different probability spaces")
    return X.space


def joint_weights(X: RandomVariable, Y: RandomVariable) -> Counter:
    """Sparse ``(x code, y code) -> weight`` counts; shared-space check included."""
    space = same_space(X, Y)
    cells: Counter = Counter()
    for cx, cy, w in zip(X.codes, Y.codes, space.weights):
        cells[(cx, cy)] += w
    return cells


def joint(X: RandomVariable, Y: RandomVariable) -> JointDistribution:
    return JointDistribution(X.values, Y.values, dict(joint_weights(X, Y)), X.space.total)


def marginal(X: RandomVariable) -> dict[Label, Fraction]:
    return {v: Fraction(w, X.space.total) for v, w in zip(X.values, X.value_weights)}
