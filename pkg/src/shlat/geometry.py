"""Segments, convex envelopes and generated sublattices."""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .errors import SupportTooLarge, TooManyGenerators
from .lattice import is_equivalent, join, join_all
from .probability import RandomVariable, _encode, same_space


@dataclass(frozen=True)
class Limits:
    """Caps on the exponential enumerations."""

    max_generators: int = 10
    max_support: int = 8

    @classmethod
    def from_env(cls) -> "Limits":
        lim = cls()
        if "SHLAT_MAX_SUPPORT" in os.environ:
            lim = cls(lim.max_generators, int(os.environ["SHLAT_MAX_SUPPORT"]))
        if "SHLAT_MAX_GENERATORS" in os.environ:
            lim = cls(int(os.environ["SHLAT_MAX_GENERATORS"]), lim.max_support)
        return lim


class VariableSet:
    """Ordered set of pairwise non-equivalent variables.

    Adding a variable equivalent to an existing member is a no-op, so the
    earliest representative of each class is kept.
    """

    def __init__(self, members: Sequence[RandomVariable] = ()):
        self.members: list[RandomVariable] = []
        for m in members:
            self.add(m)

    def index(self, X: RandomVariable) -> int | None:
        for i, m in enumerate(self.members):
            if is_equivalent(m, X):
                return i
        return None

    def add(self, X: RandomVariable) -> bool:
        if self.members:
            same_space(self.members[0], X)
        if self.index(X) is not None:
            return False
        self.members.append(X)
        return True

    def __contains__(self, X: RandomVariable) -> bool:
        return self.index(X) is not None

    def __len__(self):
        return len(self.members)

    def __iter__(self) -> Iterator[RandomVariable]:
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]


def segment(X: RandomVariable, Y: RandomVariable) -> VariableSet:
    """The Rajski segment ``{X, X v Y, Y}`` with duplicates removed."""
    return VariableSet([X, join(X, Y), Y])


def convex_envelope(variables: Sequence[RandomVariable], limits: Limits | None = None) -> VariableSet:
    """Joins over all nonempty subsets, in order of subset size then index."""
    limits = limits or Limits.from_env()
    variables = list(variables)
    if len(variables) > limits.max_generators:
        raise TooManyGenerators(f"{len(variables)} generators exceed the cap of {limits.max_generators}")
    for V in variables[1:]:
        same_space(variables[0], V)
    out = VariableSet()
    for size in range(1, len(variables) + 1):
        for subset in combinations(range(len(variables)), size):
            J = join_all([variables[i] for i in subset])
            if size == 1 and variables[subset[0]].name:
                J = J.with_name(variables[subset[0]].name)
            elif all(variables[i].name for i in subset):
                J = J.with_name("v".join(variables[i].name for i in subset))
            out.add(J)
    return out


def is_convex(variables) -> bool:
    """Closed under pairwise joins (equivalently, contains all its segments)."""
    members = list(variables)
    vs = variables if isinstance(variables, VariableSet) else VariableSet(members)
    for a, b in combinations(members, 2):
        if join(a, b) not in vs:
            return False
    return True


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """Set partitions of ``range(n)`` as restricted growth strings, lexicographically."""
    if n == 0:
        yield ()
        return
    a = [0] * n

    def rec(i: int, top: int):
        if i == n:
            yield tuple(a)
            return
        for v in range(top + 2):
            a[i] = v
            yield from rec(i + 1, max(top, v))

    yield from rec(1, 0)


def generated_sublattice(X: RandomVariable, max_support: int | None = None) -> VariableSet:
    """All quotients of X (one per partition of its a.s. values)."""
    if max_support is None:
        max_support = Limits.from_env().max_support
    if X.cardinality > max_support:
        raise SupportTooLarge(f"{X.cardinality} values exceed the cap of {max_support}")
    out = VariableSet()
    for rgs in restricted_growth_strings(X.cardinality):
        codes, values = _encode(rgs[c] for c in X.codes)
        # distinct partitions are never equivalent, skip the O(n) dedup scan
        out.members.append(RandomVariable(X.space, codes, values))
    return out
