"""Brute-force reference implementations used to cross-check the fast paths.

Nothing here imports the lattice or metric modules: the oracles work from
raw label lists and ``Fraction`` masses so that agreement is meaningful.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence


class UnionFind:
    """Disjoint sets over ``0..n-1`` with path halving and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True


def components_oracle(matrix: Sequence[Sequence[Fraction]]):
    """Connected components of the bipartite graph of nonzero cells.

    Returns ``(parts, masses)`` where ``parts`` is a set of frozensets of
    ``("r", i)``/``("c", j)`` nodes and ``masses`` maps each part to its total.
    Rows and columns without any nonzero cell are ignored.
    """
    n = len(matrix)
    m = len(matrix[0]) if n else 0
    uf = UnionFind(n + m)
    for i in range(n):
        for j in range(m):
            if matrix[i][j]:
                uf.union(i, n + j)
    groups: dict[int, set] = {}
    for i in range(n):
        if any(matrix[i]):
            groups.setdefault(uf.find(i), set()).add(("r", i))
    for j in range(m):
        if any(matrix[i][j] for i in range(n)):
            groups.setdefault(uf.find(n + j), set()).add(("c", j))
    parts = {frozenset(g) for g in groups.values()}
    masses = {}
    for part in parts:
        rows = [i for kind, i in part if kind == "r"]
        masses[part] = sum((matrix[i][j] for i in rows for j in range(m)), Fraction(0))
    return parts, masses


def functional(masses: Sequence[Fraction], a: Sequence, b: Sequence) -> bool:
    """Whether ``a`` is a function of ``b`` on positive-mass outcomes."""
    seen: dict = {}
    for p, x, y in zip(masses, a, b):
        if p > 0 and seen.setdefault(y, x) != x:
            return False
    return True


def equivalent(masses, a, b) -> bool:
    return functional(masses, a, b) and functional(masses, b, a)


def distribution(masses, labels) -> dict:
    out: dict = {}
    for p, x in zip(masses, labels):
        if p > 0:
            out[x] = out.get(x, Fraction(0)) + p
    return out


def entropy(masses, labels) -> float:
    """Shannon entropy in bits straight from the definition."""
    return -sum(float(p) * math.log2(p) for p in distribution(masses, labels).values())


def independent(masses, *label_lists) -> bool:
    """Exact mutual independence by enumerating every value tuple."""
    margins = [distribution(masses, labels) for labels in label_lists]
    jointd = distribution(masses, list(zip(*label_lists)))

    def rec(i, key, prob):
        if i == len(margins):
            return jointd.get(tuple(key), Fraction(0)) == prob
        return all(rec(i + 1, key + [v], prob * p) for v, p in margins[i].items())

    return rec(0, [], Fraction(1))
