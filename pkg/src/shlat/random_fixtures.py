"""Seeded random spaces, variables and matrices for property checks."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from .probability import JointDistribution, RandomVariable, map_values, new_space, rv, space_from_weights


def random_space(rng: random.Random, max_outcomes: int = 8, max_weight: int = 5, zeros: bool = True):
    n = rng.randint(1, max_outcomes)
    lo = 0 if zeros else 1
    weights = [rng.randint(lo, max_weight) for _ in range(n)]
    if not any(weights):
        weights[rng.randrange(n)] = 1
    return space_from_weights(weights)


def random_variable(rng: random.Random, space, max_values: int = 6, name=None) -> RandomVariable:
    k = rng.randint(1, max_values)
    return rv(space, [rng.randrange(k) for _ in space.outcomes], name)


def random_quotient(rng: random.Random, X: RandomVariable, max_values: int | None = None, name=None) -> RandomVariable:
    """A random deterministic function of X."""
    k = rng.randint(1, max_values or X.cardinality)
    table = {v: rng.randrange(k) for v in X.values}
    return map_values(X, table.__getitem__, name)


def relabel(rng: random.Random, X: RandomVariable) -> RandomVariable:
    """A bijective recoding of X."""
    new = list(range(X.cardinality))
    rng.shuffle(new)
    table = dict(zip(X.values, (f"v{i}" for i in new)))
    return map_values(X, table.__getitem__)


def random_matrix(rng: random.Random, max_rows: int = 12, max_cols: int = 12) -> JointDistribution:
    """Random sparse joint matrix (no zero rows or columns after restriction)."""
    n = rng.randint(1, max_rows)
    m = rng.randint(1, max_cols)
    density = rng.choice((0.08, 0.15, 0.3, 0.6))
    cells = [[rng.randint(1, 9) if rng.random() < density else 0 for _ in range(m)] for _ in range(n)]
    if not any(any(r) for r in cells):
        cells[rng.randrange(n)][rng.randrange(m)] = 1
    total = sum(map(sum, cells))
    return JointDistribution.from_matrix([[Fraction(v, total) for v in r] for r in cells])


def _random_pmf(rng: random.Random, k: int, max_weight: int = 4) -> list[int]:
    return [rng.randint(1, max_weight) for _ in range(k)]


def rank_one_blocks(rng: random.Random):
    """``X = (U, W)`` and ``Y = (V, W)`` with U, V independent given W.

    Each conditional block has full support, so the communication classes of
    (X, Y) are exactly the values of W.
    """
    kw = rng.randint(1, 3)
    pw = _random_pmf(rng, kw)
    labels_x, labels_y, masses = [], [], []
    for w in range(kw):
        ku, kv = rng.randint(1, 3), rng.randint(1, 3)
        pu, pv = _random_pmf(rng, ku), _random_pmf(rng, kv)
        for u, v in product(range(ku), range(kv)):
            labels_x.append((u, w))
            labels_y.append((v, w))
            masses.append(Fraction(pw[w], sum(pw)) * Fraction(pu[u], sum(pu)) * Fraction(pv[v], sum(pv)))
    space = new_space(masses)
    return rv(space, labels_x, "X"), rv(space, labels_y, "Y")


def product_target(rng: random.Random, max_factors: int = 3):
    """Target X = (A_1, ..., A_r) of independent factors, with the factors."""
    r = rng.randint(1, max_factors)
    sizes = [rng.randint(1, 3) for _ in range(r)]
    while _prod(sizes) > 6:
        sizes[rng.randrange(r)] = 1
    pmfs = [_random_pmf(rng, s) for s in sizes]
    norm = [sum(p) for p in pmfs]
    keys = list(product(*(range(s) for s in sizes)))
    weights = []
    for key in keys:
        w = 1
        for i, v in enumerate(key):
            w *= pmfs[i][v] * (_prod(norm) // norm[i])
        weights.append(w)
    space = space_from_weights(weights)
    X = rv(space, keys, "X")
    factors = [rv(space, [k[i] for k in keys], f"A{i}") for i in range(r)]
    return X, factors


def _prod(xs) -> int:
    out = 1
    for x in xs:
        out *= x
    return out
