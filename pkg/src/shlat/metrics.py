"""Entropies, entropic distances and the structural tests built on them.

Float results are in bits.  Each quantity also has an ``*_exact`` variant
returning a :class:`~shlat.logexpr.LogExpr`, used wherever an identity has to
be decided rather than approximated.  Conditional entropies are summed
cell by cell as ``p(x,y) log(p(y)/p(x,y))`` so that functional dependence
gives an exact zero.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DeterministicOperand
from .lattice import is_equivalent, is_leq, join, meet
from .logexpr import LogExpr, LogRatio, factorize
from .probability import RandomVariable, joint_weights, same_space

REL_TOL = 1e-9


def close(a: float, b: float, tol: float = REL_TOL) -> bool:
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def leq_tol(a: float, b: float, tol: float = REL_TOL) -> bool:
    return a <= b + tol * max(1.0, abs(a), abs(b))


# -- float entropies ---------------------------------------------------------


def _entropy_of_weights(weights, total: int) -> float:
    lt = math.log2(total)
    return math.fsum(w * (lt - math.log2(w)) for w in weights if w) / total


def entropy(X: RandomVariable) -> float:
    return _entropy_of_weights(X.value_weights, X.space.total)


def joint_entropy(X: RandomVariable, Y: RandomVariable) -> float:
    return _entropy_of_weights(joint_weights(X, Y).values(), X.space.total)


def conditional_entropy(X: RandomVariable, Y: RandomVariable) -> float:
    """H(X|Y) in bits."""
    cells = joint_weights(X, Y)
    wy = Y.value_weights
    return math.fsum(w * math.log2(wy[cy] / w) for (_, cy), w in cells.items()) / X.space.total


def mutual_information(X: RandomVariable, Y: RandomVariable) -> float:
    return entropy(X) - conditional_entropy(X, Y)


def conditional_mutual_information(X: RandomVariable, Z: RandomVariable, given: RandomVariable) -> float:
    """I(X;Z|Y) = H(X|Y) + H(Z|Y) - H(X,Z|Y)."""
    return (
        conditional_entropy(X, given)
        + conditional_entropy(Z, given)
        - conditional_entropy(join(X, Z), given)
    )


def shannon_distance(X: RandomVariable, Y: RandomVariable) -> float:
    return conditional_entropy(X, Y) + conditional_entropy(Y, X)


def rajski_distance(X: RandomVariable, Y: RandomVariable) -> float:
    h = joint_entropy(X, Y)
    if h == 0.0:
        return 0.0
    return shannon_distance(X, Y) / h


def dependency(X: RandomVariable, Y: RandomVariable) -> float:
    if X.cardinality == 1 or Y.cardinality == 1:
        raise DeterministicOperand("dependency coefficient needs non-deterministic operands")
    return 1.0 - rajski_distance(X, Y)


# -- exact entropies ---------------------------------------------------------


def _add_log(acc: dict, coef: Fraction, n: int) -> None:
    for p, e in factorize(n):
        acc[p] = acc.get(p, 0) + coef * e


def _exact_from_weights(weights, total: int) -> LogExpr:
    acc: dict = {}
    grouped = Counter(w for w in weights if w)
    for w, count in grouped.items():
        coef = Fraction(w * count, total)
        _add_log(acc, coef, total)
        _add_log(acc, -coef, w)
    return LogExpr(acc)


def entropy_exact(X: RandomVariable) -> LogExpr:
    return _exact_from_weights(X.value_weights, X.space.total)


def joint_entropy_exact(X: RandomVariable, Y: RandomVariable) -> LogExpr:
    return _exact_from_weights(joint_weights(X, Y).values(), X.space.total)


def conditional_entropy_exact(X: RandomVariable, Y: RandomVariable) -> LogExpr:
    cells = joint_weights(X, Y)
    wy = Y.value_weights
    grouped: Counter = Counter()
    for (_, cy), w in cells.items():
        if w != wy[cy]:
            grouped[(w, wy[cy])] += w
    acc: dict = {}
    total = X.space.total
    for (w, w_y), mass in grouped.items():
        coef = Fraction(mass, total)
        _add_log(acc, coef, w_y)
        _add_log(acc, -coef, w)
    return LogExpr(acc)


def mutual_information_exact(X: RandomVariable, Y: RandomVariable) -> LogExpr:
    return entropy_exact(X) - conditional_entropy_exact(X, Y)


def shannon_distance_exact(X: RandomVariable, Y: RandomVariable) -> LogExpr:
    return conditional_entropy_exact(X, Y) + conditional_entropy_exact(Y, X)


def rajski_distance_exact(X: RandomVariable, Y: RandomVariable) -> LogRatio:
    return LogRatio(shannon_distance_exact(X, Y), joint_entropy_exact(X, Y))


# -- exact independence tests ------------------------------------------------


def is_independent(X: RandomVariable, Y: RandomVariable) -> bool:
    """``P(x, y) == P(x) P(y)`` for every value pair, in exact arithmetic."""
    cells = joint_weights(X, Y)
    if len(cells) != X.cardinality * Y.cardinality:
        return False
    total = X.space.total
    wx, wy = X.value_weights, Y.value_weights
    return all(w * total == wx[a] * wy[b] for (a, b), w in cells.items())


def is_conditionally_independent(X: RandomVariable, Z: RandomVariable, given: RandomVariable) -> bool:
    """Whether every conditional block ``P(x, z | y)`` is a rank-one product."""
    space = same_space(X, Z)
    same_space(X, given)
    xyz: Counter = Counter()
    xy: Counter = Counter()
    zy: Counter = Counter()
    for cx, cz, cy, w in zip(X.codes, Z.codes, given.codes, space.weights):
        xyz[(cx, cz, cy)] += w
        xy[(cx, cy)] += w
        zy[(cz, cy)] += w
    xs_in: Counter = Counter(cy for (_, cy) in xy)
    zs_in: Counter = Counter(cy for (_, cy) in zy)
    cells_in: Counter = Counter(cy for (_, _, cy) in xyz)
    if any(cells_in[y] != xs_in[y] * zs_in[y] for y in cells_in):
        return False
    wy = given.value_weights
    return all(w * wy[cy] == xy[(cx, cy)] * zy[(cz, cy)] for (cx, cz, cy), w in xyz.items())


# -- alignment ---------------------------------------------------------------


def is_aligned_shannon(X: RandomVariable, Y: RandomVariable, Z: RandomVariable) -> bool:
    """``D(X,Y) + D(Y,Z) == D(X,Z)``: X - Y - Z is Markov and Y <= X v Z."""
    return is_leq(Y, join(X, Z)) and is_conditionally_independent(X, Z, Y)


def is_aligned_rajski(X: RandomVariable, Y: RandomVariable, Z: RandomVariable) -> bool:
    """``d(X,Y) + d(Y,Z) == d(X,Z)`` iff Y is the join of X and Z."""
    return is_equivalent(Y, join(X, Z))


# -- inequality checks -------------------------------------------------------


@dataclass(frozen=True)
class Inequality:
    name: str
    lhs: float
    rhs: float

    @property
    def holds(self) -> bool:
        return leq_tol(self.lhs, self.rhs)

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs


@dataclass
class InequalityReport:
    checks: list[Inequality] = field(default_factory=list)

    @property
    def violations(self) -> list[Inequality]:
        return [c for c in self.checks if not c.holds]

    @property
    def all_hold(self) -> bool:
        return not self.violations

    def __getitem__(self, name: str) -> Inequality:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def inequality_suite(X, Y, Xp, Yp) -> InequalityReport:
    """Evaluate both sides of the continuity and submodularity inequalities."""
    H = entropy
    D = shannon_distance
    hx, hy, hxp, hyp = H(X), H(Y), H(Xp), H(Yp)
    dxx, dyy = D(X, Xp), D(Y, Yp)
    hxy, hxpyp = joint_entropy(X, Y), joint_entropy(Xp, Yp)
    m = meet(X, Y)
    rep = InequalityReport()
    add = rep.checks.append
    add(Inequality("bound1(X,Y)", abs(hx - hy), D(X, Y)))
    add(Inequality("bound1(X,X')", abs(hx - hxp), dxx))
    add(Inequality("bound1(Y,Y')", abs(hy - hyp), dyy))
    add(Inequality("bound2", abs(hxy - hxpyp), dxx + dyy))
    add(Inequality("bound3", abs(conditional_entropy(X, Y) - conditional_entropy(Xp, Yp)), dxx + 2 * dyy))
    add(Inequality("bound4", abs(mutual_information(X, Y) - mutual_information(Xp, Yp)), 2 * (dxx + dyy)))
    add(Inequality("join_continuity", D(join(X, Y), join(Xp, Yp)), dxx + dyy))
    add(Inequality("submodularity", H(m) + hxy, hx + hy))
    add(Inequality("common_vs_mutual", H(m), mutual_information(X, Y)))
    return rep
