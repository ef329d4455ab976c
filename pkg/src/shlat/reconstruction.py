"""Perfect-reconstruction analysis of a variable from derived components.

Given ``X`` and components ``X_i <= X`` the analyzer computes the Rajski
distances ``d(X, X_i)``, applies the necessary, sufficient and approximate
reconstruction conditions, and decides ground truth directly by testing
whether ``X`` is equivalent to the join of the components.

Because every component lies below ``X``, ``H(X, X_i) = H(X)`` and all the
distances share the denominator ``H(X)``.  Sums, margins and equality cases
are therefore exact ``LogExpr`` numerators over that common denominator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import ComponentNotDerived
from .lattice import is_equivalent, is_leq, join_all
from .logexpr import LogExpr, LogRatio
from .metrics import REL_TOL, entropy_exact, shannon_distance_exact
from .probability import RandomVariable, map_values, same_space


def validate_components(X: RandomVariable, components: Sequence[RandomVariable]) -> bool:
    return all(is_leq(Xi, X) for Xi in components)


def mutually_independent(components: Sequence[RandomVariable]) -> bool:
    """Joint mass of every value tuple equals the product of the marginals."""
    components = list(components)
    if len(components) <= 1:
        return True
    space = components[0].space
    for C in components[1:]:
        same_space(components[0], C)
    expected_cells = 1
    for C in components:
        expected_cells *= C.cardinality
    if expected_cells > len(space):
        return False
    cells: dict[tuple, int] = {}
    for k, w in zip(zip(*(C.codes for C in components)), space.weights):
        cells[k] = cells.get(k, 0) + w
    if len(cells) != expected_cells:
        return False
    scale = space.total ** (len(components) - 1)
    margins = [C.value_weights for C in components]
    for key, w in cells.items():
        prod = 1
        for m, c in zip(margins, key):
            prod *= m[c]
        if w * scale != prod:
            return False
    return True


def components_from_maps(X: RandomVariable, maps: Sequence[Mapping], names=None) -> list[RandomVariable]:
    """Components ``f_i(X)`` given as label-to-label tables."""
    names = names or [None] * len(maps)
    return [map_values(X, lambda v, f=f: f[v], name) for f, name in zip(maps, names)]


def _sign(expr: LogExpr) -> int:
    if expr.is_zero():
        return 0
    return 1 if expr.nats() > 0 else -1


@dataclass
class ReconstructionReport:
    n: int
    distances: list[float]
    distances_exact: list[LogRatio]
    sum_distances: float
    sum_exact: LogRatio
    necessary_bound: int
    necessary_holds: bool
    mutually_independent: bool
    sufficient_applies: bool
    delta: float
    delta_exact: LogRatio
    ground_truth_perfect: bool
    general_equality: bool
    checks: dict[str, bool] = field(default_factory=dict)
    names: list[str | None] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return all(self.checks.values())

    @property
    def margin_exact(self) -> LogRatio:
        return self.sum_exact - self.necessary_bound

    @property
    def rho_sum(self) -> float:
        return self.n - self.sum_distances

    @property
    def theorem_verdict(self) -> str:
        """What the distance-sum conditions alone conclude, without the ground truth."""
        m = impossibility_margin(self)
        if m.status != "none":
            return m.status
        if self.sufficient_applies:
            return "possible"
        return "undetermined"

    @property
    def verdict(self) -> str:
        if self.ground_truth_perfect:
            return "PERFECT"
        return "IMPOSSIBLE" if self.theorem_verdict == "impossible" else "NOT PERFECT"

    def to_dict(self) -> dict:
        m = impossibility_margin(self)
        return {
            "n": self.n,
            "components": [
                {"name": name, "d": d, "d_exact": str(de)}
                for name, d, de in zip(self.names, self.distances, self.distances_exact)
            ],
            "sum_distances": self.sum_distances,
            "sum_exact": str(self.sum_exact),
            "necessary_bound": self.necessary_bound,
            "necessary_holds": self.necessary_holds,
            "mutually_independent": self.mutually_independent,
            "sufficient_applies": self.sufficient_applies,
            "delta": self.delta,
            "delta_exact": str(self.delta_exact),
            "general_equality": self.general_equality,
            "margin": m.value,
            "margin_exact": str(m.exact),
            "rho_sum": m.rho_sum,
            "theorem_verdict": self.theorem_verdict,
            "ground_truth_perfect": self.ground_truth_perfect,
            "verdict": self.verdict,
            "consistent": self.consistent,
            "checks": dict(self.checks),
        }


def analyze(X: RandomVariable, components: Sequence[RandomVariable]) -> ReconstructionReport:
    components = list(components)
    if not components:
        raise ValueError("analyze needs at least one component")
    for C in components:
        same_space(X, C)
    if not validate_components(X, components):
        raise ComponentNotDerived("every component must be a deterministic function of X")

    n = len(components)
    H = entropy_exact(X)
    numerators = [shannon_distance_exact(X, C) for C in components]
    dist_exact = [LogRatio(D, H) for D in numerators]
    sum_num = LogExpr.sum(numerators)
    J = join_all(components)
    delta_num = shannon_distance_exact(X, J)
    perfect = is_equivalent(X, J)
    independent = mutually_independent(components)

    bound_num = H * (n - 1)
    necessary = _sign(sum_num - bound_num) <= 0
    # sum d <= delta + n - 1, equality iff independent
    gap = sum_num - bound_num - delta_num
    general_equality = gap.is_zero()

    checks = {
        "necessary": (not perfect) or necessary,
        "equality_iff_independent": (not perfect) or ((sum_num == bound_num) == independent),
        "sufficient": not (independent and necessary) or perfect,
        "delta_zero_iff_perfect": delta_num.is_zero() == perfect,
        "general_inequality": _sign(gap) <= 0,
        "general_equality_iff_independent": general_equality == independent,
    }
    if not delta_num.is_zero():
        # a single component gives delta == sum d, so strictness needs n >= 2
        if n == 1:
            checks["delta_lower_single"] = sum_num == delta_num
        else:
            checks["delta_lower_strict"] = _sign(sum_num - delta_num) > 0
        checks["delta_upper"] = _sign(gap) <= 0

    return ReconstructionReport(
        n=n,
        distances=[float(d) for d in dist_exact],
        distances_exact=dist_exact,
        sum_distances=float(LogRatio(sum_num, H)),
        sum_exact=LogRatio(sum_num, H),
        necessary_bound=n - 1,
        necessary_holds=necessary,
        mutually_independent=independent,
        sufficient_applies=independent and necessary,
        delta=float(LogRatio(delta_num, H)),
        delta_exact=LogRatio(delta_num, H),
        ground_truth_perfect=perfect,
        general_equality=general_equality,
        checks=checks,
        names=[C.name for C in components],
    )


@dataclass(frozen=True)
class ImpossibilityMargin:
    """``sum d(X, X_i) - (n - 1)`` and its dependency-coefficient form."""

    value: float
    exact: LogRatio
    rho_sum: float
    rho_threshold: int = 1
    tolerance: float = REL_TOL

    @property
    def certified(self) -> bool:
        return self.value > self.tolerance

    @property
    def status(self) -> str:
        if self.certified:
            return "impossible"
        if self.exact.compare(0) > 0:
            return "boundary"
        return "none"

    def __float__(self):
        return self.value


def impossibility_margin(report: ReconstructionReport) -> ImpossibilityMargin:
    exact = report.margin_exact
    return ImpossibilityMargin(float(exact), exact, report.n - report.sum_distances)
