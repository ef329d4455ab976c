"""Randomized property suites and the seeded sweep runner.

Each suite is a function ``rng -> list[str]`` that draws one random instance
and returns a description of every property it violates.  Trial ``i`` of
suite ``s`` under seed ``seed`` always uses ``Random(f"{seed}:{s}:{i}")``, so
a sweep gives the same answer whether it runs in one process or many.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from . import oracles
from .lattice import block_diagonalize, complement, is_equivalent, is_leq, is_zero, join, meet
from .metrics import (
    close,
    entropy,
    entropy_exact,
    inequality_suite,
    is_independent,
    joint_entropy,
    leq_tol,
    mutual_information,
    rajski_distance,
    shannon_distance,
    shannon_distance_exact,
)
from .random_fixtures import (
    product_target,
    random_matrix,
    random_quotient,
    random_space,
    random_variable,
    rank_one_blocks,
    relabel,
)
from .probability import joint
from .reconstruction import analyze

Suite = Callable[[random.Random], list]


def _three_variables(rng):
    space = random_space(rng)
    X = random_variable(rng, space)
    roll = rng.random()
    if roll < 0.15:
        Y = relabel(rng, X)
    elif roll < 0.35:
        Y = random_quotient(rng, X)
    else:
        Y = random_variable(rng, X.space)
    Z = random_variable(rng, X.space) if rng.random() < 0.7 else random_quotient(rng, join(X, Y))
    return X, Y, Z


def metric_axioms(rng) -> list[str]:
    X, Y, Z = _three_variables(rng)
    out = []
    for name, dist in (("D", shannon_distance), ("d", rajski_distance)):
        xy, yx, yz, xz, xx = dist(X, Y), dist(Y, X), dist(Y, Z), dist(X, Z), dist(X, X)
        if xx != 0:
            out.append(f"{name}(X,X) = {xx}")
        if xy != yx:
            out.append(f"{name} not symmetric: {xy} vs {yx}")
        if xy < -1e-12:
            out.append(f"{name} negative: {xy}")
        if not leq_tol(xz, xy + yz):
            out.append(f"{name} triangle: {xz} > {xy} + {yz}")
        if (xy <= 1e-12) != is_equivalent(X, Y):
            out.append(f"{name}(X,Y) = {xy} disagrees with equivalence")
    if rajski_distance(X, Y) > 1 + 1e-12:
        out.append("d above 1")
    return out


def submodularity(rng) -> list[str]:
    X, Y, _ = _three_variables(rng)
    lhs = entropy(meet(X, Y)) + joint_entropy(X, Y)
    rhs = entropy(X) + entropy(Y)
    return [] if leq_tol(lhs, rhs) else [f"H(meet)+H(join) = {lhs} > {rhs}"]


def common_vs_mutual(rng) -> list[str]:
    out = []
    X, Y, _ = _three_variables(rng)
    hm, i = entropy(meet(X, Y)), mutual_information(X, Y)
    if not leq_tol(hm, i):
        out.append(f"H(meet) = {hm} > I = {i}")
    U, V = rank_one_blocks(rng)
    m = meet(U, V)
    exact_gap = entropy_exact(U) + entropy_exact(V) - entropy_exact(join(U, V)) - entropy_exact(m)
    if not exact_gap.is_zero():
        out.append(f"rank-one fixture: I - H(meet) = {exact_gap} != 0")
    return out


def continuity(rng) -> list[str]:
    X, Y, _ = _three_variables(rng)
    Xp = _perturb(rng, X)
    Yp = _perturb(rng, Y)
    rep = inequality_suite(X, Y, Xp, Yp)
    return [f"{c.name}: {c.lhs} > {c.rhs}" for c in rep.violations]


def _perturb(rng, X):
    roll = rng.random()
    if roll < 0.25:
        return X
    if roll < 0.5:
        return random_quotient(rng, X)
    if roll < 0.75:
        return join(X, random_variable(rng, X.space, 3))
    return random_variable(rng, X.space)


def _below_target(rng):
    space = random_space(rng)
    X = random_variable(rng, space)
    if rng.random() < 0.3:
        X, factors = product_target(rng)
        Y = rng.choice(factors) if rng.random() < 0.7 else random_quotient(rng, X)
        Z = rng.choice(factors) if rng.random() < 0.7 else random_quotient(rng, X)
        return X, Y, Z
    return X, random_quotient(rng, X), random_quotient(rng, X)


def apollonius(rng) -> list[str]:
    X, Y, Z = _below_target(rng)
    lhs = shannon_distance(X, join(Y, Z))
    rhs = (shannon_distance(X, Y) + shannon_distance(X, Z) - shannon_distance(Y, Z)) / 2
    out = [] if close(lhs, rhs) else [f"D(X,YvZ) = {lhs} vs {rhs}"]
    exact = shannon_distance_exact(X, Y) + shannon_distance_exact(X, Z) - shannon_distance_exact(Y, Z)
    if exact != shannon_distance_exact(X, join(Y, Z)) * 2:
        out.append("exact identity fails")
    return out


def median_bounds(rng) -> list[str]:
    X, Y, Z = _below_target(rng)
    out = []
    indep = is_independent(Y, Z)
    if indep != oracles.independent(X.space.masses, Y.codes, Z.codes):
        out.append("independence test disagrees with oracle")
    # numerator form holds for every X, including deterministic ones
    gap = (
        shannon_distance_exact(X, join(Y, Z))
        + entropy_exact(X)
        - shannon_distance_exact(X, Y)
        - shannon_distance_exact(X, Z)
    )
    if gap.nats() < -1e-12:
        out.append(f"lower bound (numerators) fails: {gap}")
    if gap.is_zero() != indep:
        out.append(f"equality {gap.is_zero()} but independence {indep}")
    dy, dz, dyz = rajski_distance(X, Y), rajski_distance(X, Z), rajski_distance(X, join(Y, Z))
    if not is_zero(X):
        if not leq_tol(dy + dz, dyz + 1):
            out.append(f"d(X,Y)+d(X,Z) = {dy + dz} > d(X,YvZ)+1 = {dyz + 1}")
        if close(dy + dz, dyz + 1) != indep:
            out.append(f"float equality disagrees with independence {indep}")
    if not leq_tol(dyz, dy + dz):
        out.append(f"d(X,YvZ) = {dyz} > {dy + dz}")
    return out


def complement_post(rng) -> list[str]:
    space = random_space(rng)
    Y = random_variable(rng, space)
    X = random_quotient(rng, Y)
    Z, tensor = complement(X, Y)
    out = []
    if not is_equivalent(join(X, Z), Y):
        out.append("X v Z not equivalent to Y")
    if not is_zero(meet(X, Z)):
        out.append("X ^ Z not trivial")
    J = joint(X, Y)
    if tensor.marginalize_z().weights != J.weights:
        out.append("tensor marginal differs from joint")
    return out


def lattice_laws(rng) -> list[str]:
    X, Y, Z = _three_variables(rng)
    out = []
    if not is_equivalent(join(X, Y), join(Y, X)) or not is_equivalent(meet(X, Y), meet(Y, X)):
        out.append("commutativity")
    if not is_equivalent(join(join(X, Y), Z), join(X, join(Y, Z))):
        out.append("join associativity")
    if not is_equivalent(meet(meet(X, Y), Z), meet(X, meet(Y, Z))):
        out.append("meet associativity")
    if not is_equivalent(join(X, meet(X, Y)), X) or not is_equivalent(meet(X, join(X, Y)), X):
        out.append("absorption")
    leq = is_leq(X, Y)
    if leq != is_equivalent(join(X, Y), Y) or leq != is_equivalent(meet(X, Y), X):
        out.append("order disagrees with join/meet")
    m = X.space.masses
    if is_equivalent(X, Y) != oracles.equivalent(m, X.codes, Y.codes):
        out.append("equivalence disagrees with oracle")
    if leq != oracles.functional(m, X.codes, Y.codes):
        out.append("order disagrees with oracle")
    return out


def block_oracle(rng) -> list[str]:
    J = random_matrix(rng)
    dense = J.entries
    B = block_diagonalize(J)
    parts, masses = oracles.components_oracle(dense)
    n, m = J.shape
    got: dict[int, set] = {}
    for i in range(n):
        got.setdefault(B.row_block(i), set()).add(("r", i))
    for j in range(m):
        got.setdefault(B.col_block(j), set()).add(("c", j))
    got_parts = {frozenset(g) for g in got.values()}
    out = []
    if got_parts != parts or B.block_count != len(parts):
        out.append("partition differs from union-find")
        return out
    for b, g in got.items():
        if B.block_mass[b] != masses[frozenset(g)]:
            out.append(f"block {b} mass {B.block_mass[b]} vs {masses[frozenset(g)]}")
    P = B.permuted(J)
    for i in range(n):
        for j in range(m):
            if P[i][j] and B.block_of_row[i] != B.block_of_col[j]:
                out.append("nonzero cell outside the diagonal blocks")
                return out
    return out


def reconstruction(rng) -> list[str]:
    if rng.random() < 0.35:
        X, factors = product_target(rng)
        pool = factors + [random_quotient(rng, F) for F in factors]
        n = rng.randint(1, 4)
        comps = [rng.choice(pool) if rng.random() < 0.8 else random_quotient(rng, X) for _ in range(n)]
    else:
        space = random_space(rng)
        X = random_variable(rng, space)
        comps = [random_quotient(rng, X) for _ in range(rng.randint(1, 4))]
    rep = analyze(X, comps)
    out = [f"check {k} failed" for k, v in rep.checks.items() if not v]
    n = rep.n
    indep = oracles.independent(X.space.masses, *(C.codes for C in comps))
    if indep != rep.mutually_independent:
        out.append("mutual independence disagrees with oracle")
    if rep.ground_truth_perfect and not leq_tol(rep.sum_distances, n - 1):
        out.append(f"perfect but sum {rep.sum_distances} > {n - 1}")
    if indep and rep.sum_distances <= n - 1 + 1e-12 and not rep.ground_truth_perfect:
        out.append("independent and under the bound but not perfect")
    if is_zero(X):
        # every d is 0/0 := 0; only the numerator form (checked by analyze) is meaningful
        return out
    general = rep.sum_distances - rep.delta - (n - 1)
    if general > 1e-9:
        out.append(f"general inequality violated by {general}")
    if (abs(general) <= 1e-9) != indep:
        out.append(f"general equality gap {general} but independence {indep}")
    if rep.delta > 0:
        if n >= 2 and not rep.delta < rep.sum_distances:
            out.append(f"delta {rep.delta} not strictly below the sum {rep.sum_distances}")
        if n == 1 and not close(rep.delta, rep.sum_distances):
            out.append("single component: delta differs from d(X, X1)")
    return out


SUITES: dict[str, Suite] = {
    "metric_axioms": metric_axioms,
    "submodularity": submodularity,
    "common_vs_mutual": common_vs_mutual,
    "continuity": continuity,
    "apollonius": apollonius,
    "median_bounds": median_bounds,
    "complement": complement_post,
    "lattice_laws": lattice_laws,
    "block_oracle": block_oracle,
    "reconstruction": reconstruction,
}


@dataclass
class SuiteResult:
    suite: str
    trials: int
    failures: list[tuple[int, str]] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "trials": self.trials,
            "failures": len(self.failures),
            "examples": [{"trial": i, "message": msg} for i, msg in self.failures[:5]],
        }


def trial_rng(seed: int, suite: str, i: int) -> random.Random:
    return random.Random(f"{seed}:{suite}:{i}")


def _run_range(suite: str, seed: int, start: int, stop: int) -> list[tuple[int, str]]:
    fn = SUITES[suite]
    fails = []
    for i in range(start, stop):
        try:
            msgs = fn(trial_rng(seed, suite, i))
        except Exception as exc:  # a crash is a failure of the trial, not of the sweep
            msgs = [f"{type(exc).__name__}: {exc}"]
        fails.extend((i, m) for m in msgs)
    return fails


def run_suite(suite: str, trials: int, seed: int = 0, workers: int = 1, chunk: int = 1000) -> SuiteResult:
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    t0 = time.perf_counter()
    ranges = [(s, min(s + chunk, trials)) for s in range(0, trials, chunk)]
    if workers > 1 and len(ranges) > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_run_range, *zip(*((suite, seed, a, b) for a, b in ranges))))
    else:
        parts = [_run_range(suite, seed, a, b) for a, b in ranges]
    fails = [f for part in parts for f in part]
    return SuiteResult(suite, trials, fails, time.perf_counter() - t0)


def sweep(trials: int = 10_000, seed: int = 0, suites=None, workers: int = 1) -> list[SuiteResult]:
    return [run_suite(s, trials, seed, workers) for s in (suites or SUITES)]
