"""Executable fixtures for the worked applications.

Each generator builds a :class:`CaseInstance` whose ``expected`` mapping is
computed from closed-form formulas (counting arguments, linear algebra,
number theory) without calling the analyzer, so that comparing it with
:func:`shlat.reconstruction.analyze` is a genuine cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from typing import Any, Sequence

from .errors import BadDimensions, BadParameters, KTooLarge, NotCoprime, NotSymmetric, ZeroMass
from .lattice import join, meet
from .logexpr import LogExpr, LogRatio
from .probability import (
    ProbabilitySpace,
    RandomVariable,
    from_function,
    new_space,
    rv,
    uniform_space,
)
from .reconstruction import analyze, validate_components

MAX_SORT_K = 7


@dataclass
class CaseInstance:
    name: str
    space: ProbabilitySpace
    target: RandomVariable
    components: list[RandomVariable]
    expected: dict[str, Any] = field(default_factory=dict)
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        assert validate_components(self.target, self.components)

    def drop(self, index: int = -1) -> "CaseInstance":
        """The same instance with one component removed."""
        comps = list(self.components)
        if len(comps) < 2:
            raise BadParameters("cannot drop the only component")
        removed = comps.pop(index)
        expected = {k: v for k, v in self.expected.items() if k.startswith("dropped_")}
        return CaseInstance(
            f"{self.name}-without-{removed.name}",
            self.space,
            self.target,
            comps,
            {k[len("dropped_"):]: v for k, v in expected.items()},
            dict(self.params, dropped=removed.name),
        )


def check_expected(case: CaseInstance, report=None, tol: float = 1e-9) -> dict[str, bool]:
    """Compare every expected field with the analyzer report.

    Exact fields (``LogRatio``/``Fraction``/bool/int) compare exactly,
    ``*_float`` fields within ``tol``.
    """
    report = report or analyze(case.target, case.components)
    m = report.margin_exact
    observed = {
        "sum": report.sum_exact,
        "sum_float": report.sum_distances,
        "distances": report.distances_exact,
        "independent": report.mutually_independent,
        "perfect": report.ground_truth_perfect,
        "necessary_holds": report.necessary_holds,
        "margin": m,
        "delta": report.delta_exact,
    }
    out = {}
    for key, want in case.expected.items():
        if key not in observed:
            continue
        got = observed[key]
        if key.endswith("_float"):
            out[key] = math.isclose(got, want, rel_tol=tol, abs_tol=tol)
        elif key == "distances":
            out[key] = len(got) == len(want) and all(g == w for g, w in zip(got, want))
        else:
            out[key] = got == want
    return out


# -- sign and absolute value -------------------------------------------------


def sign_abs(values: Sequence, masses: Sequence | None = None, require_symmetric: bool = True) -> CaseInstance:
    """X with the given nonzero values and masses; components |X| and sgn X."""
    values = list(values)
    masses = [Fraction(1, len(values))] * len(values) if masses is None else [Fraction(m) for m in masses]
    if len(masses) != len(values):
        raise BadDimensions("values and masses differ in length")
    pmf: dict = {}
    for v, m in zip(values, masses):
        pmf[v] = pmf.get(v, 0) + m
    if pmf.get(0, 0) > 0:
        raise ZeroMass("P(X = 0) must be zero")
    symmetric = all(pmf.get(-v, 0) == m for v, m in pmf.items())
    if require_symmetric and not symmetric:
        raise NotSymmetric("distribution of X differs from that of -X")
    support = [v for v in pmf if pmf[v] > 0]
    space = new_space([pmf[v] for v in support])
    X = rv(space, support, "X")
    X1 = rv(space, [abs(v) for v in support], "|X|")
    X2 = rv(space, [1 if v > 0 else -1 for v in support], "sgn(X)")
    expected: dict[str, Any] = {"perfect": True, "independent": symmetric}
    if symmetric:
        # d(X,|X|) = log2/H(X) and d(X,sgn X) = 1 - log2/H(X)
        expected["sum"] = LogRatio.of(1)
    return CaseInstance("sign-abs", space, X, [X1, X2], expected, {"values": values, "symmetric": symmetric})


# -- integer division --------------------------------------------------------


def integer_division(m: int = 1) -> CaseInstance:
    """X uniform on 0..12m-1 with the quotients X // 2 and X // 3.

    ``d(X, X // a) = log a / log 12m``, so the distance sum shrinks as m grows
    while the pair never determines X (X = 0 and X = 1 share both quotients).
    """
    if m < 1:
        raise BadParameters("m must be positive")
    k = 12 * m
    space = uniform_space(k)
    X = from_function(space, lambda x: x, "X")
    comps = [from_function(space, lambda x, a=a: x // a, f"X div {a}") for a in (2, 3)]
    log_k = LogExpr.log(k)
    expected = {
        "sum": LogRatio(LogExpr.log(6), log_k),
        "distances": [LogRatio(LogExpr.log(2), log_k), LogRatio(LogExpr.log(3), log_k)],
        "necessary_holds": True,
        "perfect": False,
        "independent": False,
    }
    return CaseInstance("divisors", space, X, comps, expected, {"m": m, "k": k})


# -- linear codes ------------------------------------------------------------


@dataclass(frozen=True)
class FiniteField:
    """A field on ``0..q-1`` given by addition and multiplication tables."""

    q: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]

    @classmethod
    def prime(cls, p: int) -> "FiniteField":
        if p < 2 or any(p % d == 0 for d in range(2, math.isqrt(p) + 1)):
            raise BadParameters(f"{p} is not prime; pass explicit tables for prime powers")
        r = range(p)
        return cls(p, tuple(tuple((a + b) % p for b in r) for a in r), tuple(tuple(a * b % p for b in r) for a in r))

    def neg(self, a: int) -> int:
        return self.add[a].index(0)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.mul[a].index(1)

    def dot(self, xs, ys) -> int:
        acc = 0
        for a, b in zip(xs, ys):
            acc = self.add[acc][self.mul[a][b]]
        return acc


def rank(G: Sequence[Sequence[int]], field_: FiniteField) -> int:
    """Row rank of a matrix over the field, by Gaussian elimination."""
    rows = [list(r) for r in G]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field_.inv(rows[r][c])
        rows[r] = [field_.mul[inv][v] for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = field_.neg(rows[i][c])
                rows[i] = [field_.add[a][field_.mul[f][b]] for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def linear_code(q: int, k: int, n: int, G: Sequence[Sequence[int]], field_: FiniteField | None = None) -> CaseInstance:
    """X uniform on F_q^k, components the symbols of the codeword X.G."""
    field_ = field_ or FiniteField.prime(q)
    if field_.q != q:
        raise BadDimensions("field size differs from q")
    if len(G) != k or any(len(row) != n for row in G):
        raise BadDimensions(f"G must be {k}x{n}")
    if any(not 0 <= v < q for row in G for v in row):
        raise BadDimensions("entries of G must lie in 0..q-1")
    words = list(product(range(q), repeat=k))
    space = uniform_space(len(words))
    X = rv(space, words, "X")
    cols = [[G[r][c] for r in range(k)] for c in range(n)]
    comps = [rv(space, [field_.dot(w, col) for w in words], f"X{c + 1}") for c, col in enumerate(cols)]
    n_nonzero = sum(1 for col in cols if any(col))
    rk = rank(G, field_)
    # each nonzero column gives d = 1 - 1/k, each zero column d = 1
    per = [LogRatio.of(Fraction(1) - Fraction(1, k)) if any(col) else LogRatio.of(1) for col in cols]
    total = Fraction(n) - Fraction(n_nonzero, k)
    expected = {
        "sum": LogRatio.of(total),
        "distances": per,
        "perfect": rk == k,
        "necessary_holds": total <= n - 1,
    }
    return CaseInstance("linear-code", space, X, comps, expected, {"q": q, "k": k, "n": n, "rank": rk, "nonzero_columns": n_nonzero})


# -- prime valuations --------------------------------------------------------


def primes_upto(m: int) -> list[int]:
    sieve = [True] * (m + 1)
    sieve[:2] = [False] * min(2, m + 1)
    for p in range(2, math.isqrt(m) + 1):
        if sieve[p]:
            sieve[p * p :: p] = [False] * len(sieve[p * p :: p])
    return [p for p, ok in enumerate(sieve) if ok]


def valuation(x: int, p: int) -> int:
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    return e


def valuation_tail(m: int, exponents: dict[int, int]) -> dict[str, Fraction]:
    """P(X_p >= k_p for all p) for X uniform on 1..m: exact count and both closed forms."""
    div = 1
    for p, k in exponents.items():
        div *= p**k
    hits = sum(1 for x in range(1, m + 1) if all(valuation(x, p) >= k for p, k in exponents.items()))
    return {
        "exact": Fraction(hits, m),
        "floor": Fraction(m // div, m),
        "ceil": Fraction(-(-m // div), m),
    }


def prime_valuations(m: int) -> CaseInstance:
    """X uniform on 1..m with the p-adic valuations X_p, p <= m prime."""
    if m < 2:
        raise BadParameters("m must be at least 2")
    space = uniform_space(m)
    xs = list(range(1, m + 1))
    X = rv(space, xs, "X")
    ps = primes_upto(m)
    comps = [rv(space, [valuation(x, p) for x in xs], f"X{p}") for p in ps]
    # H(X|X_p) from the counts floor(m/p^k) - floor(m/p^(k+1)) of each level set
    log_m = LogExpr.log(m)
    nums = []
    for p in ps:
        acc = LogExpr.zero()
        k = 0
        while p**k <= m:
            c = m // p**k - m // p ** (k + 1)
            if c > 1:
                acc = acc + LogExpr.log(c) * Fraction(c, m)
            k += 1
        nums.append(acc)
    n = len(ps)
    bound = n - math.lgamma(m + 1) / (m * math.log(m))
    expected = {
        "perfect": True,
        "sum": LogRatio(LogExpr.sum(nums), log_m),
        "distances": [LogRatio(a, log_m) for a in nums],
        "valuation_bound_float": bound,
    }
    return CaseInstance("primes", space, X, comps, expected, {"m": m, "primes": ps, "bound_symbolic": f"{n} - log({m}!)/({m}*log({m}))"})


# -- Chinese remainders ------------------------------------------------------


def crt(moduli: Sequence[int]) -> CaseInstance:
    """X uniform on 0..k-1 with its residues modulo pairwise coprime moduli."""
    moduli = [int(k) for k in moduli]
    if not moduli or any(k <= 1 for k in moduli):
        raise BadParameters("moduli must be integers > 1")
    for i in range(len(moduli)):
        for j in range(i + 1, len(moduli)):
            if math.gcd(moduli[i], moduli[j]) != 1:
                raise NotCoprime(f"gcd({moduli[i]}, {moduli[j]}) = {math.gcd(moduli[i], moduli[j])}")
    k = math.prod(moduli)
    space = uniform_space(k)
    X = from_function(space, lambda x: x, "X")
    comps = [from_function(space, lambda x, ki=ki: x % ki, f"X mod {ki}") for ki in moduli]
    n = len(moduli)
    log_k = LogExpr.log(k)
    expected = {
        "sum": LogRatio.of(n - 1),
        "distances": [LogRatio(log_k - LogExpr.log(ki), log_k) for ki in moduli],
        "independent": True,
        "perfect": True,
        # without the last residue: n - 2 + log k_n / log k, margin log k_n / log k
        "dropped_sum": LogRatio(log_k * (n - 2) + LogExpr.log(moduli[-1]), log_k),
        "dropped_margin": LogRatio(LogExpr.log(moduli[-1]), log_k),
        "dropped_distances": [LogRatio(log_k - LogExpr.log(ki), log_k) for ki in moduli[:-1]],
        "dropped_perfect": False,
        "dropped_independent": True,
    }
    return CaseInstance("crt", space, X, comps, expected, {"moduli": moduli, "k": k})


# -- comparison sorting ------------------------------------------------------


def sort_lower_bound(k: int) -> int:
    """ceil(log2 k!), computed on integers."""
    return (math.factorial(k) - 1).bit_length()


def sorting_bound(k: int, comparisons: Sequence[tuple[int, int]] | None = None) -> CaseInstance:
    """Uniform random permutation of 1..k observed through comparison bits.

    ``comparisons`` holds 1-based position pairs ``(i, j)``; the bit is 1 when
    ``X_i < X_j``.  Defaults to every pair ``i < j``.
    """
    if k > MAX_SORT_K:
        raise KTooLarge(f"k = {k} exceeds the cap of {MAX_SORT_K}")
    if k < 2:
        raise BadParameters("k must be at least 2")
    if comparisons is None:
        comparisons = [(i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1)]
    comparisons = [tuple(c) for c in comparisons]
    for i, j in comparisons:
        if not (1 <= i <= k and 1 <= j <= k) or i == j:
            raise BadParameters(f"bad comparison ({i}, {j})")
    perms = list(permutations(range(1, k + 1)))
    space = uniform_space(len(perms))
    X = rv(space, perms, "X")
    comps = [rv(space, [int(p[i - 1] < p[j - 1]) for p in perms], f"X{i},{j}") for i, j in comparisons]
    n = len(comparisons)
    log_kf = LogExpr.log(math.factorial(k))
    log2 = LogExpr.log(2)
    lower = sort_lower_bound(k)
    expected = {
        "distances": [LogRatio(log_kf - log2, log_kf)] * n,
        "sum": LogRatio((log_kf - log2) * n, log_kf),
        "lower_bound": lower,
    }
    if n < lower:
        expected["perfect"] = False
    return CaseInstance("sort", space, X, comps, expected, {"k": k, "comparisons": comparisons, "lower_bound": lower})


# -- discontinuity of the meet -----------------------------------------------


def epsilon_chain(N: int, epsilon) -> CaseInstance:
    """Pair (X, Y) with cyclic joint matrix: (1-eps)/N on the diagonal, eps/N next to it."""
    epsilon = Fraction(epsilon)
    if N < 2 or not 0 <= epsilon < 1:
        raise BadParameters("need N >= 2 and 0 <= epsilon < 1")
    cells = []
    masses = []
    for i in range(N):
        cells.append((i, i))
        masses.append((1 - epsilon) / N)
        cells.append((i, (i + 1) % N))
        masses.append(epsilon / N)
    space = new_space(masses)
    X = rv(space, [c[0] for c in cells], "X")
    Y = rv(space, [c[1] for c in cells], "Y")
    target = join(X, Y).with_name("XvY")
    blocks = N if epsilon == 0 else 1
    expected = {
        "meet_blocks": blocks,
        # meet uniform on its classes: H = log(blocks)
        "meet_entropy": LogExpr.log(blocks),
    }
    return CaseInstance("epsilon-chain", space, target, [X, Y], expected, {"N": N, "epsilon": epsilon})


def epsilon_chain_meet(case: CaseInstance) -> RandomVariable:
    X, Y = case.components
    return meet(X, Y, "XmY")
