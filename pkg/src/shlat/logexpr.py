"""Exact entropic quantities as rational combinations of prime logarithms.

Every entropy of a distribution with rational masses is a finite sum
``sum_p c_p * log(p)`` over primes with rational coefficients.  Because the
logarithms of distinct primes are linearly independent over the rationals,
two such sums denote the same real number iff their coefficients agree, so
identities such as ``sum d(X, X_i) == n - 1`` can be decided without any
floating-point tolerance.  Values are base-agnostic; ``bits()`` evaluates in
base 2.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

_TRIAL_LIMIT = 1 << 20


@lru_cache(maxsize=65536)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorisation of a positive integer as ``((p, e), ...)``."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out = []
    for p in (2, 3, 5):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    d, step = 7, (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while d * d <= n and d < _TRIAL_LIMIT:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += step[i]
        i = (i + 1) & 7
    if n > 1:
        if d * d <= n:
            from sympy import factorint  # only reached for huge cofactors

            out.extend(sorted(factorint(n).items()))
        else:
            out.append((n, 1))
    return tuple(out)


class LogExpr:
    """Immutable ``sum_p c_p log p`` with ``Fraction`` coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Fraction] | None = None):
        items = {}
        if terms:
            for p, c in terms.items():
                c = Fraction(c)
                if c:
                    items[p] = c
        self._terms = tuple(sorted(items.items()))
        self._hash = None

    @classmethod
    def log(cls, value) -> "LogExpr":
        """``log(value)`` for a positive rational."""
        value = Fraction(value)
        if value <= 0:
            raise ValueError("log of a non-positive number")
        terms: dict[int, Fraction] = {}
        for p, e in factorize(value.numerator):
            terms[p] = terms.get(p, 0) + e
        for p, e in factorize(value.denominator):
            terms[p] = terms.get(p, 0) - e
        return cls(terms)

    @classmethod
    def zero(cls) -> "LogExpr":
        return cls()

    @classmethod
    def sum(cls, exprs: Iterable["LogExpr"]) -> "LogExpr":
        acc: dict[int, Fraction] = {}
        for e in exprs:
            for p, c in e._terms:
                acc[p] = acc.get(p, 0) + c
        return cls(acc)

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other):
        if not isinstance(other, LogExpr):
            return NotImplemented
        return LogExpr.sum((self, other))

    def __neg__(self):
        return LogExpr({p: -c for p, c in self._terms})

    def __sub__(self, other):
        if not isinstance(other, LogExpr):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k):
        k = Fraction(k)
        return LogExpr({p: c * k for p, c in self._terms})

    __rmul__ = __mul__

    def __truediv__(self, k):
        if isinstance(k, LogExpr):
            return LogRatio(self, k)
        return self * (1 / Fraction(k))

    def __eq__(self, other):
        if isinstance(other, LogExpr):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def bits(self) -> float:
        return math.fsum(float(c) * math.log2(p) for p, c in self._terms)

    def nats(self) -> float:
        return math.fsum(float(c) * math.log(p) for p, c in self._terms)

    __float__ = bits

    def multiple_of(self, other: "LogExpr") -> Fraction | None:
        """The rational ``r`` with ``self == r * other``, if one exists."""
        if not other._terms:
            return Fraction(0) if not self._terms else None
        if not self._terms:
            return Fraction(0)
        if {p for p, _ in self._terms} != {p for p, _ in other._terms}:
            return None
        mine = dict(self._terms)
        ratio = None
        for p, c in other._terms:
            r = mine[p] / c
            if ratio is None:
                ratio = r
            elif r != ratio:
                return None
        return ratio

    def __str__(self):
        if not self._terms:
            return "0"
        q = math.lcm(*(c.denominator for _, c in self._terms))
        num, den = 1, 1
        for p, c in self._terms:
            e = int(c * q)
            if e > 0:
                num *= p**e
            else:
                den *= p ** (-e)
        arg = Fraction(num, den)
        body = f"log({arg})"
        return body if q == 1 else f"{body}/{q}"

    def __repr__(self):
        return f"LogExpr({self})"


class LogRatio:
    """Exact quotient of two ``LogExpr`` values, with ``0/0 := 0``."""

    __slots__ = ("num", "den")

    def __init__(self, num: LogExpr, den: LogExpr):
        self.num = num
        self.den = den

    @classmethod
    def of(cls, value) -> "LogRatio":
        """A rational constant ``value`` as ``value*log(2)/log(2)``."""
        two = LogExpr.log(2)
        return cls(two * Fraction(value), two)

    def rational(self) -> Fraction | None:
        """Exact rational value when the ratio happens to be rational."""
        if self.den.is_zero():
            return Fraction(0) if self.num.is_zero() else None
        return self.num.multiple_of(self.den)

    def __float__(self):
        if self.den.is_zero():
            if self.num.is_zero():
                return 0.0
            raise ZeroDivisionError("LogRatio with zero denominator")
        return self.num.nats() / self.den.nats()

    def compare(self, value) -> int:
        """Sign of ``self - value`` for a rational ``value``; exact on ties."""
        value = Fraction(value)
        if self.den.is_zero():
            diff = Fraction(0) - value
            return (diff > 0) - (diff < 0)
        delta = self.num - self.den * value
        if delta.is_zero():
            return 0
        x = delta.nats() / self.den.nats()
        return 1 if x > 0 else -1

    def __eq__(self, other):
        if not isinstance(other, LogRatio):
            try:
                return self.compare(Fraction(other)) == 0
            except (TypeError, ValueError):
                return NotImplemented
        ra, rb = self.rational(), other.rational()
        if ra is not None or rb is not None:
            return ra == rb
        k = self.den.multiple_of(other.den)
        if k:
            return self.num == other.num * k
        # irrational ratios over unrelated denominators: no linear certificate
        return float(self) == float(other)

    __hash__ = None

    def __add__(self, other):
        if isinstance(other, LogRatio):
            if self.den == other.den:
                return LogRatio(self.num + other.num, self.den)
            raise ValueError("LogRatio sums need a common denominator")
        value = Fraction(other)
        return LogRatio(self.num + self.den * value, self.den)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, LogRatio):
            return self + LogRatio(-other.num, other.den)
        return self + (-Fraction(other))

    def __str__(self):
        r = self.rational()
        if r is not None:
            return str(r)
        return f"{_paren(self.num)}/{_paren(self.den)}"

    def __repr__(self):
        return f"LogRatio({self})"


def _paren(e: LogExpr) -> str:
    s = str(e)
    return s if s.endswith(")") or s == "0" else f"({s})"
