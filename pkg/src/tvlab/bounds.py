"""Closed-form bound calculators for topological Tverberg numbers.

The lower-bound route: a matroid of rank r with b disjoint bases admits a
Tverberg-style p-partition for every prime power p up to twice the root

    ell(b, r, x) = (2x + (r-x)b + sqrt((2x + b(r-x))^2 + 8bx^2)) / (8x)

with x = d+1, because such p satisfy the quadratic constraint

    -2xp^2 + (2x - xb + br)p + xb >= 0.                          (*)

All comparisons against ell are done in exact integer arithmetic (compare
squares against the radicand), so boundary prime powers are never
misclassified by floating point.

The upper-bound route caps the Tverberg number of any rank-r matroid in
dimension d >= r+2 by the non-prime-power ceiling of d/(d-r+1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import HypothesisViolated


@dataclass(frozen=True)
class BoundQuery:
    b: int
    r: int
    d: int

    def __post_init__(self):
        if self.b < 1 or self.r < 1 or self.d < 1:
            raise ValueError("b, r, d must be positive")

    @property
    def x(self) -> int:
        return self.d + 1


@dataclass(frozen=True)
class BoundReport:
    query: BoundQuery
    ell: float
    best_prime_power: int | None
    connectivity_lower: int | None
    upper_npp: int | None

    def to_dict(self) -> dict:
        return {
            "b": self.query.b,
            "r": self.query.r,
            "d": self.query.d,
            "ell": self.ell,
            "best_prime_power": self.best_prime_power,
            "connectivity_lower": self.connectivity_lower,
            "upper_npp": self.upper_npp,
        }


def _radicand(b: int, r: int, x: int) -> int:
    return (2 * x + b * (r - x)) ** 2 + 8 * b * x * x


def ell(b: int, r: int, x: int) -> float:
    """The closed-form threshold; p <= 2*ell(b,r,x) certifies (*)."""
    if b < 1 or r < 1 or x < 1:
        raise ValueError("b, r, x must be positive")
    return (2 * x + (r - x) * b + math.sqrt(_radicand(b, r, x))) / (8 * x)


def le_two_ell(p: int, b: int, r: int, x: int) -> bool:
    """Exact test of p <= 2*ell(b,r,x) (no floating point)."""
    lhs = 4 * x * p - (2 * x + (r - x) * b)
    if lhs <= 0:
        return True
    return lhs * lhs <= _radicand(b, r, x)


def quadratic_margin(p: int, b: int, r: int, x: int) -> int:
    """Left side of (*) at integer p; nonnegative means p is admissible."""
    return -2 * x * p * p + (2 * x - x * b + b * r) * p + x * b


def floor_two_ell(b: int, r: int, x: int) -> int:
    """Largest integer <= 2*ell(b,r,x), exactly."""
    n = (2 * x + (r - x) * b + math.isqrt(_radicand(b, r, x))) // (4 * x)
    while not le_two_ell(n, b, r, x):
        n -= 1
    while le_two_ell(n + 1, b, r, x):
        n += 1
    return n


def is_prime_power(n: int) -> bool:
    """True for p^m with p prime and m >= 1; 1 is not a prime power."""
    if n < 2:
        return False
    p = _smallest_prime_factor(n)
    while n % p == 0:
        n //= p
    return n == 1


def _smallest_prime_factor(n: int) -> int:
    if n % 2 == 0:
        return 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return f
        f += 2
    return n


def npp_ceiling(x) -> int:
    """Smallest integer >= max(x, 2) that is not a prime power.

    The sequence of admissible values starts 6, 10, 12, 14, 15, ...
    """
    if x < 0:
        raise ValueError("x must be nonnegative")
    k = max(2, math.ceil(x))
    while is_prime_power(k):
        k += 1
    return k


def tt_lower_bound(query: BoundQuery) -> BoundReport:
    """Largest prime power p <= 2*ell; every map to d-space then has a
    p-fold coincident partition.  None when 2*ell < 2."""
    b, r, x = query.b, query.r, query.x
    top = floor_two_ell(b, r, x)
    best = None
    for p in range(top, 1, -1):
        if is_prime_power(p):
            best = p
            break
    conn = None
    if best is not None:
        conn = math.ceil(Fraction(b * r, math.ceil(Fraction(b, best)) + 1)) - 2
    return BoundReport(query, ell(b, r, x), best, conn, None)


def tt_upper_bound(r: int, d: int) -> int:
    """Strict upper bound for the Tverberg number of any rank-r matroid in
    dimension d, valid for d >= 3 and r <= d-2."""
    if d < 3 or r > d - 2 or r < 1:
        raise HypothesisViolated("upper bound needs d >= 3 and 1 <= r <= d-2")
    return npp_ceiling(Fraction(d, d - r + 1))


def bound_report(b: int, r: int, d: int) -> BoundReport:
    """Combined report; the upper bound is included when its hypothesis holds."""
    query = BoundQuery(b, r, d)
    rep = tt_lower_bound(query)
    upper = None
    if d >= 3 and 1 <= r <= d - 2:
        upper = tt_upper_bound(r, d)
    return BoundReport(query, rep.ell, rep.best_prime_power,
                       rep.connectivity_lower, upper)
