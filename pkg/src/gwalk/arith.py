"""Exact integer arithmetic: balanced division and the irrational thresholds.

Every comparison against sqrt(2n), sqrt(n/2) or (n+1)/(sqrt(2n)+1) is decided by
an integer inequality, so results are exact for arbitrarily large ``n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "BalancedDivision",
    "balanced_division",
    "isqrt",
    "floor_ratio",
    "ratio_at_most",
    "ratio_below",
    "count_below_ratio",
    "exceeds_sqrt2n",
    "k_below_upper",
    "divisors",
    "is_prime",
]


def _require_positive(**values: int) -> None:
    for name, v in values.items():
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise DomainError(f"{name} must be a positive integer, got {v!r}")


@dataclass(frozen=True)
class BalancedDivision:
    """``n = k*d + r`` with ``r`` in ``[-(d//2), ceil(d/2) - 1]``."""

    n: int
    d: int
    k: int
    r: int

    @property
    def margin(self) -> int:
        """``k - |r|``; the last column of the n = 20 table."""
        return self.k - abs(self.r)


def balanced_division(n: int, d: int) -> BalancedDivision:
    _require_positive(n=n, d=d)
    half = d // 2
    # shifting by d//2 before reducing puts r in [-(d//2), d - 1 - d//2]
    r = (n + half) % d - half
    return BalancedDivision(n, d, (n - r) // d, r)


def isqrt(m: int) -> int:
    if not isinstance(m, int) or m < 0:
        raise DomainError(f"isqrt needs a nonnegative integer, got {m!r}")
    return math.isqrt(m)


def ratio_at_most(q: int, n: int) -> bool:
    """True iff ``q * (sqrt(2n) + 1) <= n + 1``."""
    slack = n + 1 - q
    if q <= 0:
        return True
    return slack >= 0 and 2 * n * q * q <= slack * slack


def ratio_below(q: int, n: int) -> bool:
    """True iff ``q * (sqrt(2n) + 1) < n + 1``."""
    slack = n + 1 - q
    if q <= 0:
        return True
    return slack > 0 and 2 * n * q * q < slack * slack


def floor_ratio(n: int) -> int:
    """floor((n + 1) / (sqrt(2n) + 1)), computed without floating point."""
    _require_positive(n=n)
    # sqrt(2n) >= isqrt(2n), so this overestimates by at most one or two
    q = (n + 1) // (isqrt(2 * n) + 1)
    while not ratio_at_most(q, n):
        q -= 1
    while ratio_at_most(q + 1, n):
        q += 1
    return q


def count_below_ratio(n: int) -> int:
    """Number of positive integers ``k`` with ``k < (n + 1) / (sqrt(2n) + 1)``.

    Equal to :func:`floor_ratio` unless the ratio is itself an integer, which
    happens only at ``n = 2``.
    """
    q = floor_ratio(n)
    return q - 1 if q >= 1 and not ratio_below(q, n) else q


def exceeds_sqrt2n(d: int, n: int) -> bool:
    _require_positive(d=d, n=n)
    return d * d > 2 * n


def k_below_upper(k: int, n: int) -> bool:
    """True iff ``k < sqrt(n/2) + 1/2``, i.e. ``(2k - 1)^2 < 2n``."""
    _require_positive(k=k, n=n)
    return (2 * k - 1) ** 2 < 2 * n


def divisors(n: int) -> list[int]:
    _require_positive(n=n)
    small, large = [], []
    for i in range(1, isqrt(n) + 1):
        q, rem = divmod(n, i)
        if rem == 0:
            small.append(i)
            if q != i:
                large.append(q)
    return small + large[::-1]


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic for ``n < 3.3e24`` (Miller-Rabin with the first 12 prime bases)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True
