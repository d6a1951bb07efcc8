"""Membership in the obstruction set A_n and the predicates derived from it."""

from __future__ import annotations

from dataclasses import dataclass

from .arith import _require_positive, balanced_division

__all__ = [
    "ObstructionSet",
    "is_unavoidable",
    "obstruction_set",
    "guaranteed_by_halfsquare",
    "forces_from_complex",
]


def is_unavoidable(n: int, d: int) -> bool:
    """True iff every walk containing the difference ``n`` also contains ``d``."""
    return forces_from_complex(n, 0, d)


def forces_from_complex(n: int, h: int, d: int) -> bool:
    """True iff any walk containing the complex difference ``n + ih`` contains ``d``.

    The criterion is ``k(n, d) >= |r(n, d)| + |h| + 1``.
    """
    bd = balanced_division(n, d)
    return bd.k >= abs(bd.r) + abs(h) + 1


def guaranteed_by_halfsquare(n: int, d: int) -> bool:
    _require_positive(n=n, d=d)
    return 2 * n >= d * d


@dataclass(frozen=True)
class ObstructionSet:
    n: int
    members: tuple[int, ...]

    def __contains__(self, d: object) -> bool:
        if not isinstance(d, int) or d < 1:
            return False
        return is_unavoidable(self.n, d)

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def obstruction_set(n: int) -> ObstructionSet:
    """Enumerate A_n.

    Enumeration stops at ``d = n``: past ``n`` the quotient is at most 1 and
    ``|r|`` is at least 1, so no larger ``d`` qualifies.
    """
    _require_positive(n=n)
    # inline the predicate; this runs up to n = 10**6 in the asymptotic report
    members = []
    for d in range(1, n + 1):
        half = d // 2
        r = (n + half) % d - half
        if (n - r) // d > abs(r):
            members.append(d)
    return ObstructionSet(n, tuple(members))
