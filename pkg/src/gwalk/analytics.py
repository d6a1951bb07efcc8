"""The closed form for |A_n|, its asymptotics, and the divisor-window questions.

The classifiers never trust a case analysis on its own. A ``member`` verdict
carries a walk whose actual differences satisfy the hypothesis, and a
``non-member`` verdict carries a divisor whose whole window is forced into
every walk realising ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from typing import Literal

from .arith import (
    _require_positive,
    balanced_division,
    count_below_ratio,
    divisors,
    exceeds_sqrt2n,
    is_prime,
    isqrt,
    k_below_upper,
    ratio_below,
)
from .construction import AvoidanceCertificate, avoiding_walk
from .errors import FormulaMismatch, VerdictContradiction, WitnessNotFound
from .membership import is_unavoidable, obstruction_set
from .walks import Walk, contains_forbidden, walk_to_json

__all__ = [
    "CardinalityBreakdown",
    "AsymptoticRow",
    "Obstruction",
    "ClassificationReport",
    "theta",
    "cardinality_breakdown",
    "asymptotic_report",
    "q2_is_divisor_set",
    "q2_classify",
    "hypothesis_holds",
    "find_obstruction",
    "find_witness",
    "straight_walk",
    "q4_classify",
    "q5_case1_factor",
    "q5_failed_thresholds",
    "q5_classify",
    "q5_exceptional_scan",
]

Verdict = Literal["member", "non-member", "undetermined"]


# ---------------------------------------------------------------- cardinality


def theta(n: int) -> int:
    """Members ``d > sqrt(2n)`` whose quotient lies in the narrow band.

    The band is ``(n+1)/(sqrt(2n)+1) <= k < sqrt(n/2) + 1/2``. A member has
    ``|r| <= k - 1``, so each ``k`` offers at most ``2k - 1`` candidate ``d``.
    """
    _require_positive(n=n)
    found = set()
    k = count_below_ratio(n) + 1
    while k_below_upper(k, n):
        if not ratio_below(k, n):
            for r in range(-(k - 1), k):
                d, rem = divmod(n - r, k)
                if rem or d < 1:
                    continue
                if exceeds_sqrt2n(d, n) and balanced_division(n, d).k == k and is_unavoidable(n, d):
                    found.add(d)
        k += 1
    return len(found)


@dataclass(frozen=True)
class CardinalityBreakdown:
    n: int
    floor_sqrt2n: int
    twice_floor_ratio: int
    small_divisor_count: int
    theta: int
    total: int

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.floor_sqrt2n, self.twice_floor_ratio, self.small_divisor_count, self.theta, self.total)

    def expression(self) -> str:
        return (
            f"{self.floor_sqrt2n} + {self.twice_floor_ratio} - {self.small_divisor_count}"
            f" + {self.theta} = {self.total}"
        )


def cardinality_breakdown(n: int, check: bool = True) -> CardinalityBreakdown:
    """Evaluate the closed form term by term, then compare with enumeration.

    Raises :class:`FormulaMismatch` if the two disagree.
    """
    _require_positive(n=n)
    a = isqrt(2 * n)
    # k strictly below the ratio; the floor differs only when the ratio is an
    # integer, which happens at n = 2
    b = 2 * count_below_ratio(n)
    c = sum(1 for d in divisors(n) if ratio_below(d, n))
    t = theta(n)
    total = a + b - c + t
    if check:
        actual = len(obstruction_set(n))
        if actual != total:
            raise FormulaMismatch(f"|A_{n}| = {actual} but the formula gives {a} + {b} - {c} + {t} = {total}")
    return CardinalityBreakdown(n, a, b, c, t, total)


@dataclass(frozen=True)
class AsymptoticRow:
    n: int
    size: int
    ratio: Decimal  # |A_n| / (2 sqrt(2n)), 6 places, half-even


def asymptotic_report(samples: list[int]) -> list[AsymptoticRow]:
    rows = []
    for n in samples:
        size = cardinality_breakdown(n).total
        with localcontext() as ctx:
            ctx.prec = 40
            ratio = Decimal(size) / (2 * Decimal(2 * n).sqrt())
            ratio = ratio.quantize(Decimal("0.000001"), rounding=ROUND_HALF_EVEN)
        rows.append(AsymptoticRow(n, size, ratio))
    return rows


def q2_is_divisor_set(n: int) -> bool:
    return list(obstruction_set(n).members) == divisors(n)


def q2_classify(n: int) -> ClassificationReport:
    _require_positive(n=n)
    return ClassificationReport("Q2", n, "member" if q2_is_divisor_set(n) else "non-member")


# ----------------------------------------------------------- window questions
#
# Both questions fix a half-width K (K = 1 for Question 4) and look at every
# divisor d of n with K < d < n - K. The hypothesis asks that the window
# d-K .. d+K either consists of divisors of n or misses the walk's differences
# somewhere. For K = 1 the range 1 < d < n - 1 agrees with 1 < d < n, since
# n - 1 divides n only when n = 2.


def _windows(n: int, K: int) -> list[tuple[int, range]]:
    return [(d, range(d - K, d + K + 1)) for d in divisors(n) if K < d < n - K]


def _all_divide(n: int, window: range) -> bool:
    return all(n % v == 0 for v in window)


def hypothesis_holds(walk: Walk, n: int, K: int) -> bool:
    """Check the window hypothesis against ``walk``'s actual differences."""
    if not contains_forbidden(walk, n):
        return False
    for _, window in _windows(n, K):
        if not _all_divide(n, window) and all(contains_forbidden(walk, v) for v in window):
            return False
    return True


@dataclass(frozen=True)
class Obstruction:
    """A divisor whose entire window lies in A_n without dividing ``n``."""

    divisor: int
    window: tuple[int, ...]
    non_divisors: tuple[int, ...]

    def verify(self, n: int, K: int) -> bool:
        d = self.divisor
        return (
            n % d == 0
            and K < d < n - K
            and self.window == tuple(range(d - K, d + K + 1))
            and all(is_unavoidable(n, v) for v in self.window)
            and len(self.non_divisors) > 0
            and all(n % v for v in self.non_divisors)
        )

    def to_json(self) -> dict:
        return {"divisor": self.divisor, "window": list(self.window), "non_divisors": list(self.non_divisors)}


def _obstruction_at(n: int, d: int, window: range) -> Obstruction:
    return Obstruction(d, tuple(window), tuple(v for v in window if n % v))


def find_obstruction(n: int, K: int) -> Obstruction | None:
    """Smallest divisor whose window is forced and not all divisors."""
    for d, window in _windows(n, K):
        if not _all_divide(n, window) and all(is_unavoidable(n, v) for v in window):
            return _obstruction_at(n, d, window)
    return None


def straight_walk(n: int) -> Walk:
    return Walk.of((x, 0) for x in range(n + 1))


def find_witness(n: int, K: int) -> AvoidanceCertificate | Walk:
    """A walk realising ``n`` that satisfies the hypothesis, avoiding one value.

    Returns the straight walk when no divisor falls in range. Otherwise each
    avoidable window value is tried in turn. Raises :class:`WitnessNotFound`.
    """
    windows = _windows(n, K)
    if not windows:
        return straight_walk(n)
    tried = []
    for _, window in windows:
        if _all_divide(n, window):
            continue
        for b in window:
            if b in tried or is_unavoidable(n, b):
                continue
            tried.append(b)
            cert = avoiding_walk(n, b, trim=True)
            if hypothesis_holds(cert.walk, n, K):
                return cert
    raise WitnessNotFound(f"no single-avoidance walk satisfies the hypothesis for n={n}, K={K} (tried {tried})")


def _witness_json(witness: AvoidanceCertificate | Walk | None, n: int) -> dict | None:
    if witness is None:
        return None
    if isinstance(witness, AvoidanceCertificate):
        return witness.to_json()
    return walk_to_json(witness, (witness.index_of((n, 0)), 0), n=n, path="straight")


@dataclass(frozen=True)
class ClassificationReport:
    question: Literal["Q2", "Q4", "Q5"]
    n: int
    verdict: Verdict
    K: int | None = None
    case: int | None = None
    witness: AvoidanceCertificate | Walk | None = None
    obstruction: Obstruction | None = None
    failed_thresholds: tuple[str, ...] = field(default=())

    def witness_walk(self) -> Walk | None:
        if isinstance(self.witness, AvoidanceCertificate):
            return self.witness.walk
        return self.witness

    def to_json(self) -> dict:
        doc = {
            "question": self.question,
            "n": self.n,
            "K": self.K,
            "verdict": self.verdict,
            "case": self.case,
            "witness": _witness_json(self.witness, self.n),
            "obstruction": self.obstruction.to_json() if self.obstruction else None,
        }
        if self.case == 3:
            doc["failed_thresholds"] = list(self.failed_thresholds)
        return doc


def _resolve(n: int, K: int) -> tuple[Verdict, AvoidanceCertificate | Walk | None, Obstruction | None]:
    obstruction = find_obstruction(n, K)
    if obstruction is not None:
        return "non-member", None, obstruction
    try:
        return "member", find_witness(n, K), None
    except WitnessNotFound:
        return "undetermined", None, None


def q4_classify(n: int) -> ClassificationReport:
    _require_positive(n=n)
    verdict, witness, obstruction = _resolve(n, 1)
    return ClassificationReport("Q4", n, verdict, witness=witness, obstruction=obstruction)


# Question 5, for general K.

_THRESHOLD_NAMES = ("A", "B", "C", "D")


def q5_case1_factor(n: int, K: int) -> tuple[int, int] | None:
    """``(m, p)`` with ``n = m p``, ``m <= K`` and ``p`` a prime ``>= 2K + 1``."""
    _require_positive(n=n, K=K)
    for m in range(1, K + 1):
        p, rem = divmod(n, m)
        if rem == 0 and p >= 2 * K + 1 and is_prime(p):
            return m, p
    return None


def q5_failed_thresholds(n: int, K: int) -> tuple[str, ...]:
    """Names of the Case-2 inequalities that fail, in exact integer form."""
    _require_positive(n=n, K=K)
    sq = K * K
    holds = {
        "A": n >= (2 * K + 1) * K,
        "B": 2 * n > (sq + K) ** 2,
        "C": n >= sq and (n - sq) ** 2 >= 4 * sq * n,
        "D": (n + sq + K) ** 2 > 2 * n * (2 * K + 1) ** 2,
    }
    return tuple(name for name in _THRESHOLD_NAMES if not holds[name])


def q5_classify(n: int, K: int, resolve: bool = False) -> ClassificationReport:
    """Sort ``n`` into the three cases and back the verdict with evidence.

    Case 3 stays undetermined unless ``resolve`` asks for the obstruction and
    single-avoidance searches. Raises :class:`VerdictContradiction` when the
    evidence a case promises cannot be produced.
    """
    factor = q5_case1_factor(n, K)
    if factor is not None:
        _, p = factor
        cert = avoiding_walk(n, p + 1, trim=True)
        if not hypothesis_holds(cert.walk, n, K):
            raise VerdictContradiction(f"walk avoiding {p + 1} fails the hypothesis for n={n}, K={K}")
        return ClassificationReport("Q5", n, "member", K=K, case=1, witness=cert)

    failed = q5_failed_thresholds(n, K)
    if not failed:
        d = max(v for v in divisors(n) if (v + K) ** 2 <= 2 * n)
        obstruction = _obstruction_at(n, d, range(d - K, d + K + 1))
        if not obstruction.verify(n, K):
            raise VerdictContradiction(f"divisor {d} does not obstruct n={n} for K={K}: {obstruction}")
        return ClassificationReport("Q5", n, "non-member", K=K, case=2, obstruction=obstruction)

    verdict, witness, obstruction = _resolve(n, K) if resolve else ("undetermined", None, None)
    return ClassificationReport(
        "Q5", n, verdict, K=K, case=3, witness=witness, obstruction=obstruction, failed_thresholds=failed
    )


def q5_exceptional_scan(K: int, n_max: int, resolve: bool = True) -> list[ClassificationReport]:
    _require_positive(K=K, n_max=n_max)
    reports = (q5_classify(n, K, resolve=resolve) for n in range(1, n_max + 1))
    return [r for r in reports if r.case == 3]
