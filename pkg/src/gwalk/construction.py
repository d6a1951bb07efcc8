"""Explicit d-avoiding serpentine walks and the certificates built from them.

Both walks are assembled from axis-parallel segments, with h = d + 1:

    R_m : x = m(d+1),           y from -m up to h-m
    S_m : y = h-m,              x from m(d+1) to (m+1)(d-1)
    T_m : x = (m+1)(d-1),       y from h-m down to -m-1
    U_m : y = -m-1,             x from (m+1)(d-1) to (m+1)(d+1)

The primed kinds move the right-hand wall one column left, to (m+1)(d-1) - 1.
P1 chains R S T U R S T U ...; P2 starts at (-1, 0) and chains the primed kinds.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .arith import _require_positive, balanced_division
from .errors import DomainError, IndexOutOfRange, InternalConstructionFailure, NotAvoidable
from .walks import Point, Walk, contains_forbidden, walk_to_json

__all__ = [
    "KINDS",
    "SegmentSpec",
    "AvoidanceCertificate",
    "segment_bound",
    "segment_points",
    "chain",
    "build_p1",
    "build_p2",
    "select_anchors",
    "avoiding_walk",
]

KINDS = ("R", "S", "T", "U", "R'", "S'", "T'", "U'")
PathId = Literal["P1", "P2"]


def _require_d(d: int) -> None:
    _require_positive(d=d)
    if d < 2:
        raise DomainError("construction needs d >= 2 (every n lies in A_n for d = 1)")


def segment_bound(kind: str, d: int) -> int:
    """Largest admissible segment index for ``kind`` (``-1`` when the kind is unused)."""
    if kind not in KINDS:
        raise ValueError(f"unknown segment kind {kind!r}")
    if d % 2:
        bounds = {
            "R": (d - 1) // 2, "S": (d - 3) // 2, "T": (d - 3) // 2, "U": (d - 3) // 2,
            "R'": (d - 3) // 2, "S'": (d - 3) // 2, "T'": (d - 3) // 2, "U'": (d - 5) // 2,
        }
    else:
        bounds = {
            "R": d // 2 - 1, "S": d // 2 - 1, "T": d // 2 - 1, "U": d // 2 - 2,
            "R'": d // 2 - 1, "S'": d // 2 - 2, "T'": d // 2 - 2, "U'": d // 2 - 2,
        }
    return bounds[kind]


@dataclass(frozen=True)
class SegmentSpec:
    kind: str
    m: int
    d: int

    def __post_init__(self):
        _require_d(self.d)
        top = segment_bound(self.kind, self.d)
        if not 0 <= self.m <= top:
            raise IndexOutOfRange(
                f"{self.kind}_{self.m} does not occur for d={self.d} (allowed 0..{top})"
            )


def _line(x0: int, y0: int, x1: int, y1: int) -> list[Point]:
    if x0 == x1:
        step = 1 if y1 >= y0 else -1
        return [Point(x0, y) for y in range(y0, y1 + step, step)]
    step = 1 if x1 >= x0 else -1
    return [Point(x, y0) for x in range(x0, x1 + step, step)]


def segment_points(spec: SegmentSpec) -> list[Point]:
    """Lattice points of one segment, in traversal order."""
    d, m = spec.d, spec.m
    h = d + 1
    left = m * (d + 1)
    wall = (m + 1) * (d - 1) - (1 if spec.kind.endswith("'") else 0)
    base = spec.kind[0]
    if base == "R":
        return _line(left, -m, left, h - m)
    if base == "S":
        return _line(left, h - m, wall, h - m)
    if base == "T":
        return _line(wall, h - m, wall, -m - 1)
    return _line(wall, -m - 1, (m + 1) * (d + 1), -m - 1)


def chain(d: int, primed: bool) -> list[SegmentSpec]:
    """Segments of P1 (``primed=False``) or P2 in traversal order."""
    _require_d(d)
    q = "'" if primed else ""
    kinds = [k + q for k in "RSTU"]
    # full R S T U rounds, then the parity-dependent tail
    rounds = segment_bound("U" + q, d) + 1
    specs = [SegmentSpec(k, m, d) for m in range(rounds) for k in kinds]
    if primed == (d % 2 == 1):
        tail = kinds[:3]
    else:
        tail = kinds[:1]
    specs += [SegmentSpec(k, rounds, d) for k in tail]
    return specs


def _assemble(start: list[Point], specs: list[SegmentSpec]) -> Walk:
    points = list(start)
    for spec in specs:
        seg = segment_points(spec)
        if points and points[-1] == seg[0]:
            seg = seg[1:]
        points.extend(seg)
    try:
        return Walk(tuple(points))
    except ValueError as exc:
        raise InternalConstructionFailure(f"segments do not chain: {exc}") from exc


@lru_cache(maxsize=256)
def build_p1(d: int) -> Walk:
    return _assemble([], chain(d, primed=False))


@lru_cache(maxsize=256)
def build_p2(d: int) -> Walk:
    return _assemble([Point(-1, 0)], chain(d, primed=True))


def select_anchors(n: int, d: int) -> tuple[Point, Point, PathId]:
    """Two axis points of P1 or P2 whose x-coordinates differ by ``n``.

    The pair is returned in the order the formulas produce it; its difference
    is ``+n`` or ``-n`` depending on the sign of the balanced remainder.
    """
    bd = balanced_division(n, d)
    k, r = bd.k, bd.r
    if k > abs(r):
        raise NotAvoidable(n, d, k, r)
    if (k - r) % 2 == 0:
        if r > 0:
            m, i = (r + k) // 2, (r - k) // 2
        else:
            m, i = (-r - k) // 2, (-r + k) // 2
        a, b, path = Point(m * (d + 1), 0), Point(i * (d - 1), 0), "P1"
    else:
        if r > 0:
            m, i = (r - 1 + k) // 2, (r - 1 - k) // 2
        else:
            m, i = (-r - k - 1) // 2, (k - r - 1) // 2
        a, b, path = Point(m * (d + 1), 0), Point(i * (d - 1) - 1, 0), "P2"
    if abs(a.x - b.x) != n:
        raise InternalConstructionFailure(f"anchors {a}, {b} are not {n} apart (d={d})")
    return a, b, path


@dataclass(frozen=True)
class AvoidanceCertificate:
    """A walk containing the difference ``n`` and never the difference ``d``.

    ``walk[anchor_a] - walk[anchor_b] == (n, 0)``.
    """

    n: int
    d: int
    walk: Walk
    anchor_a: int
    anchor_b: int
    path_id: PathId

    def check(self) -> None:
        a, b = self.walk[self.anchor_a], self.walk[self.anchor_b]
        if (a.x - b.x, a.y - b.y) != (self.n, 0):
            raise InternalConstructionFailure(
                f"anchors {a} and {b} do not realise the difference {self.n}"
            )
        if contains_forbidden(self.walk, self.d):
            raise InternalConstructionFailure(
                f"{self.path_id}({self.d}) contains the forbidden difference {self.d}"
            )

    def to_json(self) -> dict:
        return walk_to_json(
            self.walk, (self.anchor_a, self.anchor_b), n=self.n, d=self.d, path=self.path_id
        )


def _excerpt(d: int, path: PathId, lo: int, hi: int) -> Walk:
    """The run of P1/P2 segments whose x-span meets ``[lo, hi]``."""
    specs = [
        s for s in chain(d, primed=path == "P2")
        if s.m * (d + 1) <= hi and (s.m + 1) * (d + 1) >= lo
    ]
    seed = [Point(-1, 0)] if path == "P2" and lo <= -1 else []
    return _assemble(seed, specs)


def avoiding_walk(n: int, d: int, trim: bool = False) -> AvoidanceCertificate:
    """Certificate that ``n`` is ``d``-avoidable.

    With ``trim=True`` the walk is only the stretch of P1/P2 between the two
    anchors. It is built without materialising the whole serpentine, which
    keeps large ``d`` cheap, and its differences are a subset of the full one's.
    """
    a, b, path = select_anchors(n, d)
    if a.x < b.x:
        a, b = b, a
    walk = _excerpt(d, path, b.x, a.x) if trim else (build_p1(d) if path == "P1" else build_p2(d))
    try:
        ia, ib = walk.index_of(a), walk.index_of(b)
    except KeyError as exc:
        raise InternalConstructionFailure(f"anchor {exc} is not on {path}({d})") from exc
    if trim:
        lo, hi = min(ia, ib), max(ia, ib)
        walk = Walk(walk.points[lo:hi + 1])
        ia, ib = ia - lo, ib - lo
    cert = AvoidanceCertificate(n, d, walk, ia, ib, path)
    cert.check()
    return cert
