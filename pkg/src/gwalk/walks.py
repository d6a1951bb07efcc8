"""Unit-step walks on the Gaussian integers, modelled as integer pairs."""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import EmptyWalk, NonUnitStep, WalkError

__all__ = [
    "Point",
    "Walk",
    "validate_walk",
    "difference_set",
    "positive_real_differences",
    "contains_forbidden",
    "walk_to_json",
    "walk_from_json",
    "parse_gaussian_sequence",
    "S1",
    "S2",
    "S3",
    "FIXTURES",
    "FIXTURE_DIFFERENCES",
    "FIXTURE_INTERSECTION",
]


class Point(NamedTuple):
    x: int
    y: int

    def __sub__(self, other):  # type: ignore[override]
        return Point(self.x - other[0], self.y - other[1])

    def __add__(self, other):  # type: ignore[override]
        return Point(self.x + other[0], self.y + other[1])

    def __neg__(self):
        return Point(-self.x, -self.y)


def validate_walk(points: Sequence[Sequence[int]]) -> None:
    """Raise :class:`EmptyWalk` or :class:`NonUnitStep` unless ``points`` is a walk."""
    if len(points) == 0:
        raise EmptyWalk()
    for i in range(len(points) - 1):
        (ax, ay), (bx, by) = points[i], points[i + 1]
        if abs(ax - bx) + abs(ay - by) != 1:
            raise NonUnitStep(i, points[i], points[i + 1])


@dataclass(frozen=True)
class Walk:
    """An immutable, validated walk. Revisits are allowed."""

    points: tuple[Point, ...]

    def __post_init__(self):
        pts = tuple(Point(int(p[0]), int(p[1])) for p in self.points)
        validate_walk(pts)
        object.__setattr__(self, "points", pts)

    @classmethod
    def of(cls, points: Iterable[Sequence[int]]) -> "Walk":
        return cls(tuple(points))

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    @cached_property
    def visited(self) -> frozenset[Point]:
        return frozenset(self.points)

    @cached_property
    def rows(self) -> dict[int, frozenset[int]]:
        """Map ``y -> {x}`` over the distinct visited points."""
        rows: dict[int, set[int]] = defaultdict(set)
        for x, y in self.visited:
            rows[y].add(x)
        return {y: frozenset(xs) for y, xs in rows.items()}

    @cached_property
    def first_index(self) -> dict[Point, int]:
        index: dict[Point, int] = {}
        for i, p in enumerate(self.points):
            index.setdefault(p, i)
        return index

    def index_of(self, point: Sequence[int]) -> int:
        return self.first_index[Point(*point)]

    def extent(self) -> tuple[int, int, int, int]:
        xs = [p.x for p in self.visited]
        ys = [p.y for p in self.visited]
        return min(xs), max(xs), min(ys), max(ys)


def difference_set(w: Walk) -> frozenset[Point]:
    pts = list(w.visited)
    return frozenset(Point(a.x - b.x, a.y - b.y) for a in pts for b in pts)


def positive_real_differences(w: Walk) -> list[int]:
    out: set[int] = set()
    for xs in w.rows.values():
        ordered = sorted(xs)
        for i, a in enumerate(ordered):
            for b in ordered[i + 1:]:
                out.add(b - a)
    return sorted(out)


def contains_forbidden(w: Walk, d: int) -> bool:
    """True iff two visited points share a row and are exactly ``d`` apart."""
    return any(x + d in xs for xs in w.rows.values() for x in xs)


def walk_to_json(w: Walk, anchors: Sequence[int] | None = None, **extra) -> dict:
    doc: dict = {"points": [[p.x, p.y] for p in w.points]}
    if anchors is not None:
        doc["anchors"] = [int(anchors[0]), int(anchors[1])]
    doc.update(extra)
    return doc


def walk_from_json(doc: dict | str) -> tuple[Walk, tuple[int, int] | None]:
    if isinstance(doc, str):
        doc = json.loads(doc)
    if "points" not in doc:
        raise WalkError("walk JSON needs a 'points' array")
    walk = Walk.of(doc["points"])
    anchors = doc.get("anchors")
    if anchors is not None:
        a, b = (int(v) for v in anchors)
        if not (0 <= a < len(walk) and 0 <= b < len(walk)):
            raise WalkError(f"anchor indices {anchors} out of range")
        anchors = (a, b)
    return walk, anchors


def parse_gaussian_sequence(text: str) -> list[Point]:
    """Parse ``"0, i, 2i, 1+2i, 7-i"`` into points."""
    points = []
    for token in text.replace(" ", "").split(","):
        z = complex(token.replace("i", "j"))
        points.append(Point(int(z.real), int(z.imag)))
    return points


# The three sequences from n = 20 (worked example). S1 interleaves two offset runs.
S1 = Walk.of(
    [(0, 0)]
    + [(j - 1, -1) for j in range(1, 12)]
    + [(10, 0)]
    + [(j - 3, 1) for j in range(13, 24)]
    + [(20, 0)]
)

S2 = Walk.of(parse_gaussian_sequence(
    "0, i, 2i, 1+2i, 2+2i, 3+2i, 4+2i, 5+2i, 6+2i, 7+2i, 7+i, 7, 7-i, 8-i, 9-i, 9, "
    "9+i, 10+i, 11+i, 12+i, 13+i, 14+i, 14, 14-i, 14-2i, 15-2i, 16-2i, 17-2i, "
    "18-2i, 19-2i, 20-2i, 20-i, 20"
))

S3 = Walk.of(parse_gaussian_sequence(
    "0, i, 2i, 1+2i, 2+2i, 3+2i, 4+2i, 5+2i, 6+2i, 7+2i, 8+2i, 8+i, 8, 8-i, 9-i, "
    "10-i, 10, 10+i, 11+i, 12+i, 13+i, 14+i, 15+i, 16+i, 16, 16-i, 16-2i, 17-2i, "
    "18-2i, 19-2i, 20-2i, 20-i, 20"
))

FIXTURES = {"S1": S1, "S2": S2, "S3": S3}

FIXTURE_DIFFERENCES = {
    "S1": [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 20],
    "S2": [1, 2, 3, 4, 5, 6, 7, 9, 10, 11, 12, 13, 14, 20],
    "S3": [1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 12, 13, 14, 15, 16, 20],
}

FIXTURE_INTERSECTION = [1, 2, 3, 4, 5, 6, 7, 10, 20]
