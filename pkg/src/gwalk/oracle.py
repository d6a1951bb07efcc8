"""Brute-force avoidability on a finite box.

``n`` is ``d``-avoidable inside a box iff some simple lattice path from (0, 0)
to (n, 0) stays in the box and never puts two of its points in one row exactly
``d`` apart. Restricting to simple paths loses nothing: a walk's visited set is
connected, any connected set holding both anchors contains a simple path
between them, and subsets of conflict-free sets stay conflict-free.

The search is a depth-first enumeration with neighbour order +x, +y, -x, -y.
A branch is cut when the target can no longer be reached through free cells
(flood fill); this never changes which path is found first.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np
from numba import njit

from .arith import _require_positive
from .errors import BudgetExceeded, DomainError, InternalConstructionFailure
from .membership import is_unavoidable
from .walks import Point, Walk, contains_forbidden

__all__ = [
    "DEFAULT_BUDGET",
    "SearchBox",
    "SearchOutcome",
    "default_box",
    "tight_box",
    "run_search",
    "search_avoiding_path",
    "oracle_is_avoidable",
]

DEFAULT_BUDGET = 50_000_000

FOUND, NONE, EXHAUSTED = "found", "none", "budget-exceeded"


@dataclass(frozen=True)
class SearchBox:
    x_min: int
    x_max: int
    y_min: int
    y_max: int

    def check(self, n: int) -> None:
        if not (self.x_min <= 0 <= n <= self.x_max and self.y_min <= 0 <= self.y_max):
            raise DomainError(f"{self} must contain both (0, 0) and ({n}, 0)")

    @property
    def cells(self) -> int:
        return (self.x_max - self.x_min + 1) * (self.y_max - self.y_min + 1)


def default_box(n: int, d: int) -> SearchBox:
    """Room for a translate of P1/P2 joining (0, 0) to (n, 0)."""
    _require_positive(n=n, d=d)
    margin = d * d + 2 * d
    return SearchBox(-margin, n + margin, -(d + 3), d + 3)


def tight_box(n: int, d: int) -> SearchBox:
    """Smallest box still holding the anchor-to-anchor part of the construction.

    That part of P1/P2 is x-monotone, so it spans exactly ``[0, n]`` once
    translated, and its height is bounded by the serpentine's rows.
    """
    _require_positive(n=n, d=d)
    return SearchBox(0, n, -((d + 1) // 2) - 1, d + 1)


@dataclass(frozen=True)
class SearchOutcome:
    status: str
    path: Walk | None
    expansions: int


@njit(cache=True)
def _dfs(n, d, x0, x1, y0, y1, budget):  # pragma: no cover - compiled
    w = x1 - x0 + 1
    h = y1 - y0 + 1
    size = w * h
    on_path = np.zeros(size, np.uint8)
    # number of path cells (or the target) exactly d away in the same row
    blocked = np.zeros(size, np.int32)
    seen = np.zeros(size, np.int64)
    queue = np.empty(size, np.int64)
    path = np.empty(size, np.int64)
    next_dir = np.empty(size, np.int64)
    dx = np.array([1, 0, -1, 0])
    dy = np.array([0, 1, 0, -1])

    target = (0 - y0) * w + (n - x0)
    source = (0 - y0) * w + (0 - x0)
    # the target is on every completed path, so its row partners are off limits
    for off in (-d, d):
        xx = n - x0 + off
        if 0 <= xx < w:
            blocked[(0 - y0) * w + xx] += 1
    if blocked[source] > 0:
        return 0, 0, path[:0].copy()
    for off in (-d, d):
        xx = 0 - x0 + off
        if 0 <= xx < w:
            blocked[(0 - y0) * w + xx] += 1

    depth = 0
    path[0] = source
    next_dir[0] = 0
    on_path[source] = 1
    expansions = 1
    stamp = 0
    while depth >= 0:
        cur = path[depth]
        cx = cur % w
        cy = cur // w
        if next_dir[depth] == 0:
            stamp += 1
            head = 0
            tail = 1
            queue[0] = cur
            seen[cur] = stamp
            reachable = False
            while head < tail and not reachable:
                c = queue[head]
                head += 1
                qx = c % w
                qy = c // w
                for k in range(4):
                    nx = qx + dx[k]
                    ny = qy + dy[k]
                    if nx < 0 or nx >= w or ny < 0 or ny >= h:
                        continue
                    j = ny * w + nx
                    if j == target:
                        reachable = True
                        break
                    if seen[j] == stamp or on_path[j] or blocked[j] > 0:
                        continue
                    seen[j] = stamp
                    queue[tail] = j
                    tail += 1
            if not reachable:
                next_dir[depth] = 4
        if next_dir[depth] >= 4:
            on_path[cur] = 0
            for off in (-d, d):
                xx = cx + off
                if 0 <= xx < w:
                    blocked[cy * w + xx] -= 1
            depth -= 1
            continue
        k = next_dir[depth]
        next_dir[depth] += 1
        nx = cx + dx[k]
        ny = cy + dy[k]
        if nx < 0 or nx >= w or ny < 0 or ny >= h:
            continue
        j = ny * w + nx
        if on_path[j]:
            continue
        if blocked[j] > 0:
            continue
        expansions += 1
        if expansions > budget:
            return 2, expansions, path[:depth + 1].copy()
        depth += 1
        path[depth] = j
        next_dir[depth] = 0
        on_path[j] = 1
        for off in (-d, d):
            xx = nx + off
            if 0 <= xx < w:
                blocked[ny * w + xx] += 1
        if j == target:
            return 1, expansions, path[:depth + 1].copy()
    return 0, expansions, path[:0].copy()


def run_search(n: int, d: int, box: SearchBox | None = None, budget: int | None = None) -> SearchOutcome:
    """Run the search and report found / none / budget-exceeded without raising."""
    _require_positive(n=n, d=d)
    box = box or default_box(n, d)
    box.check(n)
    budget = DEFAULT_BUDGET if budget is None else int(budget)
    if budget < 1:
        raise DomainError("budget must be positive")
    code, expansions, cells = _dfs(n, d, box.x_min, box.x_max, box.y_min, box.y_max, budget)
    if code == 2:
        return SearchOutcome(EXHAUSTED, None, int(expansions))
    if code == 0:
        return SearchOutcome(NONE, None, int(expansions))
    width = box.x_max - box.x_min + 1
    walk = Walk(tuple(Point(int(c % width) + box.x_min, int(c // width) + box.y_min) for c in cells))
    _verify(walk, n, d, box)
    return SearchOutcome(FOUND, walk, int(expansions))


def _verify(walk: Walk, n: int, d: int, box: SearchBox) -> None:
    ok = (
        walk[0] == (0, 0)
        and walk[-1] == (n, 0)
        and len(walk.visited) == len(walk)
        and not contains_forbidden(walk, d)
        and all(box.x_min <= p.x <= box.x_max and box.y_min <= p.y <= box.y_max for p in walk)
    )
    if not ok:
        raise InternalConstructionFailure(f"search returned an invalid witness for n={n}, d={d}")


def search_avoiding_path(
    n: int, d: int, box: SearchBox | None = None, budget: int | None = None
) -> Walk | None:
    """A conflict-free simple path from (0, 0) to (n, 0) in ``box``, or ``None``.

    Raises :class:`BudgetExceeded` when the budget runs out before a decision.
    """
    outcome = run_search(n, d, box, budget)
    if outcome.status == EXHAUSTED:
        raise BudgetExceeded(outcome.expansions)
    return outcome.path


def oracle_is_avoidable(n: int, d: int, budget: int | None = None) -> bool:
    return search_avoiding_path(n, d, default_box(n, d), budget) is not None


def budget_from_env(default: int = DEFAULT_BUDGET) -> int:
    raw = os.environ.get("GW_BUDGET")
    return int(raw) if raw else default


def theorem_agrees(n: int, d: int, outcome: SearchOutcome) -> bool | None:
    """``None`` when the search did not reach a decision."""
    if outcome.status == EXHAUSTED:
        return None
    return (outcome.status == FOUND) == (not is_unavoidable(n, d))
