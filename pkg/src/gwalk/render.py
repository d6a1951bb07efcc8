"""Static ASCII and SVG pictures of walks."""

from __future__ import annotations

from typing import Sequence

from .walks import Point, Walk

__all__ = ["render", "render_ascii", "render_svg", "CELL"]

CELL = 16  # pixels per lattice unit in SVG output

# precedence: anchor > start > end > visited
_EMPTY, _VISITED, _START, _END, _ANCHOR = ".", "o", "S", "E", "A"


def render_ascii(w: Walk, anchors: Sequence[int] | None = None) -> str:
    """One character per lattice cell, top row = largest y."""
    x0, x1, y0, y1 = w.extent()
    marks: dict[Point, str] = {p: _VISITED for p in w.visited}
    marks[w.points[-1]] = _END
    marks[w.points[0]] = _START
    for i in anchors or ():
        marks[w.points[i]] = _ANCHOR
    lines = []
    for y in range(y1, y0 - 1, -1):
        lines.append("".join(marks.get(Point(x, y), _EMPTY) for x in range(x0, x1 + 1)))
    return "\n".join(lines) + "\n"


def render_svg(w: Walk, anchors: Sequence[int] | None = None) -> str:
    x0, x1, y0, y1 = w.extent()
    width = (x1 - x0 + 2) * CELL
    height = (y1 - y0 + 2) * CELL

    def px(p: Point) -> tuple[int, int]:
        # one cell of margin; SVG y grows downward
        return (p.x - x0 + 1) * CELL, (y1 - p.y + 1) * CELL

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<g stroke="#dddddd" stroke-width="1">',
    ]
    for x in range(x0, x1 + 1):
        cx = (x - x0 + 1) * CELL
        out.append(f'<line x1="{cx}" y1="{CELL}" x2="{cx}" y2="{height - CELL}"/>')
    for y in range(y0, y1 + 1):
        cy = (y1 - y + 1) * CELL
        out.append(f'<line x1="{CELL}" y1="{cy}" x2="{width - CELL}" y2="{cy}"/>')
    out.append("</g>")
    coords = " ".join(f"{a},{b}" for a, b in map(px, w.points))
    out.append(f'<polyline fill="none" stroke="#1f4e99" stroke-width="3" points="{coords}"/>')
    sx, sy = px(w.points[0])
    ex, ey = px(w.points[-1])
    out.append(f'<rect class="start" x="{sx - 4}" y="{sy - 4}" width="8" height="8" fill="#2a9d4b"/>')
    out.append(f'<rect class="end" x="{ex - 4}" y="{ey - 4}" width="8" height="8" fill="#555555"/>')
    for i in anchors or ():
        ax, ay = px(w.points[i])
        out.append(f'<circle class="anchor" cx="{ax}" cy="{ay}" r="5" fill="#d62828"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(w: Walk, format: str = "ascii", anchors: Sequence[int] | None = None) -> str:
    if format == "ascii":
        return render_ascii(w, anchors)
    if format == "svg":
        return render_svg(w, anchors)
    raise ValueError(f"unknown render format {format!r}; expected 'ascii' or 'svg'")
