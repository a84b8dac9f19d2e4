"""SVG figures of staircases and Newton polygons on the integer lattice."""
from __future__ import annotations

from .polygon import NewtonPolygon
from .square import Staircase

CELL = 24
MARGIN = 30


def _frame(points):
    xs = [a for a, _ in points] or [0]
    ys = [b for _, b in points] or [0]
    return min(min(xs), 0) - 1, max(xs) + 2, min(min(ys), 0) - 1, max(ys) + 2


def render(staircase: Staircase | None = None, polygon: NewtonPolygon | None = None, title: str = "") -> str:
    """Staircase region (shaded, corners dotted) with an optional hull outline."""
    pts = list(staircase.corners if staircase is not None else ()) + list(polygon.extremes if polygon is not None else ())
    x0, x1, y0, y1 = _frame(pts)
    width = (x1 - x0) * CELL + 2 * MARGIN
    height = (y1 - y0) * CELL + 2 * MARGIN

    def px(a):
        return MARGIN + (a - x0) * CELL

    def py(b):
        return MARGIN + (y1 - b) * CELL

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    if title:
        out.append(f'<title>{title}</title>')
    for a in range(x0, x1 + 1):
        out.append(f'<line x1="{px(a)}" y1="{py(y0)}" x2="{px(a)}" y2="{py(y1)}" stroke="#e4e4e4"/>')
    for b in range(y0, y1 + 1):
        out.append(f'<line x1="{px(x0)}" y1="{py(b)}" x2="{px(x1)}" y2="{py(b)}" stroke="#e4e4e4"/>')
    # axes through the origin
    out.append(f'<line x1="{px(x0)}" y1="{py(0)}" x2="{px(x1)}" y2="{py(0)}" stroke="black"/>')
    out.append(f'<line x1="{px(0)}" y1="{py(y0)}" x2="{px(0)}" y2="{py(y1)}" stroke="black"/>')
    out.append(f'<text x="{px(x1) + 6}" y="{py(0) + 4}" font-family="sans-serif" font-size="14">a</text>')
    out.append(f'<text x="{px(0) - 4}" y="{py(y1) - 8}" font-family="sans-serif" font-size="14">b</text>')

    if staircase is not None and not staircase.is_zero:
        c = staircase.corners
        path = [(c[0][0], y1)]
        for i, (a, b) in enumerate(c):
            path.append((a, b))
            nxt = c[i + 1][0] if i + 1 < len(c) else x1
            path.append((nxt, b))
        path.append((x1, y1))
        d = " ".join(f"{px(a)},{py(b)}" for a, b in path)
        out.append(f'<polygon points="{d}" fill="#9ec5e8" fill-opacity="0.6" stroke="#2b6cb0"/>')
        for a, b in c:
            out.append(f'<circle cx="{px(a)}" cy="{py(b)}" r="3.5" fill="#2b6cb0"/>')

    if polygon is not None and not polygon.is_zero:
        e = polygon.extremes
        path = [(e[0][0], y1)] + list(e) + [(x1, e[-1][1])]
        d = " ".join(f"{px(a)},{py(b)}" for a, b in path)
        out.append(f'<polyline points="{d}" fill="none" stroke="#c53030" stroke-width="2"/>')
        for a, b in e:
            out.append(f'<circle cx="{px(a)}" cy="{py(b)}" r="4.5" fill="none" stroke="#c53030" stroke-width="2"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
