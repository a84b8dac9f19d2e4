"""Pure-Python reference kernels on integer corner lists.

Inputs and outputs are lists of (a, b) tuples.  The compiled module
``charone._kernels`` exports the same functions with the same semantics.
"""
from __future__ import annotations

Point = tuple[int, int]


def canonicalize(points) -> list[Point]:
    """Minimal antichain of the union of quadrants, sorted by a (b strictly decreasing)."""
    out: list[Point] = []
    best = None
    for a, b in sorted(points):
        # for equal a the smallest b comes first; later ones are dominated
        if best is None or b < best:
            out.append((a, b))
            best = b
    return out


def staircase_mul(xs, ys) -> list[Point]:
    return canonicalize([(a + c, b + d) for a, b in xs for c, d in ys])


def _cross(o: Point, p: Point, r: Point) -> int:
    return (p[0] - o[0]) * (r[1] - o[1]) - (p[1] - o[1]) * (r[0] - o[0])


def lower_hull(corners) -> list[Point]:
    """Extreme points of conv(corners) + quadrant, for a canonical corner list."""
    hull: list[Point] = []
    for p in corners:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
            hull.pop()
        hull.append(p)
    return hull


def polygon_mul(xs, ys) -> list[Point]:
    """Minkowski sum of two nonempty convex staircases by merging edge slopes."""
    ex = [(xs[i + 1][0] - xs[i][0], xs[i + 1][1] - xs[i][1]) for i in range(len(xs) - 1)]
    ey = [(ys[i + 1][0] - ys[i][0], ys[i + 1][1] - ys[i][1]) for i in range(len(ys) - 1)]
    a, b = xs[0][0] + ys[0][0], xs[0][1] + ys[0][1]
    out = [(a, b)]
    i = j = 0
    while i < len(ex) or j < len(ey):
        if j == len(ey):
            dx, dy = ex[i]
            i += 1
        elif i == len(ex):
            dx, dy = ey[j]
            j += 1
        else:
            e, f = ex[i], ey[j]
            cross = e[0] * f[1] - e[1] * f[0]
            if cross > 0:  # e is steeper
                dx, dy = e
                i += 1
            elif cross < 0:
                dx, dy = f
                j += 1
            else:
                dx, dy = e[0] + f[0], e[1] + f[1]
                i += 1
                j += 1
        a += dx
        b += dy
        out.append((a, b))
    return out
