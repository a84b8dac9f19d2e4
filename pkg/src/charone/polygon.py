"""The reduced square Conv_>=(Z x Z): Newton polygons of staircases.

A Newton polygon is conv(E) for a staircase E, stored by its extreme points.
Addition is the hull of the union and multiplication the Minkowski sum; the
map ``gamma`` from staircases is a surjective semiring homomorphism and the
resulting semiring is multiplicatively cancellative.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels
from .errors import HullMismatch
from .square import Point, Staircase, sq_add, sq_mul


def _cross(o: Point, p: Point, r: Point) -> int:
    return (p[0] - o[0]) * (r[1] - o[1]) - (p[1] - o[1]) * (r[0] - o[0])


class NewtonPolygon:
    __slots__ = ("extremes",)

    def __init__(self, extremes: Iterable[Sequence[int]] = (), *, check: bool = True):
        pts = tuple((int(a), int(b)) for a, b in extremes)
        if check:
            for p, q in zip(pts, pts[1:]):
                if not (p[0] < q[0] and p[1] > q[1]):
                    raise ValueError(f"extremes must have a increasing and b decreasing: {p}, {q}")
            for o, p, r in zip(pts, pts[1:], pts[2:]):
                if _cross(o, p, r) <= 0:
                    raise ValueError(f"{p} is not an extreme point between {o} and {r}")
        self.extremes: tuple[Point, ...] = pts

    @classmethod
    def hull(cls, points: Iterable[Sequence[int]]) -> "NewtonPolygon":
        """Newton polygon of the staircase generated by ``points``."""
        return gamma(Staircase(points))

    @classmethod
    def zero(cls) -> "NewtonPolygon":
        return cls()

    @classmethod
    def one(cls) -> "NewtonPolygon":
        return cls([(0, 0)], check=False)

    @property
    def is_zero(self) -> bool:
        return not self.extremes

    def staircase(self) -> Staircase:
        """The staircase generated by the extreme points (a representative of the class)."""
        return Staircase(self.extremes, canonical=True)

    def __add__(self, other: "NewtonPolygon") -> "NewtonPolygon":
        return poly_add(self, other)

    def __mul__(self, other: "NewtonPolygon") -> "NewtonPolygon":
        return poly_mul(self, other)

    def __pow__(self, k: int) -> "NewtonPolygon":
        if k < 0:
            raise ValueError("negative powers are not defined")
        if k == 0:
            return NewtonPolygon.one()
        if self.is_zero:
            return self
        # the Minkowski power of a convex set is its dilation
        return NewtonPolygon([(k * a, k * b) for a, b in self.extremes], check=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NewtonPolygon):
            return NotImplemented
        return self.extremes == other.extremes

    def __hash__(self) -> int:
        return hash(("NewtonPolygon", self.extremes))

    def __repr__(self) -> str:
        return f"NewtonPolygon({list(self.extremes)})"

    def to_json(self) -> dict:
        return {"extremes": [[a, b] for a, b in self.extremes]}

    @classmethod
    def from_json(cls, obj: dict) -> "NewtonPolygon":
        return cls(tuple(p) for p in obj["extremes"])


def gamma(x: Staircase) -> NewtonPolygon:
    return NewtonPolygon(kernels.lower_hull(x.corners), check=False)


def poly_add(x: NewtonPolygon, y: NewtonPolygon) -> NewtonPolygon:
    if x.is_zero:
        return y
    if y.is_zero:
        return x
    corners = kernels.canonicalize(x.extremes + y.extremes)
    return NewtonPolygon(kernels.lower_hull(corners), check=False)


def poly_mul(x: NewtonPolygon, y: NewtonPolygon) -> NewtonPolygon:
    """Minkowski sum by merging the edge sequences in slope order."""
    if x.is_zero or y.is_zero:
        return NewtonPolygon.zero()
    return NewtonPolygon(kernels.polygon_mul(x.extremes, y.extremes), check=False)


def poly_mul_by_hull(x: NewtonPolygon, y: NewtonPolygon) -> NewtonPolygon:
    """Minkowski sum as the hull of all pairwise sums (independent of the edge merge)."""
    return gamma(sq_mul(x.staircase(), y.staircase()))


def sigma(a: int, b: int) -> Staircase:
    """sigma(a, b): the points (a - j, ceil(b j / a)) for 0 <= j <= a."""
    if a < 1 or b < 1:
        raise ValueError("sigma(a, b) needs a, b >= 1")
    return Staircase([(a - j, -((-b * j) // a)) for j in range(a + 1)])


def cancellation_witness(x: Staircase, y: Staircase) -> Staircase:
    """A nonzero c with x*c = y*c, built from the common Newton polygon.

    With extremes (a_1, b_1), ..., (a_n, b_n) of gamma(x) = gamma(y),
    c = prod_i sigma(a_{i+1} - a_i, b_i - b_{i+1}).  Only differences of
    extremes enter, so translating x and y into N x N does not change c.
    """
    if x.is_zero or y.is_zero:
        raise ValueError("cancellation witness needs nonzero staircases")
    g = gamma(x)
    if g != gamma(y):
        raise HullMismatch(f"Newton polygons differ: {g} vs {gamma(y)}")
    c = Staircase.one()
    for (a0, b0), (a1, b1) in zip(g.extremes, g.extremes[1:]):
        c = c * sigma(a1 - a0, b0 - b1)
    return c


def reduced_equal(x: Staircase, y: Staircase) -> bool:
    return gamma(x) == gamma(y)


@dataclass(frozen=True)
class ReducedElement:
    """A class of the reduced square: a staircase representative with its polygon."""

    representative: Staircase
    polygon: NewtonPolygon

    @classmethod
    def of(cls, x: Staircase) -> "ReducedElement":
        return cls(x, gamma(x))

    def __add__(self, other: "ReducedElement") -> "ReducedElement":
        return ReducedElement(sq_add(self.representative, other.representative), self.polygon + other.polygon)

    def __mul__(self, other: "ReducedElement") -> "ReducedElement":
        return ReducedElement(sq_mul(self.representative, other.representative), self.polygon * other.polygon)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ReducedElement):
            return NotImplemented
        return self.polygon == other.polygon

    def __hash__(self) -> int:
        return hash(self.polygon)

