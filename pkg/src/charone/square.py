"""The tensor square Z_min (x)_B Z_min as the semiring of integer staircases.

A staircase is a hereditary subset of Z x Z, i.e. a finite union of upper-right
quadrants, stored as its minimal antichain of corners.  Addition is union and
multiplication is the Minkowski sum.  The simple tensor q^a (x) q^b is the
staircase with the single corner (a, b).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import kernels
from .errors import UnsupportedSlopeProduct
from .exact import Surd
from .slopes import ContinuedFractionSlope, RationalSlope, Slope
from .tropical import INF, Zmin

Point = tuple[int, int]


def _check_point(p) -> Point:
    a, b = p
    if isinstance(a, bool) or isinstance(b, bool) or not isinstance(a, int) or not isinstance(b, int):
        raise TypeError(f"corner coordinates must be integers, got {p!r}")
    return (a, b)


class Staircase:
    """Canonical staircase; ``corners`` is sorted with a increasing and b decreasing."""

    __slots__ = ("corners",)

    def __init__(self, points: Iterable[Sequence[int]] = (), *, canonical: bool = False):
        pts = [_check_point(p) for p in points]
        self.corners: tuple[Point, ...] = tuple(pts if canonical else kernels.canonicalize(pts))

    @classmethod
    def zero(cls) -> "Staircase":
        return cls()

    @classmethod
    def one(cls) -> "Staircase":
        return cls([(0, 0)], canonical=True)

    @classmethod
    def tensor(cls, a: int, b: int) -> "Staircase":
        """The simple tensor q^a (x) q^b."""
        return cls([(a, b)], canonical=True)

    @property
    def is_zero(self) -> bool:
        return not self.corners

    def is_positive(self) -> bool:
        """True when every corner lies in N x N."""
        return all(a >= 0 and b >= 0 for a, b in self.corners)

    def contains(self, point: Sequence[int]) -> bool:
        x, y = point
        return any(x >= a and y >= b for a, b in self.corners)

    def shift(self, da: int, db: int) -> "Staircase":
        """Multiply by q^da (x) q^db."""
        return Staircase([(a + da, b + db) for a, b in self.corners], canonical=True)

    def __add__(self, other: "Staircase") -> "Staircase":
        return sq_add(self, other)

    def __mul__(self, other: "Staircase") -> "Staircase":
        return sq_mul(self, other)

    def __pow__(self, k: int) -> "Staircase":
        if k < 0:
            raise ValueError("negative powers are not defined")
        out = Staircase.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Staircase):
            return NotImplemented
        return self.corners == other.corners

    def __hash__(self) -> int:
        return hash(("Staircase", self.corners))

    def __repr__(self) -> str:
        return f"Staircase({list(self.corners)})"

    def frobenius(self, n: int, m: int) -> "Staircase":
        return sq_frobenius(self, n, m)

    def mu(self) -> Zmin:
        return sq_mu(self)

    def to_json(self) -> dict:
        return {"corners": [[a, b] for a, b in self.corners]}

    @classmethod
    def from_json(cls, obj: dict) -> "Staircase":
        return cls(tuple(p) for p in obj["corners"])


def canonicalize(points: Iterable[Sequence[int]]) -> Staircase:
    return Staircase(points)


def sq_add(x: Staircase, y: Staircase) -> Staircase:
    if x.is_zero:
        return y
    if y.is_zero:
        return x
    return Staircase(kernels.canonicalize(x.corners + y.corners), canonical=True)


def sq_mul(x: Staircase, y: Staircase) -> Staircase:
    if x.is_zero or y.is_zero:
        return Staircase.zero()
    return Staircase(kernels.staircase_mul(x.corners, y.corners), canonical=True)


def _check_index(k: int, name: str) -> None:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValueError(f"{name} must be a positive integer, got {k!r}")


def sq_frobenius(x: Staircase, n: int, m: int) -> Staircase:
    """Fr_{n,m}: (a, b) -> (n a, m b); positive scalings keep the antichain sorted."""
    _check_index(n, "n")
    _check_index(m, "m")
    return Staircase([(n * a, m * b) for a, b in x.corners], canonical=True)


def sq_mu(x: Staircase) -> Zmin:
    if x.is_zero:
        return Zmin(INF)
    return Zmin(min(a + b for a, b in x.corners))


def mu_frobenius(x: Staircase, n: int, m: int) -> Zmin:
    """mu(Fr_{n,m}(x)) computed directly as min(n a + m b)."""
    _check_index(n, "n")
    _check_index(m, "m")
    if x.is_zero:
        return Zmin(INF)
    return Zmin(min(n * a + m * b for a, b in x.corners))


@dataclass(frozen=True)
class Evaluation:
    """Minimum of lambda*a + b over the corners, attained at ``argmin``.

    The value is the formal pair ``argmin`` meaning lambda*a + b; ``exact`` is
    the rational value for rational slopes, ``algebraic`` the exact surd when
    the slope has one.
    """

    argmin: Point
    slope: Slope
    exact: Fraction | None
    algebraic: Surd | None

    @property
    def value(self) -> Point:
        return self.argmin

    def __float__(self) -> float:
        a, b = self.argmin
        return float(self.slope) * a + b


def _decision_slope(slope: Slope, spread: int) -> Slope:
    """A slope that orders every pair with |delta a| <= spread exactly like ``slope``.

    Truncated continued fractions are replaced by a convergent whose denominator
    exceeds ``spread``; this raises DepthExceeded when the expansion is too short.
    """
    if isinstance(slope, ContinuedFractionSlope) and not slope.is_rational():
        return RationalSlope(slope.best_approximation(spread))
    return slope


def _argmin(corners: Sequence[Point], slope: Slope) -> Point:
    best = corners[0]
    for p in corners[1:]:
        # strict improvement only: ties keep the smaller abscissa
        if slope.compare(p[0], p[1], best[0], best[1]) < 0:
            best = p
    return best


def _spread(*stairs: Staircase) -> int:
    xs = [a for s in stairs for a, _ in s.corners]
    return max(xs) - min(xs) if xs else 0


def sq_evaluate(x: Staircase, slope: Slope) -> Evaluation:
    if x.is_zero:
        raise ValueError("evaluation of the zero staircase is q^inf; no minimizing corner")
    decider = _decision_slope(slope, _spread(x))
    a, b = _argmin(x.corners, decider)
    exact = algebraic = None
    if slope.is_rational():
        exact = slope.as_fraction() * a + b
    try:
        algebraic = slope.exact() * a + b
    except UnsupportedSlopeProduct:
        algebraic = None
    return Evaluation((a, b), slope, exact, algebraic)


def sq_congruent(x: Staircase, y: Staircase, slope: Slope) -> bool:
    """Whether min(lambda a + b) agrees exactly on x and y."""
    if x.is_zero or y.is_zero:
        return x.is_zero and y.is_zero
    decider = _decision_slope(slope, _spread(x, y))
    p = _argmin(x.corners, decider)
    q = _argmin(y.corners, decider)
    return decider.compare(p[0], p[1], q[0], q[1]) == 0


__all__ = [
    "Evaluation",
    "Staircase",
    "canonicalize",
    "mu_frobenius",
    "sq_add",
    "sq_congruent",
    "sq_evaluate",
    "sq_frobenius",
    "sq_mu",
    "sq_mul",
]
