"""Characteristic-one base semirings: B, Z_min (with its Z_max view) and R_max.

Elements of Z_min are written multiplicatively as ``q**n``: the semiring sum
takes the minimum of exponents and the product adds them.  ``q**INF`` is the
semiring zero.  Python's ``+`` and ``*`` operators are the semiring operations.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union


class _Infinity:
    """The exponent +inf: an explicit tag, never a sentinel integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __reduce__(self):
        return (_Infinity, ())

    def __eq__(self, other) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("charone.INF")


INF = _Infinity()
Exponent = Union[int, _Infinity]


def exp_min(x: Exponent, y: Exponent) -> Exponent:
    if x is INF:
        return y
    if y is INF:
        return x
    return x if x <= y else y


def exp_add(x: Exponent, y: Exponent) -> Exponent:
    if x is INF or y is INF:
        return INF
    return x + y


def exp_le(x: Exponent, y: Exponent) -> bool:
    if y is INF:
        return True
    if x is INF:
        return False
    return x <= y


def _check_exponent(n) -> Exponent:
    if n is INF:
        return INF
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"Z_min exponent must be an int or INF, got {n!r}")
    return n


@dataclass(frozen=True)
class Zmin:
    """The element q**exp of (Z u {inf}, min, +)."""

    exp: Exponent

    def __post_init__(self):
        _check_exponent(self.exp)

    @classmethod
    def zero(cls) -> "Zmin":
        return cls(INF)

    @classmethod
    def one(cls) -> "Zmin":
        return cls(0)

    @classmethod
    def from_zmax(cls, n: Exponent) -> "Zmin":
        """Import an element of Z_max through n -> -n (-inf in Z_max is INF here)."""
        if n is INF or (isinstance(n, float) and n == -math.inf):
            return cls(INF)
        return cls(-n)

    def to_zmax(self) -> float | int:
        return -math.inf if self.exp is INF else -self.exp

    @property
    def is_zero(self) -> bool:
        return self.exp is INF

    def __add__(self, other: "Zmin") -> "Zmin":
        return zmin_add(self, other)

    def __mul__(self, other: "Zmin") -> "Zmin":
        return zmin_mul(self, other)

    def __pow__(self, k: int) -> "Zmin":
        if k < 0:
            raise ValueError("negative powers are not semiring operations")
        if k == 0:
            return Zmin(0)
        return Zmin(INF if self.exp is INF else self.exp * k)

    def frobenius(self, k: int) -> "Zmin":
        return zmin_frobenius(self, k)

    def to_json(self) -> dict:
        return {"exp": "inf" if self.exp is INF else self.exp}

    @classmethod
    def from_json(cls, obj: dict) -> "Zmin":
        e = obj["exp"]
        if e == "inf":
            return cls(INF)
        return cls(int(e))

    def __str__(self) -> str:
        return "q^inf" if self.exp is INF else f"q^{self.exp}"


def zmin_add(x: Zmin, y: Zmin) -> Zmin:
    return Zmin(exp_min(x.exp, y.exp))


def zmin_mul(x: Zmin, y: Zmin) -> Zmin:
    return Zmin(exp_add(x.exp, y.exp))


def zmin_frobenius(x: Zmin, k: int) -> Zmin:
    """Fr_k(q**n) = q**(k n); fixes q**INF."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValueError(f"Frobenius index must be a positive integer, got {k!r}")
    return Zmin(INF if x.exp is INF else k * x.exp)


@dataclass(frozen=True)
class Bool:
    """The Boolean semifield B = {0, 1} with 1 + 1 = 1."""

    value: int

    def __post_init__(self):
        if self.value not in (0, 1):
            raise ValueError("B has exactly two elements")

    def __add__(self, other: "Bool") -> "Bool":
        return Bool(max(self.value, other.value))

    def __mul__(self, other: "Bool") -> "Bool":
        return Bool(self.value * other.value)

    def to_zmin(self) -> Zmin:
        return Zmin(0) if self.value else Zmin(INF)


@dataclass(frozen=True)
class Rmax:
    """The tropical semifield ([0, inf), max, x); floating point, reporting only."""

    value: float

    def __post_init__(self):
        if not self.value >= 0:
            raise ValueError("R_max elements are non-negative reals")

    def __add__(self, other: "Rmax") -> "Rmax":
        return Rmax(max(self.value, other.value))

    def __mul__(self, other: "Rmax") -> "Rmax":
        return Rmax(self.value * other.value)

    def frobenius(self, u: float) -> "Rmax":
        """Fr_u(x) = x**u, an automorphism for u > 0."""
        if not u > 0:
            raise ValueError("Fr_u needs u > 0")
        return Rmax(self.value**u)

    @classmethod
    def from_zmin(cls, x: Zmin, q: float) -> "Rmax":
        """Evaluate q**n for a concrete base 0 < q < 1."""
        if not 0 < q < 1:
            raise ValueError("evaluation base must satisfy 0 < q < 1")
        return cls(0.0 if x.exp is INF else q**x.exp)
