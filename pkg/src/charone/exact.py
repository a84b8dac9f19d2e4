"""Exact real numbers of the form sum_n c_n * sqrt(n) with rational c_n.

Square roots of distinct square-free integers are linearly independent over
Q, so a value is zero exactly when every coefficient is zero; any other sign
question is settled by rigorous integer interval arithmetic with increasing
precision, which always terminates.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Union

import sympy

Number = Union[int, Fraction, "Surd"]


@lru_cache(maxsize=4096)
def squarefree_split(n: int) -> tuple[int, int]:
    """Return (k, m) with n = k**2 * m and m square-free."""
    if n <= 0:
        raise ValueError("square roots are taken of positive integers only")
    k, m = 1, 1
    for p, e in sympy.factorint(n).items():
        k *= p ** (e // 2)
        if e % 2:
            m *= p
    return k, m


class Surd:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: dict[int, Fraction] | None = None):
        clean = {}
        for n, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[int(n)] = c
        self._terms = clean
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def rational(cls, x) -> "Surd":
        return cls({1: Fraction(x)})

    @classmethod
    def sqrt(cls, n: int, coeff=1) -> "Surd":
        k, m = squarefree_split(int(n))
        return cls({m: Fraction(coeff) * k})

    @classmethod
    def quadratic(cls, a, b, c, d) -> "Surd":
        """(a + b*sqrt(d)) / c."""
        if c == 0:
            raise ZeroDivisionError("quadratic denominator c must be non-zero")
        return (cls.rational(a) + cls.sqrt(d, b)) / Fraction(c)

    @classmethod
    def coerce(cls, x: Number) -> "Surd":
        if isinstance(x, Surd):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.rational(x)
        raise TypeError(f"cannot convert {type(x).__name__} to an exact surd")

    # structure ----------------------------------------------------------
    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def is_rational(self) -> bool:
        return all(n == 1 for n in self._terms)

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self._terms.get(1, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def quadratic_form(self) -> tuple[int, int, int, int] | None:
        """(a, b, c, d) with value (a + b sqrt d)/c when at most one surd term is present."""
        irr = [n for n in self._terms if n != 1]
        if len(irr) > 1:
            return None
        r = self._terms.get(1, Fraction(0))
        if not irr:
            return (r.numerator, 0, r.denominator, 1)
        d = irr[0]
        s = self._terms[d]
        c = r.denominator * s.denominator // math.gcd(r.denominator, s.denominator)
        return (int(r * c), int(s * c), c, d)

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        try:
            other = Surd.coerce(other)
        except TypeError:
            return NotImplemented
        t = dict(self._terms)
        for n, c in other._terms.items():
            t[n] = t.get(n, Fraction(0)) + c
        return Surd(t)

    __radd__ = __add__

    def __neg__(self):
        return Surd({n: -c for n, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = Surd.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Surd.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Surd({n: c * other for n, c in self._terms.items()})
        if not isinstance(other, Surd):
            return NotImplemented
        t: dict[int, Fraction] = {}
        for n1, c1 in self._terms.items():
            for n2, c2 in other._terms.items():
                g = math.gcd(n1, n2)
                m = (n1 // g) * (n2 // g)
                t[m] = t.get(m, Fraction(0)) + c1 * c2 * g
        return Surd(t)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, Surd):
            return self * other.inverse()
        return NotImplemented

    def inverse(self) -> "Surd":
        """Inverse for values with at most one irrational basis term."""
        form = self.quadratic_form()
        if form is None:
            raise NotImplementedError("inverse of multi-surd values is not supported")
        a, b, c, d = form
        norm = a * a - b * b * d
        if norm == 0:
            raise ZeroDivisionError("inverse of zero")
        # c / (a + b sqrt d) = c (a - b sqrt d) / (a^2 - b^2 d)
        return Surd.quadratic(c * a, -c * b, norm, d) if b else Surd.rational(Fraction(c, a))

    # ordering -----------------------------------------------------------
    def interval(self, bits: int) -> tuple[Fraction, Fraction]:
        """Rigorous enclosure lo <= value <= hi with width about 2**-bits per term."""
        scale = 1 << bits
        lo = hi = Fraction(0)
        for n, c in self._terms.items():
            if n == 1:
                lo += c
                hi += c
                continue
            s = math.isqrt(n * scale * scale)
            a, b = Fraction(s, scale), Fraction(s + 1, scale)
            if c > 0:
                lo += c * a
                hi += c * b
            else:
                lo += c * b
                hi += c * a
        return lo, hi

    def sign(self) -> int:
        if not self._terms:
            return 0
        if self.is_rational():
            v = self._terms[1]
            return (v > 0) - (v < 0)
        bits = 48
        while True:
            lo, hi = self.interval(bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2

    def floor(self) -> int:
        if self.is_rational():
            return math.floor(self.as_fraction())
        bits = 48
        while True:
            lo, hi = self.interval(bits)
            f = math.floor(lo)
            if math.floor(hi) == f:
                return f
            if hi - lo < 1:
                # exactly one integer k lies in (lo, hi]
                k = math.floor(hi)
                return k if (self - k).sign() >= 0 else k - 1
            bits *= 2

    def __lt__(self, other) -> bool:
        return (self - Surd.coerce(other)).sign() < 0

    def __le__(self, other) -> bool:
        return (self - Surd.coerce(other)).sign() <= 0

    def __gt__(self, other) -> bool:
        return (self - Surd.coerce(other)).sign() > 0

    def __ge__(self, other) -> bool:
        return (self - Surd.coerce(other)).sign() >= 0

    def __eq__(self, other) -> bool:
        try:
            other = Surd.coerce(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.as_fraction())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __float__(self) -> float:
        return float(sum(float(c) * math.sqrt(n) for n, c in self._terms.items()))

    def cf_terms(self) -> Iterator[int]:
        """Continued-fraction partial quotients (infinite for irrational values)."""
        if self.is_rational():
            x = self.as_fraction()
            while True:
                a = math.floor(x)
                yield a
                if x == a:
                    return
                x = 1 / (x - a)
        # certified prefix: partial quotients agreed upon by both ends of an enclosure
        emitted = 0
        bits = 64
        while True:
            lo, hi = self.interval(bits)
            common = _common_cf_prefix(lo, hi)
            for a in common[emitted:]:
                yield a
            emitted = max(emitted, len(common))
            bits *= 2

    def __repr__(self) -> str:
        return f"Surd({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for n in sorted(self._terms):
            c = self._terms[n]
            if n == 1:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"sqrt({n})")
            elif c == -1:
                parts.append(f"-sqrt({n})")
            else:
                parts.append(f"{c}*sqrt({n})")
        return " + ".join(parts).replace("+ -", "- ")


def _cf_of_fraction(x: Fraction) -> list[int]:
    out = []
    while True:
        a = math.floor(x)
        out.append(a)
        if x == a:
            return out
        x = 1 / (x - a)


def _common_cf_prefix(lo: Fraction, hi: Fraction) -> list[int]:
    # every real in [lo, hi] shares the partial quotients on which lo and hi agree,
    # except possibly the last agreeing one when one endpoint's expansion ends there
    a, b = _cf_of_fraction(lo), _cf_of_fraction(hi)
    out = []
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y or i == len(a) - 1 or i == len(b) - 1:
            break
        out.append(x)
    return out


def to_surd(x: Number) -> Surd:
    return Surd.coerce(x)
