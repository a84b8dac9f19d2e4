"""Exact slopes lambda > 0 and the sign test for the linear form lambda*a + b.

Three representations are supported:

* :class:`RationalSlope` -- an exact fraction;
* :class:`SurdSlope` -- an exact sum of rational multiples of square roots,
  the quadratic irrationals ``(a + b sqrt d)/c`` being the common case;
* :class:`ContinuedFractionSlope` -- a partial-quotient stream with a declared
  depth.  Comparisons that need more terms than declared raise
  :class:`~charone.errors.DepthExceeded`.
"""
from __future__ import annotations

import itertools
import json
import math
import re
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from .errors import DepthExceeded, UnsupportedSlopeProduct
from .exact import Surd


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _sign_int_surd(x: int, y: int, d: int) -> int:
    """Sign of x + y*sqrt(d) for integers, d > 1 square-free."""
    sx, sy = _sign(x), _sign(y)
    if sy == 0:
        return sx
    if sx == 0 or sx == sy:
        return sy
    # opposite signs: compare squares
    return sx if x * x > y * y * d else sy


def convergents_of(terms: Iterable[int]) -> Iterator[Fraction]:
    h0, h1 = 0, 1
    k0, k1 = 1, 0
    for a in terms:
        h0, h1 = h1, a * h1 + h0
        k0, k1 = k1, a * k1 + k0
        yield Fraction(h1, k1)


class Slope(ABC):
    """A positive real lambda supporting exact comparisons of lambda*a + b."""

    kind: str

    @abstractmethod
    def sign_linear(self, a: int, b: int) -> int:
        """Exact sign of lambda*a + b."""

    def compare(self, i: int, j: int, i2: int, j2: int) -> int:
        """Sign of lambda*(i - i2) + (j - j2)."""
        return self.sign_linear(i - i2, j - j2)

    @abstractmethod
    def floor_mul(self, a: int) -> int:
        """floor(lambda * a)."""

    @abstractmethod
    def is_rational(self) -> bool: ...

    @abstractmethod
    def convergents(self) -> Iterator[Fraction]: ...

    def exact(self) -> Surd:
        raise UnsupportedSlopeProduct(f"{self.kind} slope has no exact algebraic value")

    def best_approximation(self, bound: int) -> Fraction:
        """A rational ordering every pair (a, b), (a', b') with |a - a'| <= bound like lambda.

        For irrational lambda this is the first convergent with denominator
        exceeding ``bound``: no fraction with a smaller denominator lies between
        it and lambda.  Rational slopes return themselves.
        """
        if self.is_rational():
            return self.as_fraction()
        for c in self.convergents():
            if c.denominator > bound:
                return c
        raise DepthExceeded(f"no convergent with denominator > {bound} within the declared depth")

    def as_fraction(self) -> Fraction:
        raise ValueError(f"{self} is not rational")

    def __mul__(self, other: "Slope") -> "Slope":
        if not isinstance(other, Slope):
            return NotImplemented
        return make_slope(self.exact() * other.exact())

    def inverse(self) -> "Slope":
        return make_slope(self.exact().inverse())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Slope):
            return NotImplemented
        try:
            return self.exact() == other.exact()
        except UnsupportedSlopeProduct:
            return self is other

    def __hash__(self) -> int:
        try:
            return hash(self.exact())
        except UnsupportedSlopeProduct:
            return id(self)

    @abstractmethod
    def to_json(self) -> dict: ...

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"


class RationalSlope(Slope):
    kind = "rational"

    def __init__(self, value):
        value = Fraction(value)
        if value <= 0:
            raise ValueError(f"slopes are positive, got {value}")
        self.value = value

    def sign_linear(self, a: int, b: int) -> int:
        v = self.value
        return _sign(a * v.numerator + b * v.denominator)

    def floor_mul(self, a: int) -> int:
        return (a * self.value.numerator) // self.value.denominator

    def is_rational(self) -> bool:
        return True

    def as_fraction(self) -> Fraction:
        return self.value

    def convergents(self) -> Iterator[Fraction]:
        return convergents_of(Surd.rational(self.value).cf_terms())

    def exact(self) -> Surd:
        return Surd.rational(self.value)

    def __float__(self) -> float:
        return float(self.value)

    def to_json(self) -> dict:
        return {"kind": "rational", "num": self.value.numerator, "den": self.value.denominator}

    def __str__(self) -> str:
        return f"{self.value.numerator}/{self.value.denominator}"


class SurdSlope(Slope):
    """An irrational slope given exactly as a combination of square roots."""

    kind = "quadratic"

    def __init__(self, value: Surd):
        if value.is_rational():
            raise ValueError("use RationalSlope for rational values")
        if value.sign() <= 0:
            raise ValueError(f"slopes are positive, got {value}")
        self.value = value
        form = value.quadratic_form()
        if form is not None:
            a, b, c, d = form
            if c < 0:
                a, b, c = -a, -b, -c
            form = (a, b, c, d)
        self._form = form

    @classmethod
    def quadratic(cls, a: int, b: int, c: int, d: int) -> "Slope":
        return make_slope(Surd.quadratic(a, b, c, d))

    def sign_linear(self, a: int, b: int) -> int:
        if self._form is not None:
            qa, qb, qc, d = self._form
            # lambda*a + b = ((qa*a + b*qc) + qb*a*sqrt d) / qc with qc > 0
            return _sign_int_surd(qa * a + b * qc, qb * a, d)
        return (self.value * a + b).sign()

    def floor_mul(self, a: int) -> int:
        return (self.value * a).floor()

    def is_rational(self) -> bool:
        return False

    def convergents(self) -> Iterator[Fraction]:
        return convergents_of(self.value.cf_terms())

    def exact(self) -> Surd:
        return self.value

    def __float__(self) -> float:
        return float(self.value)

    def to_json(self) -> dict:
        if self._form is not None:
            a, b, c, d = self._form
            return {"kind": "quadratic", "a": a, "b": b, "c": c, "d": d}
        terms = {str(n): str(c) for n, c in sorted(self.value.terms.items())}
        return {"kind": "surd", "terms": terms}

    def __str__(self) -> str:
        if self._form is not None:
            a, b, c, d = self._form
            root = f"sqrt({d})" if b == 1 else f"{b}*sqrt({d})"
            num = root if a == 0 else f"{a} + {root}".replace("+ -", "- ")
            return num if c == 1 else f"({num})/{c}"
        return str(self.value)


class ContinuedFractionSlope(Slope):
    """A slope known through its partial quotients [a0; a1, a2, ...].

    ``exact=True`` declares that the listed terms are the complete expansion of
    a rational number.  Otherwise the terms are a prefix of an infinite
    expansion (an irrational slope) and ``depth`` bounds how many partial
    quotients may be consumed.
    """

    kind = "cf"

    def __init__(
        self,
        terms: Iterable[int] | None = None,
        *,
        generator: Callable[[], Iterator[int]] | None = None,
        depth: int | None = None,
        exact: bool = False,
    ):
        if (terms is None) == (generator is None):
            raise ValueError("give exactly one of terms or generator")
        if generator is not None and depth is None:
            raise ValueError("generator-backed expansions need a declared depth")
        if generator is not None and exact:
            raise ValueError("exact expansions are given as finite term lists")
        self._generator = generator
        self._terms: list[int] = [] if terms is None else [int(t) for t in terms]
        if terms is not None:
            depth = len(self._terms) if depth is None else min(depth, len(self._terms))
        self.depth = depth
        self.exact_terms = exact
        self._iter = generator() if generator is not None else None
        first = self.terms_upto(min(2, self.depth))
        if not first:
            raise ValueError("empty continued fraction")
        checked = self._terms if generator is None else first
        if checked[0] < 0 or any(t < 1 for t in checked[1:]):
            raise ValueError("partial quotients must be a0 >= 0 and a_i >= 1")
        if first[0] == 0 and len(first) == 1:
            raise ValueError("slope must be positive")

    @classmethod
    def periodic(cls, prefix: list[int], period: list[int], depth: int) -> "ContinuedFractionSlope":
        def gen():
            return itertools.chain(prefix, itertools.cycle(period))

        return cls(generator=gen, depth=depth)

    @classmethod
    def from_surd(cls, value: Surd, depth: int) -> "ContinuedFractionSlope":
        return cls(generator=value.cf_terms, depth=depth)

    def terms_upto(self, n: int) -> list[int]:
        n = min(n, self.depth)
        while len(self._terms) < n and self._iter is not None:
            try:
                self._terms.append(int(next(self._iter)))
            except StopIteration:
                self._iter = None
                self.depth = len(self._terms)
        return self._terms[:n]

    @property
    def terms(self) -> list[int]:
        return self.terms_upto(self.depth)

    def is_rational(self) -> bool:
        return self.exact_terms

    def as_fraction(self) -> Fraction:
        if not self.exact_terms:
            raise ValueError("a truncated expansion does not determine a rational value")
        *_, last = convergents_of(self.terms)
        return last

    def exact(self) -> Surd:
        if self.exact_terms:
            return Surd.rational(self.as_fraction())
        return super().exact()

    def convergents(self) -> Iterator[Fraction]:
        return convergents_of(self.terms)

    def _brackets(self) -> Iterator[tuple[Fraction, Fraction]]:
        prev = None
        for c in self.convergents():
            if prev is not None:
                yield (min(prev, c), max(prev, c))
            prev = c

    def sign_linear(self, a: int, b: int) -> int:
        if self.exact_terms:
            v = self.as_fraction()
            return _sign(a * v.numerator + b * v.denominator)
        if a == 0:
            return _sign(b)
        target = Fraction(-b, a)
        # an infinite expansion lies strictly between consecutive convergents
        for lo, hi in self._brackets():
            if target <= lo:
                return _sign(a)
            if target >= hi:
                return -_sign(a)
        raise DepthExceeded(f"{self.depth} partial quotients do not decide sign(lambda*{a} + {b})")

    def floor_mul(self, a: int) -> int:
        if self.exact_terms:
            return math.floor(self.as_fraction() * a)
        if a == 0:
            return 0
        for lo, hi in self._brackets():
            lo_v, hi_v = sorted((lo * a, hi * a))
            f = math.floor(lo_v)
            if math.ceil(hi_v) - 1 == f:
                return f
        raise DepthExceeded(f"{self.depth} partial quotients do not decide floor(lambda*{a})")

    def __float__(self) -> float:
        *_, last = self.convergents()
        return float(last)

    def to_json(self) -> dict:
        out = {"kind": "cf", "terms": list(self.terms)}
        if self.exact_terms:
            out["exact"] = True
        return out

    def __str__(self) -> str:
        t = self.terms
        body = f"[{t[0]}; " + ", ".join(map(str, t[1:])) + "]" if len(t) > 1 else f"[{t[0]}]"
        return body if self.exact_terms else body[:-1] + ", ...]"


def make_slope(value) -> Slope:
    """Wrap an exact positive value (int, Fraction or Surd) as a slope."""
    if isinstance(value, Slope):
        return value
    if isinstance(value, Surd):
        if value.is_rational():
            return RationalSlope(value.as_fraction())
        return SurdSlope(value)
    return RationalSlope(value)


def sqrt_slope(n: int) -> Slope:
    return make_slope(Surd.sqrt(n))


def slope_from_json(obj: dict) -> Slope:
    kind = obj.get("kind")
    if kind == "rational":
        return RationalSlope(Fraction(int(obj["num"]), int(obj["den"])))
    if kind == "quadratic":
        return SurdSlope.quadratic(int(obj["a"]), int(obj["b"]), int(obj["c"]), int(obj["d"]))
    if kind == "surd":
        return make_slope(Surd({int(n): Fraction(c) for n, c in obj["terms"].items()}))
    if kind == "cf":
        return ContinuedFractionSlope(obj["terms"], exact=bool(obj.get("exact", False)))
    raise ValueError(f"unknown slope kind {kind!r}")


_SQRT = re.compile(r"^(?:(\d+)\*)?sqrt\(?(\d+)\)?(?:/(\d+))?$")


def parse_slope(text: str) -> Slope:
    """Parse the CLI slope syntax.

    Accepted forms: ``3/2``, ``rational:3/2``, ``sqrt2``, ``sqrt(2)``,
    ``2*sqrt(3)/5``, ``quadratic:a,b,c,d`` meaning (a + b sqrt d)/c,
    ``cf:1,2,2,2`` (truncated expansion), ``cf-exact:1,2`` and a JSON object.
    """
    s = text.strip()
    if s.startswith("{"):
        return slope_from_json(json.loads(s))
    if s.startswith("rational:"):
        s = s[len("rational:"):]
    if s.startswith("quadratic:"):
        a, b, c, d = (int(x) for x in s[len("quadratic:"):].split(","))
        return SurdSlope.quadratic(a, b, c, d)
    if s.startswith("cf-exact:"):
        return ContinuedFractionSlope([int(x) for x in s[len("cf-exact:"):].split(",")], exact=True)
    if s.startswith("cf:"):
        return ContinuedFractionSlope([int(x) for x in s[len("cf:"):].split(",")])
    m = _SQRT.match(s)
    if m:
        coeff = int(m.group(1) or 1)
        den = int(m.group(3) or 1)
        return make_slope(Surd.sqrt(int(m.group(2)), Fraction(coeff, den)))
    try:
        return RationalSlope(Fraction(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse slope {text!r}") from exc
