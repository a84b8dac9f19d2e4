"""Frobenius correspondences Psi(lambda) and their composition law.

Psi(lambda) is the reduced correspondence on the semiring R(lambda) of
exponents N + lambda N, with left generator image l(q) = q^lambda and right
image r(q) = q.  Elements are never enumerated: an exponent i*lambda + j is the
formal pair (i, j) and is compared exactly through the slope.

Composition multiplies slopes, except when two irrational slopes have a
rational product: the result is then the tangential deformation Id_eps of
Psi(lambda lambda'), whose left generator carries the germ exponent
lambda lambda' (1 + eps) in the semiring R_eps of germs at eps = 0+.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Union

from .errors import DepthExceeded, NotRecoverable, UnsupportedComposition
from .exact import Surd
from .slopes import Slope, make_slope

Exact = Union[Fraction, Surd]


@dataclass(frozen=True, order=True)
class ExponentVec:
    """The formal exponent i*lambda + j."""

    i: int
    j: int

    def __post_init__(self):
        if self.i < 0 or self.j < 0:
            raise ValueError("exponents lie in N + lambda N")

    def __add__(self, other: "ExponentVec") -> "ExponentVec":
        return ExponentVec(self.i + other.i, self.j + other.j)


@dataclass(frozen=True)
class ReducedCorrespondence:
    slope: Slope
    left: ExponentVec = ExponentVec(1, 0)
    right: ExponentVec = ExponentVec(0, 1)

    kind = "psi"

    def left_image(self, n: int) -> ExponentVec:
        """Exponent of l(q^n) = q^(n lambda)."""
        return ExponentVec(self.left.i * n, self.left.j * n)

    def right_image(self, n: int) -> ExponentVec:
        return ExponentVec(self.right.i * n, self.right.j * n)

    def act_left(self, alpha: ExponentVec, n: int) -> ExponentVec:
        """l(q^n) * q^alpha = q^(alpha + n lambda)."""
        return alpha + self.left_image(n)

    def act_right(self, alpha: ExponentVec, n: int) -> ExponentVec:
        return alpha + self.right_image(n)

    def compare(self, x: ExponentVec, y: ExponentVec) -> int:
        """Exact sign of value(x) - value(y)."""
        return self.slope.compare(x.i, x.j, y.i, y.j)

    def add(self, x: ExponentVec, y: ExponentVec) -> ExponentVec:
        """Semiring sum q^x + q^y = q^min(x, y)."""
        return x if self.compare(x, y) <= 0 else y

    def value(self, x: ExponentVec) -> Exact:
        return self.slope.exact() * x.i + x.j

    def generator_values(self) -> tuple[Surd, Surd]:
        return (self.value(self.left), self.value(self.right))


def make_correspondence(slope: Slope) -> ReducedCorrespondence:
    return ReducedCorrespondence(make_slope(slope))


@dataclass(frozen=True)
class GermExponent:
    """The exponent value + coeff*eps of a germ at eps = 0+.

    Near eps = 0+, min of two linear functions is the lexicographic minimum of
    their coefficient pairs, so germ addition is lex-min and multiplication
    adds coefficients.
    """

    value: Exact
    eps: Fraction = Fraction(0)

    def _key(self):
        return (Surd.coerce(self.value), Surd.coerce(self.eps))

    def __add__(self, other: "GermExponent") -> "GermExponent":
        return germ_add(self, other)

    def __mul__(self, other: "GermExponent") -> "GermExponent":
        return germ_mul(self, other)

    def at_zero(self) -> Exact:
        return self.value

    def __eq__(self, other) -> bool:
        if not isinstance(other, GermExponent):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())


def _lex_le(x: GermExponent, y: GermExponent) -> bool:
    (xv, xe), (yv, ye) = x._key(), y._key()
    s = (xv - yv).sign()
    if s != 0:
        return s < 0
    return (xe - ye).sign() <= 0


def germ_add(x: GermExponent, y: GermExponent) -> GermExponent:
    return x if _lex_le(x, y) else y


def germ_mul(x: GermExponent, y: GermExponent) -> GermExponent:
    return GermExponent(_simplify(Surd.coerce(x.value) + Surd.coerce(y.value)), _simplify(Surd.coerce(x.eps) + Surd.coerce(y.eps)))


def _simplify(x: Surd) -> Exact:
    return x.as_fraction() if x.is_rational() else x


@dataclass(frozen=True)
class DeformedCorrespondence:
    """Id_eps o Psi(alpha) for rational alpha; alpha = 1 is Id_eps itself.

    ``left`` is the germ exponent of l(q), alpha (1 + eps); ``right`` that of r(q).
    """

    alpha: Fraction
    left: GermExponent
    right: GermExponent

    @property
    def kind(self) -> str:
        return "id-eps" if self.alpha == 1 else "id-eps-psi"

    @property
    def slope(self) -> Slope:
        return make_slope(self.alpha)

    def at_zero(self) -> ReducedCorrespondence:
        """Evaluation at eps = 0: the generators of Psi(alpha)."""
        return make_correspondence(make_slope(self.alpha))


def identity_eps() -> DeformedCorrespondence:
    return _deformed(Fraction(1))


def _deformed(alpha: Fraction) -> DeformedCorrespondence:
    return DeformedCorrespondence(alpha, GermExponent(alpha, alpha), GermExponent(Fraction(1), Fraction(0)))


Correspondence = Union[ReducedCorrespondence, DeformedCorrespondence]


def compose(a: Correspondence, b: Correspondence) -> Correspondence:
    """Psi(lambda) o Psi(lambda').

    Psi(lambda lambda') when the product is irrational or both slopes are
    rational; Id_eps o Psi(lambda lambda') when both are irrational with a
    rational product (Id_eps when that product is 1).  Truncated continued
    fractions raise UnsupportedSlopeProduct since rationality of the product
    cannot be decided from finitely many partial quotients.
    """
    if isinstance(a, DeformedCorrespondence) or isinstance(b, DeformedCorrespondence):
        raise UnsupportedComposition("compositions through a deformed correspondence are not supported")
    x, y = a.slope.exact(), b.slope.exact()
    product = x * y
    if product.is_rational() and not x.is_rational():
        return _deformed(product.as_fraction())
    return make_correspondence(make_slope(product))


def same_correspondence(a: Correspondence, b: Correspondence) -> bool:
    """Equality up to canonical isomorphism: same kind and generator exponents."""
    if a.kind != b.kind:
        return False
    if isinstance(a, DeformedCorrespondence):
        return a.alpha == b.alpha and a.left == b.left and a.right == b.right
    return a.generator_values() == b.generator_values()


def span_reduce(indices: Iterable[int]) -> tuple[int, int]:
    """sum_{k in S} Z^k depends only on (min S, max S)."""
    s = list(indices)
    if not s:
        raise ValueError("span of an empty set of powers")
    return (min(s), max(s))


# finite presentations ------------------------------------------------------


def numerical_semigroup(gens: Iterable[int], upto: int) -> list[int]:
    """Elements <= upto of the additive monoid generated by ``gens``."""
    gens = sorted(set(gens))
    reach = [False] * (upto + 1)
    reach[0] = True
    for v in range(1, upto + 1):
        reach[v] = any(g <= v and reach[v - g] for g in gens)
    return [v for v in range(upto + 1) if reach[v]]


def conductor(gens: Iterable[int]) -> int:
    """Smallest c such that every integer >= c lies in the monoid (gcd 1 required)."""
    gens = sorted(set(gens))
    if math.gcd(*gens) != 1:
        raise ValueError("generators must be coprime")
    # a run of min(gens) consecutive elements reaches everything beyond it
    g0 = gens[0]
    upto = g0 * gens[-1] + g0
    while True:
        elems = set(numerical_semigroup(gens, upto))
        run = 0
        for v in range(upto + 1):
            run = run + 1 if v in elems else 0
            if run == g0:
                return v - g0 + 1
        upto *= 2


@dataclass(frozen=True)
class Presentation:
    """Z_min^+ generated by X = q^n and Y = q^m subject to X^m = Y^n."""

    n: int
    m: int

    @property
    def relation(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """((m, 0), (0, n)): the monomials X^m and Y^n that are identified."""
        return ((self.m, 0), (0, self.n))

    def exponents(self, upto: int) -> list[int]:
        """Exponents of the monomials X^a Y^b, up to ``upto``."""
        return numerical_semigroup((self.n, self.m), upto)


def presentation(n: int, m: int) -> Presentation:
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    return Presentation(n, m)


def recover_pair(p: Presentation) -> frozenset[int]:
    """Recover {n, m} as the indecomposable exponents of the monoid."""
    if math.gcd(p.n, p.m) != 1:
        raise ValueError("recovery needs coprime n, m")
    elems = p.exponents(max(p.n, p.m))
    nonzero = [e for e in elems if e > 0]
    present = set(nonzero)
    atoms = [e for e in nonzero if not any(e - f in present for f in nonzero if f < e)]
    if len(atoms) != 2:
        raise NotRecoverable(f"the monoid has indecomposables {atoms}; the pair is not determined")
    return frozenset(atoms)


# Dedekind cuts ---------------------------------------------------------------


def _cut_scan(corr: ReducedCorrespondence, bound: int) -> tuple[Fraction, Fraction]:
    # literal form: test X^a against Y^b for every a <= bound; linear in bound
    lower = upper = None
    x = corr.left
    for a in range(1, bound + 1):
        # compare X^a with Y^b: b < lambda a  or  b >= lambda a
        fl = corr.slope.floor_mul(a)
        exact = corr.compare(ExponentVec(a * x.i, a * x.j), ExponentVec(0, fl)) == 0
        lo = Fraction(fl - 1 if exact else fl, a)
        hi = Fraction(fl if exact else fl + 1, a)
        lower = lo if lower is None or lo > lower else lower
        upper = hi if upper is None or hi < upper else upper
    return lower, upper


def _gallop(ok: Callable[[int], bool]) -> int:
    """Largest k >= 1 with ok(k), for a predicate true on 1..K and false beyond."""
    hi = 1
    while ok(2 * hi):
        hi *= 2
    lo, hi = hi, 2 * hi  # ok(lo) holds, ok(hi) fails
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ok(mid):
            lo = mid
        else:
            hi = mid
    return lo


def _cut_below(corr: ReducedCorrespondence, bound: int) -> tuple[Fraction, Fraction]:
    # Farey neighbours of lambda with denominators <= bound, by a Stern-Brocot
    # descent that takes each run of equal moves in one galloping step
    slope = corr.slope

    def below(p: int, q: int) -> bool:
        return slope.sign_linear(q, -p) > 0  # p/q < lambda

    n = slope.floor_mul(1)
    if not below(n, 1):
        n -= 1
    lp, lq, rp, rq = n, 1, n + 1, 1
    while lq + rq <= bound:
        if below(lp + rp, lq + rq):
            k = _gallop(lambda k: lq + k * rq <= bound and below(lp + k * rp, lq + k * rq))
            lp, lq = lp + k * rp, lq + k * rq
        else:
            k = _gallop(lambda k: rq + k * lq <= bound and not below(rp + k * lp, rq + k * lq))
            rp, rq = rp + k * lp, rq + k * lq
    return Fraction(lp, lq), Fraction(rp, rq)


def dedekind_cut_bounded(corr: ReducedCorrespondence, max_denominator: int) -> tuple[Fraction, Fraction]:
    """(max D_-, min D_+) over fractions b/a with a <= max_denominator.

    D_- collects b/a with Y^b strictly below X^a in exponent (b < lambda a), D_+
    those with b >= lambda a; so lower < lambda <= upper.
    """
    if max_denominator < 1:
        raise ValueError("max_denominator must be >= 1")
    return _cut_below(corr, max_denominator)


def dedekind_cut(corr: ReducedCorrespondence, depth: int) -> tuple[Fraction, Fraction]:
    """Bracket lower < lambda <= upper read off after ``depth`` partial quotients.

    The denominators a range up to that of the depth-th convergent of lambda
    (the whole expansion when lambda is rational with a shorter one), so the
    bracket is bounded by consecutive convergents and has width below
    1/(q_{depth-1} q_depth).
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    bound = None
    for k, c in enumerate(corr.slope.convergents(), start=1):
        bound = c.denominator
        if k == depth:
            break
    else:
        if not corr.slope.is_rational():
            raise DepthExceeded(f"the slope provides fewer than {depth} partial quotients")
    return _cut_below(corr, bound)
