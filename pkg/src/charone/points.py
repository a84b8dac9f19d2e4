"""Points of the arithmetic site as rank-one subgroups of Q, labelled by supernatural numbers.

A supernatural number a = prod p^{n_p} (n_p in N or inf) defines the subgroup
H_a = {x in Q : a x in Z-hat}, i.e. x is allowed a denominator p^k with
k <= n_p.  Only finitely describable exponent functions are represented: a
finite explicit map plus a default (0 or inf) for all other primes.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

import sympy

from .errors import NotInSubgroup
from .tropical import INF, Exponent, Zmin


def _parse_exponent(e) -> Exponent:
    if e is INF or e == "inf":
        return INF
    if isinstance(e, bool) or not isinstance(e, int) or e < 0:
        raise ValueError(f"supernatural exponents are non-negative integers or inf, got {e!r}")
    return e


class Supernatural:
    __slots__ = ("explicit", "default", "base_point")

    def __init__(self, explicit: Mapping[int, Exponent] | None = None, default: Exponent = 0, *, base_point: bool = False):
        default = _parse_exponent(default)
        if default not in (0, INF):
            raise ValueError("the default exponent must be 0 or inf")
        clean: dict[int, Exponent] = {}
        for p, e in (explicit or {}).items():
            p = int(p)
            if not sympy.isprime(p):
                raise ValueError(f"{p} is not prime")
            e = _parse_exponent(e)
            if e != default:
                clean[p] = e
        if base_point and clean:
            raise ValueError("the base point has no exponents")
        self.explicit = dict(sorted(clean.items()))
        self.default = default
        self.base_point = base_point

    @classmethod
    def base(cls) -> "Supernatural":
        return cls(base_point=True)

    @classmethod
    def one(cls) -> "Supernatural":
        """All exponents 0: the subgroup Z."""
        return cls()

    def exponent(self, p: int) -> Exponent:
        if self.base_point:
            raise ValueError("the base point has no exponent function")
        return self.explicit.get(p, self.default)

    def infinite_primes(self) -> tuple[str, frozenset[int]]:
        """Finite description of {p : n_p = inf}: ("finite", S) or ("cofinite", complement)."""
        if self.default == 0:
            return ("finite", frozenset(p for p, e in self.explicit.items() if e is INF))
        return ("cofinite", frozenset(self.explicit))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Supernatural):
            return NotImplemented
        return (self.base_point, self.default, self.explicit) == (other.base_point, other.default, other.explicit)

    def __hash__(self) -> int:
        return hash((self.base_point, self.default, tuple(self.explicit.items())))

    def __repr__(self) -> str:
        if self.base_point:
            return "Supernatural(base_point)"
        parts = [f"{p}^{'inf' if e is INF else e}" for p, e in self.explicit.items()]
        if self.default is INF:
            parts.append("p^inf otherwise")
        return "Supernatural(" + (" * ".join(parts) or "1") + ")"

    def to_json(self) -> dict:
        if self.base_point:
            return {"base_point": True}
        return {
            "explicit": {str(p): ("inf" if e is INF else e) for p, e in self.explicit.items()},
            "default": "inf" if self.default is INF else 0,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Supernatural":
        if obj.get("base_point"):
            return cls.base()
        return cls({int(p): e for p, e in obj.get("explicit", {}).items()}, obj.get("default", 0))


def subgroup_contains(a: Supernatural, x) -> bool:
    """x in H_a: every prime power p^k dividing the denominator has k <= n_p."""
    x = Fraction(x)
    if a.base_point:
        return x == 0
    for p, k in sympy.factorint(x.denominator).items():
        e = a.exponent(p)
        if e is not INF and e < k:
            return False
    return True


def partial_fractions(x) -> tuple[int, list[tuple[int, int, int]]]:
    """x = n + sum n_p / p^alpha with 0 < n_p < p^alpha and p not dividing n_p."""
    x = Fraction(x)
    num, den = x.numerator, x.denominator
    parts = []
    total = Fraction(0)
    for p, alpha in sorted(sympy.factorint(den).items()):
        pa = p**alpha
        rest = den // pa
        # num/den = n_p/p^alpha + (something)/rest  <=>  num = n_p*rest (mod p^alpha)
        n_p = num * pow(rest, -1, pa) % pa
        parts.append((p, alpha, n_p))
        total += Fraction(n_p, pa)
    n = x - total
    assert n.denominator == 1
    return int(n), parts


def points_isomorphic(a: Supernatural, b: Supernatural) -> bool:
    """H_b = q H_a for some positive rational q."""
    if a.base_point or b.base_point:
        return a.base_point and b.base_point
    return a.default == b.default and a.infinite_primes() == b.infinite_primes()


@dataclass(frozen=True)
class RankOneElem:
    """An element of the stalk H_a (an exact rational in the subgroup)."""

    value: Fraction
    owner: Supernatural

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))
        if not subgroup_contains(self.owner, self.value):
            raise NotInSubgroup(f"{self.value} is not in the subgroup of {self.owner!r}")


def stalk_ops(a: Supernatural, op: str, x: RankOneElem, y: RankOneElem) -> RankOneElem:
    """The semifield H_max: op "max" is addition, op "plus" multiplication."""
    if x.owner != a or y.owner != a:
        raise ValueError("both operands must belong to the stalk of a")
    if op == "max":
        return RankOneElem(max(x.value, y.value), a)
    if op == "plus":
        return RankOneElem(x.value + y.value, a)
    raise ValueError(f"unknown stalk operation {op!r}")


GENERIC = "generic"


def theta_image(p) -> Supernatural:
    """Prime p -> p^inf (the group of fractions with p-power denominators); generic point -> base point."""
    if p == GENERIC:
        return Supernatural.base()
    if not sympy.isprime(p):
        raise ValueError(f"{p} is not prime")
    return Supernatural({p: INF})


def global_sections_check(x: Zmin) -> bool:
    """x is fixed by every Frobenius Fr_k, i.e. lies in B = {q^0, q^inf}."""
    return x.exp is INF or x.exp == 0
