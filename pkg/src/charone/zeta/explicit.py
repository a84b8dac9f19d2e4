"""Place-by-place pairings of the counting distribution N(u) with a test function.

For g smooth with compact support in (1, inf) the identity checked is

    <N, g> = sum_p sum_m log p * g(p^m) + int kappa(u) g(u) d*u,

where <N, g> = int (u + 1) g(u) d*u + sum_rho int u^(rho+1)/(rho+1) (g(u)/u)' du
runs over the nontrivial zeros rho = 1/2 + i gamma (assumed simple), and the
archimedean term is int (u^2 g(u) - g(1))/(u^2 - 1) d*u + c g(1) with
c = (log pi + gamma_Euler)/2.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np
import sympy

from ..errors import ConfigError, SupportError
from .quadrature import integrate, integrate_log
from .testfunctions import TestFunction
from .zeros import ZeroTable

EULER_GAMMA = 0.57721566490153286060651209008240243
KAPPA_CONSTANT = 0.5 * (math.log(math.pi) + EULER_GAMMA)


@dataclass(frozen=True)
class Pairing:
    value: float
    error: float


@dataclass(frozen=True)
class CountingConfig:
    """K zeros, initial quadrature step in log u, prime bound and truncation point."""

    zero_count: int = 100
    step: float = 0.02
    p_max: int = 50
    u_max: float = 1e3
    tol: float = 1e-12

    def __post_init__(self):
        if self.zero_count < 0:
            raise ConfigError("zero_count must be >= 0")
        if not (self.step > 0 and self.p_max >= 2 and self.u_max > 1 and self.tol > 0):
            raise ConfigError("step, p_max, u_max and tol must be positive (p_max >= 2, u_max > 1)")


def _require_support(g: TestFunction) -> tuple[float, float]:
    lo, hi = g.support
    if not lo > 1:
        raise SupportError(f"test function support {g.support} must lie in (1, inf)")
    return lo, hi


def _panels(lo: float, hi: float, step: float) -> int:
    return max(4, math.ceil((math.log(hi) - math.log(lo)) / step))


def archimedean_pairing(f: TestFunction, *, step: float = 0.02, tol: float = 1e-12) -> Pairing:
    """int kappa f d*u = int_1^inf (u^2 f(u) - f(1))/(u^2 - 1) d*u + c f(1)."""
    if f.is_zero():
        return Pairing(0.0, 0.0)
    lo, hi = f.support
    if lo < 1:
        raise SupportError(f"support {f.support} must lie in [1, inf)")
    f1 = f.value_at_one()
    if f1 == 0:
        res = integrate_log(lambda u: u * u * f(u) / (u * u - 1), lo, hi, panels=_panels(lo, hi, step), rel_tol=tol)
        return Pairing(float(res.value), res.error)

    def body(u):
        u2 = u * u
        return (u2 * f(u) - f1) / (u2 - 1)

    res = integrate_log(body, 1.0, hi, panels=_panels(1.0, hi, step), rel_tol=tol)
    # beyond the support the integrand is -f(1)/(u^2 - 1): int_hi^inf du/(u(u^2-1)) = log(hi^2/(hi^2-1))/2
    tail = -f1 * 0.5 * math.log(hi * hi / (hi * hi - 1))
    return Pairing(float(res.value) + tail + KAPPA_CONSTANT * f1, res.error)


def prime_powers(lo: float, hi: float) -> list[tuple[int, int, int]]:
    """All (p, m, p^m) with lo <= p^m <= hi, sorted by p^m."""
    out = []
    for p in sympy.primerange(2, math.floor(hi) + 1):
        pm, m = p, 1
        while pm <= hi:
            if pm >= lo:
                out.append((p, m, pm))
            pm *= p
            m += 1
    return sorted(out, key=lambda t: t[2])


def prime_pairing(g: TestFunction, p_max: int) -> Pairing:
    """sum over p <= p_max, m >= 1 of log p * g(p^m); exact truncation by compact support."""
    if g.is_zero():
        return Pairing(0.0, 0.0)
    lo, hi = _require_support(g)
    terms = prime_powers(lo, hi)
    missed = [pm for p, _, pm in terms if p > p_max]
    if missed:
        raise ConfigError(f"p_max = {p_max} misses prime powers {missed[:5]} inside the support {g.support}")
    if not terms:
        return Pairing(0.0, 0.0)
    values = g(np.array([pm for _, _, pm in terms], dtype=float))
    return Pairing(math.fsum(math.log(p) * float(v) for (p, _, _), v in zip(terms, values)), 0.0)


@dataclass(frozen=True)
class ZeroSide:
    value: float
    error: float
    main_term: float
    zero_terms: tuple[float, ...]
    imaginary_residue: float


def zero_side_pairing(g: TestFunction, zeros: ZeroTable | None, K: int, *, step: float = 0.02, tol: float = 1e-12) -> ZeroSide:
    """<N, g> truncated to the first K zeros, conjugate pairs summed together."""
    if g.is_zero():
        return ZeroSide(0.0, 0.0, 0.0, (), 0.0)
    lo, hi = _require_support(g)
    if K > 0 and (zeros is None or K > len(zeros)):
        raise ConfigError(f"K = {K} exceeds the {0 if zeros is None else len(zeros)} available zeros")
    panels = _panels(lo, hi, step)
    main = integrate_log(lambda u: (u + 1) * g(u), lo, hi, panels=panels, rel_tol=tol)
    if K == 0:
        return ZeroSide(float(main.value), main.error, float(main.value), (), 0.0)
    rho = 0.5 + 1j * np.asarray(zeros.ordinates[:K])
    rho_all = np.concatenate([rho, rho.conj()])

    # in t = log u: int u^(rho+1)/(rho+1) (g/u)' du = 1/(rho+1) int e^(rho t) (u g'(u) - g(u)) dt
    def integrand(t):
        u = np.exp(t)
        base = u * g.derivative(u) - g(u)
        waves = np.exp(np.outer(t, rho_all)) / (rho_all + 1)
        z = base[:, None] * waves
        return np.concatenate([z.real, z.imag], axis=1)

    res = integrate(integrand, math.log(lo), math.log(hi), panels=panels, abs_tol=tol, rel_tol=tol)
    vals = res.value[: 2 * K] + 1j * res.value[2 * K:]
    pairs = vals[:K] + vals[K:]
    terms = tuple(float(z.real) for z in pairs)
    zero_sum = math.fsum(terms)
    residue = abs(math.fsum(float(z.imag) for z in pairs))
    value = float(main.value) + zero_sum
    return ZeroSide(value, main.error + 2 * K * res.error, float(main.value), terms, residue)


@dataclass(frozen=True)
class Report:
    zero_side: float
    prime_side: float
    arch_side: float
    discrepancy: float
    relative_discrepancy: float
    quadrature_error: float
    zero_tail_estimate: float
    imaginary_residue: float
    zero_count: int
    assumptions: list[str] = field(default_factory=lambda: ["all zeros simple"])

    def to_json(self) -> dict:
        return asdict(self)


def explicit_formula_check(g: TestFunction, cfg: CountingConfig, zeros: ZeroTable | None = None) -> Report:
    """Compare the zero side with prime + archimedean sides for one test function."""
    if g.is_zero():
        return Report(0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, cfg.zero_count)
    lo, hi = _require_support(g)
    if hi > cfg.u_max:
        raise ConfigError(f"support {g.support} exceeds the truncation point u_max = {cfg.u_max}")
    if zeros is None and cfg.zero_count > 0:
        zeros = ZeroTable.shipped()
    zs = zero_side_pairing(g, zeros, cfg.zero_count, step=cfg.step, tol=cfg.tol)
    ps = prime_pairing(g, cfg.p_max)
    ar = archimedean_pairing(g, step=cfg.step, tol=cfg.tol)
    disc = abs(zs.value - (ps.value + ar.value))
    rel = disc / abs(zs.value) if zs.value else disc
    # the pair terms decay with gamma; the largest of the last few bounds the next ones in size
    tail = max((abs(t) for t in zs.zero_terms[-5:]), default=0.0)
    return Report(
        zero_side=zs.value,
        prime_side=ps.value,
        arch_side=ar.value,
        discrepancy=disc,
        relative_discrepancy=rel,
        quadrature_error=zs.error + ar.error,
        zero_tail_estimate=tail,
        imaginary_residue=zs.imaginary_residue,
        zero_count=cfg.zero_count,
    )
