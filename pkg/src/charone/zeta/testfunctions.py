"""Smooth compactly supported test functions g on (0, inf), evaluable with g'."""
from __future__ import annotations

import math
from abc import ABC, abstractmethod

import numpy as np
from scipy.interpolate import CubicSpline


class TestFunction(ABC):
    __test__ = False  # not a pytest class

    kind: str
    support: tuple[float, float] | None

    @abstractmethod
    def __call__(self, u) -> np.ndarray: ...

    @abstractmethod
    def derivative(self, u) -> np.ndarray: ...

    def value_at_one(self) -> float:
        return float(self(np.array([1.0]))[0])

    def is_zero(self) -> bool:
        return self.support is None


def _mollifier(s: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """phi(s) = e * exp(-1/(1 - s^2)) on |s| < 1 (peak 1) and its derivative."""
    s = np.asarray(s, dtype=float)
    inside = np.abs(s) < 1
    phi = np.zeros_like(s)
    dphi = np.zeros_like(s)
    si = s[inside]
    d = 1 - si * si
    phi[inside] = np.exp(1 - 1 / d)
    dphi[inside] = phi[inside] * (-2 * si / (d * d))
    return phi, dphi


class Bump(TestFunction):
    """Smooth bump in log u: g(u) = phi(log(u/u0)/w), support [u0 e^-w, u0 e^w].

    Shaped like a Gaussian in log u around u0 but exactly compactly supported
    and C-infinity.
    """

    kind = "bump"

    def __init__(self, u0: float, width: float):
        if not width > 0:
            raise ValueError("width must be positive")
        if not u0 * math.exp(-width) > 1:
            raise ValueError("bump support must lie in (1, inf): need u0 * exp(-width) > 1")
        self.u0 = float(u0)
        self.width = float(width)
        self.support = (u0 * math.exp(-width), u0 * math.exp(width))

    def __call__(self, u):
        u = np.asarray(u, dtype=float)
        return _mollifier(np.log(u / self.u0) / self.width)[0]

    def derivative(self, u):
        u = np.asarray(u, dtype=float)
        _, dphi = _mollifier(np.log(u / self.u0) / self.width)
        return dphi / (self.width * u)

    def __repr__(self) -> str:
        return f"Bump(u0={self.u0}, width={self.width})"


def _psi(x: np.ndarray) -> np.ndarray:
    out = np.zeros_like(x)
    pos = x > 0
    out[pos] = np.exp(-1 / x[pos])
    return out


def smooth_step(x) -> tuple[np.ndarray, np.ndarray]:
    """C-infinity step S from 0 (x <= 0) to 1 (x >= 1) and its derivative."""
    x = np.asarray(x, dtype=float)
    a, b = _psi(x), _psi(1 - x)
    s = a / (a + b)
    da = np.zeros_like(x)
    db = np.zeros_like(x)
    pos = x > 0
    da[pos] = a[pos] / (x[pos] * x[pos])
    neg = x < 1
    db[neg] = b[neg] / ((1 - x[neg]) ** 2)
    # d/dx of a/(a+b) with b = psi(1-x), so db/dx = -psi'(1-x)
    ds = (da * b + a * db) / (a + b) ** 2
    return s, ds


class Plateau(TestFunction):
    """Equal to 1 on [flat_lo, flat_hi], smoothly tapered to 0 at lo and hi.

    ``lo == flat_lo`` gives a function with no left taper (g(lo) = 1); this is
    how functions with g(1) != 0 are built for the archimedean pairing.
    """

    kind = "plateau"

    def __init__(self, lo: float, flat_lo: float, flat_hi: float, hi: float):
        if not (0 < lo <= flat_lo <= flat_hi < hi):
            raise ValueError("need 0 < lo <= flat_lo <= flat_hi < hi")
        self.lo, self.flat_lo, self.flat_hi, self.hi = map(float, (lo, flat_lo, flat_hi, hi))
        self.support = (self.lo, self.hi)

    def _parts(self, u):
        u = np.asarray(u, dtype=float)
        if self.flat_lo > self.lo:
            left, dleft = smooth_step((u - self.lo) / (self.flat_lo - self.lo))
            dleft = dleft / (self.flat_lo - self.lo)
        else:
            left = (u >= self.lo).astype(float)
            dleft = np.zeros_like(u)
        right, dright = smooth_step((self.hi - u) / (self.hi - self.flat_hi))
        dright = -dright / (self.hi - self.flat_hi)
        return left, dleft, right, dright

    def __call__(self, u):
        left, _, right, _ = self._parts(u)
        return left * right

    def derivative(self, u):
        left, dleft, right, dright = self._parts(u)
        return dleft * right + left * dright

    def __repr__(self) -> str:
        return f"Plateau({self.lo}, {self.flat_lo}, {self.flat_hi}, {self.hi})"


class Tabulated(TestFunction):
    """Clamped cubic spline through user samples (u_i, g_i), zero outside [u_0, u_n].

    The samples must vanish at both ends; the clamped end conditions make the
    extension by zero continuously differentiable.
    """

    kind = "tabulated"

    def __init__(self, u, values):
        u = np.asarray(u, dtype=float)
        values = np.asarray(values, dtype=float)
        if u.ndim != 1 or u.shape != values.shape or len(u) < 4:
            raise ValueError("need at least four matching samples")
        if np.any(np.diff(u) <= 0):
            raise ValueError("sample abscissae must be strictly increasing")
        if values[0] != 0 or values[-1] != 0:
            raise ValueError("tabulated test functions must vanish at both ends")
        self.support = (float(u[0]), float(u[-1]))
        self._spline = CubicSpline(u, values, bc_type="clamped")
        self._dspline = self._spline.derivative()

    def _mask(self, u):
        u = np.asarray(u, dtype=float)
        return u, (u >= self.support[0]) & (u <= self.support[1])

    def __call__(self, u):
        u, inside = self._mask(u)
        return np.where(inside, self._spline(u), 0.0)

    def derivative(self, u):
        u, inside = self._mask(u)
        return np.where(inside, self._dspline(u), 0.0)


class Zero(TestFunction):
    kind = "zero"
    support = None

    def __call__(self, u):
        return np.zeros_like(np.asarray(u, dtype=float))

    def derivative(self, u):
        return np.zeros_like(np.asarray(u, dtype=float))
