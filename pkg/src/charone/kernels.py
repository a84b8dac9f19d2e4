"""Kernel dispatch: compiled kernels when available, Python reference otherwise.

The compiled path works on 64-bit integers, so it is only used when every
coordinate is below 2**30 in absolute value; larger inputs go through the
Python kernels, which use arbitrary-precision integers.
"""
from __future__ import annotations

import os
from contextlib import contextmanager

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

_LIMIT = 1 << 30
_backend = "compiled" if _compiled is not None and os.environ.get("CHARONE_PURE_PYTHON") != "1" else "python"


def available_backends() -> list[str]:
    return ["python"] + (["compiled"] if _compiled is not None else [])


def current_backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    global _backend
    if name not in available_backends():
        raise ValueError(f"kernel backend {name!r} is not available")
    _backend = name


@contextmanager
def use_backend(name: str):
    previous = _backend
    set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)


def _small(*lists) -> bool:
    for pts in lists:
        for a, b in pts:
            if not (-_LIMIT < a < _LIMIT and -_LIMIT < b < _LIMIT):
                return False
    return True


def _pick(*lists):
    if _backend == "compiled" and _small(*lists):
        return _compiled
    return _kernels_py


def canonicalize(points) -> list[tuple[int, int]]:
    points = list(points)
    return _pick(points).canonicalize(points)


def staircase_mul(xs, ys) -> list[tuple[int, int]]:
    return _pick(xs, ys).staircase_mul(xs, ys)


def lower_hull(corners) -> list[tuple[int, int]]:
    return _pick(corners).lower_hull(corners)


def polygon_mul(xs, ys) -> list[tuple[int, int]]:
    return _pick(xs, ys).polygon_mul(xs, ys)
