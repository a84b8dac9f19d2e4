"""Desk-scale numerics for the counting distribution N(u) and its zeta function."""
from .explicit import (
    KAPPA_CONSTANT,
    CountingConfig,
    Pairing,
    Report,
    ZeroSide,
    archimedean_pairing,
    explicit_formula_check,
    prime_pairing,
    zero_side_pairing,
)
from .hasse_weil import SeriesResult, hasse_weil_Z, soule_F, zeta_log_derivative
from .testfunctions import Bump, Plateau, Tabulated, TestFunction, Zero
from .zeros import ZeroTable

__all__ = [
    "KAPPA_CONSTANT",
    "Bump",
    "CountingConfig",
    "Pairing",
    "Plateau",
    "Report",
    "SeriesResult",
    "Tabulated",
    "TestFunction",
    "Zero",
    "ZeroSide",
    "ZeroTable",
    "archimedean_pairing",
    "explicit_formula_check",
    "hasse_weil_Z",
    "prime_pairing",
    "soule_F",
    "zero_side_pairing",
    "zeta_log_derivative",
]
