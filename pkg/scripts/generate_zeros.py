"""Regenerate src/charone/data/zeros100.txt (requires mpmath; not a runtime dependency)."""
from __future__ import annotations

import argparse
from pathlib import Path

import mpmath

HEADER = """\
# Imaginary parts gamma_k of the first {count} nontrivial zeros 1/2 + i gamma_k
# of the Riemann zeta function, in increasing order.
# Source: mpmath.zetazero (mpmath {version}) at {dps} decimal digits of working
# precision, printed to 25 significant digits.  Regenerate with
#   python scripts/generate_zeros.py
"""


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parents[1] / "src/charone/data/zeros100.txt")
    args = ap.parse_args()
    mpmath.mp.dps = 30
    lines = [HEADER.format(count=args.count, version=mpmath.__version__, dps=mpmath.mp.dps)]
    for k in range(1, args.count + 1):
        lines.append(mpmath.nstr(mpmath.zetazero(k).imag, 25) + "\n")
    args.out.write_text("".join(lines), encoding="utf-8")


if __name__ == "__main__":
    main()
