"""Tables of zeta zero ordinates, validated against the Riemann-von Mangoldt count."""
from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from ..errors import ConfigError

COUNT_TOLERANCE = 2.0


def smooth_count(t: float) -> float:
    """(T/2pi) log(T/2pi) - T/2pi + 7/8, the smooth part of the zero counting function."""
    x = t / (2 * math.pi)
    return x * math.log(x) - x + 7 / 8


@dataclass(frozen=True)
class ZeroTable:
    ordinates: tuple[float, ...]
    source: str

    def __post_init__(self):
        g = self.ordinates
        if not g:
            raise ConfigError("zero table is empty")
        if any(b <= a for a, b in zip(g, g[1:])):
            raise ConfigError("zero ordinates must be strictly increasing")
        if g[0] <= 14:
            raise ConfigError("zero ordinates must exceed 14")
        # the count jumps from k - 1 to k at the k-th ordinate; compare the midpoint
        for k, t in enumerate(g, start=1):
            if abs(k - 0.5 - smooth_count(t)) > COUNT_TOLERANCE:
                raise ConfigError(
                    f"ordinate #{k} = {t} is inconsistent with the zero count "
                    f"(smooth count there is {smooth_count(t):.2f})"
                )

    def __len__(self) -> int:
        return len(self.ordinates)

    @classmethod
    def from_text(cls, text: str, source: str = "<text>") -> "ZeroTable":
        values = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                values.append(float(line))
            except ValueError:
                raise ConfigError(f"{source}:{lineno}: not a decimal ordinate: {line!r}") from None
        return cls(tuple(values), source)

    @classmethod
    def load(cls, path: str | Path) -> "ZeroTable":
        path = Path(path)
        return cls.from_text(path.read_text(encoding="utf-8"), str(path))

    @classmethod
    def shipped(cls) -> "ZeroTable":
        """The first 100 ordinates distributed with the package."""
        ref = resources.files("charone") / "data" / "zeros100.txt"
        return cls.from_text(ref.read_text(encoding="utf-8"), "charone/data/zeros100.txt")
