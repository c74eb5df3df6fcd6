"""Speedup, efficiency and Amdahl's law."""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal


@dataclass(frozen=True)
class AmdahlParams:
    f: float  # serial fraction
    P: int  # processor count

    def __post_init__(self):
        if not (0.0 <= self.f <= 1.0) or math.isnan(self.f):
            raise ValueError(f"serial fraction must lie in [0, 1], got {self.f}")
        if int(self.P) != self.P or self.P < 1:
            raise ValueError(f"processor count must be a positive integer, got {self.P}")


@dataclass(frozen=True)
class Measurement:
    serial_time: float
    parallel_time: float
    processors: int

    def __post_init__(self):
        for name in ("serial_time", "parallel_time"):
            t = getattr(self, name)
            if not t > 0 or not math.isfinite(t):
                raise ValueError(f"{name} must be a positive duration, got {t}")
        if self.processors < 1:
            raise ValueError(f"processors must be >= 1, got {self.processors}")


def speedup(m: Measurement) -> float:
    """Time of the best serial run divided by the parallel run time."""
    return m.serial_time / m.parallel_time


def efficiency(s: float, P: int) -> float:
    if P < 1:
        raise ValueError(f"processor count must be >= 1, got {P}")
    return s / P


def amdahl_max_speedup(p: AmdahlParams) -> float:
    """Upper bound on speedup when a fraction ``f`` of the work is serial: 1 / (f + (1-f)/P)."""
    return 1.0 / (p.f + (1.0 - p.f) / p.P)


def amdahl_max_efficiency(p: AmdahlParams) -> float:
    return efficiency(amdahl_max_speedup(p), p.P)


def rounded(x: float, digits: int) -> float:
    """Round half-to-even on the decimal expansion of ``x``."""
    q = Decimal(1).scaleb(-digits)
    return float(Decimal(repr(x)).quantize(q, rounding=ROUND_HALF_EVEN))
