"""Trust carried along a chain of recommenders.

Trust values live on a continuous [0, 4] scale where 4 means full trust.
Each recommender scales what it passes on by its own value over 4, so a
chain of fully trusted recommenders hands the target's value through
unchanged.
"""

from __future__ import annotations

import math
from fractions import Fraction
from dataclasses import dataclass
from typing import Sequence

FULL_TRUST = 4.0


class TrustError(ValueError):
    pass


def _check(value: float, what: str) -> float:
    value = float(value)
    if math.isnan(value) or not 0.0 <= value <= FULL_TRUST:
        raise TrustError(f"{what} = {value} outside [0, {FULL_TRUST:g}]")
    return value


@dataclass(frozen=True)
class TrustPath:
    recommender_values: tuple[float, ...]
    target_value: float

    def __init__(self, recommender_values: Sequence[float], target_value: float):
        rtv = tuple(_check(v, f"recommender value at index {i}") for i, v in enumerate(recommender_values))
        object.__setattr__(self, "recommender_values", rtv)
        object.__setattr__(self, "target_value", _check(target_value, "target value"))


def trust_value(path: TrustPath) -> float:
    # exact product, rounded once: order-free and monotone to the last bit
    tv = Fraction(path.target_value)
    for r in path.recommender_values:
        tv *= Fraction(r) / 4
    return float(tv)


def compose_paths(prefix: Sequence[float], suffix: TrustPath) -> TrustPath:
    """Prepend recommenders to ``suffix``; the target value stays the suffix's."""
    return TrustPath(tuple(prefix) + suffix.recommender_values, suffix.target_value)
