"""Minkowski distances and per-dimension separation summaries.

The metric order is a float: any finite p >= 1, math.inf for the Tchebycheff
max-aggregation, or -math.inf for the min-aggregation used by the strong
separation to the anti-ideal. Min-aggregation is not a metric (it violates
identity of indiscernibles), which is exactly why it only appears inside the
non-compensatory separation summaries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidOrder, LengthMismatch
from .normalize import WeightedMatrix
from .schema import IndicatorSchema


def lp_distance(x, y, order: float) -> float:
    """Aggregate componentwise gaps |x_j - y_j| under the given order.

    Finite order p returns (sum |x_j - y_j|^p)^(1/p); +inf the largest gap;
    -inf the smallest gap.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1 or x.size == 0:
        raise LengthMismatch(f"expected equal-length vectors, got {x.shape} and {y.shape}")
    gaps = np.abs(x - y)
    if order == math.inf:
        return float(gaps.max())
    if order == -math.inf:
        return float(gaps.min())
    if not (isinstance(order, (int, float)) and order >= 1):
        raise InvalidOrder(f"finite order must be >= 1, got {order!r}")
    if order == 1:
        return float(gaps.sum())
    return float((gaps ** order).sum() ** (1.0 / order))


@dataclass(frozen=True)
class SeparationSummary:
    """Distance aggregates of one alternative within one dimension.

    strong_* use max gap to the ideal and min gap to the anti-ideal
    (non-compensatory); weak_* use the mean gap on both sides (fully
    compensatory). Always strong_plus >= weak_plus and
    strong_minus <= weak_minus.
    """

    dimension_id: str
    strong_plus: float
    strong_minus: float
    weak_plus: float
    weak_minus: float


def separations(row, wm: WeightedMatrix, schema: IndicatorSchema) -> list[SeparationSummary]:
    """Separation summaries of one weighted-value row, one per dimension."""
    row = np.asarray(row, dtype=float)
    if row.shape != (schema.m,):
        raise LengthMismatch(f"row has shape {row.shape}, schema defines {schema.m} indicators")
    gaps_plus = np.abs(row - wm.ideal)
    gaps_minus = np.abs(row - wm.anti_ideal)

    out = []
    for dim_id, sl in schema.dimension_slices().items():
        gp, gm = gaps_plus[sl], gaps_minus[sl]
        out.append(SeparationSummary(
            dimension_id=dim_id,
            strong_plus=float(gp.max()),
            strong_minus=float(gm.min()),
            weak_plus=float(gp.mean()),
            weak_minus=float(gm.mean()),
        ))
    return out


def all_separations(wm: WeightedMatrix, schema: IndicatorSchema) -> list[list[SeparationSummary]]:
    """Separation summaries for every alternative, in row order."""
    return [separations(row, wm, schema) for row in wm.values]
