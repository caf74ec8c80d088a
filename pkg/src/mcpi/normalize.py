"""Vector normalization, weighting, and ideal / anti-ideal anchors."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateCriterion, LengthMismatch, ZeroNormColumn
from .matrix import DecisionMatrix
from .schema import IndicatorSchema, Polarity


@dataclass(frozen=True, eq=False)
class NormalizedMatrix:
    """Each column divided by its Euclidean norm; columns have unit norm."""

    values: np.ndarray


@dataclass(frozen=True, eq=False)
class WeightedMatrix:
    """Weighted normalized values with per-column ideal and anti-ideal rows.

    For a benefit indicator the ideal is the column max and the anti-ideal
    the column min; for a cost indicator the roles swap.
    """

    values: np.ndarray
    ideal: np.ndarray
    anti_ideal: np.ndarray


def normalize(matrix: DecisionMatrix) -> NormalizedMatrix:
    """n_ij = x_ij / sqrt(sum_i x_ij^2), column by column."""
    norms = np.linalg.norm(matrix.values, axis=0)
    zero = np.flatnonzero(norms == 0)
    if zero.size:
        raise ZeroNormColumn(f"column(s) {zero.tolist()} have zero Euclidean norm")
    return NormalizedMatrix(values=matrix.values / norms)


def weight_and_anchor(nm: NormalizedMatrix, schema: IndicatorSchema) -> WeightedMatrix:
    """v_ij = w_j * n_ij, plus the ideal and anti-ideal anchor rows."""
    if nm.values.shape[1] != schema.m:
        raise LengthMismatch(
            f"matrix has {nm.values.shape[1]} columns, schema defines {schema.m}"
        )
    v = nm.values * schema.resolved_weights
    col_max = v.max(axis=0)
    col_min = v.min(axis=0)
    benefit = np.array([p is Polarity.BENEFIT for p in schema.polarities()])
    ideal = np.where(benefit, col_max, col_min)
    anti_ideal = np.where(benefit, col_min, col_max)

    degenerate = np.flatnonzero(ideal == anti_ideal)
    if degenerate.size:
        ids = [schema.indicator_ids[j] for j in degenerate]
        raise DegenerateCriterion(f"ideal equals anti-ideal for indicator(s) {ids}")
    return WeightedMatrix(values=v, ideal=ideal, anti_ideal=anti_ideal)
