"""Decision matrix container, structural validation and descriptive statistics."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    ColumnCountMismatch,
    ConstantColumn,
    DuplicateAlternative,
    McpiError,
    NonFiniteValue,
    ZeroNormColumn,
)
from .schema import IndicatorSchema


@dataclass(frozen=True, eq=False)
class DecisionMatrix:
    """Raw alternatives-by-indicators values, column j aligned to schema indicator j."""

    alternatives: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=float)
        if arr.ndim != 2:
            raise McpiError("decision matrix must be two-dimensional")
        if arr.shape[0] != len(self.alternatives):
            raise McpiError(
                f"{len(self.alternatives)} alternatives but {arr.shape[0]} value rows"
            )
        object.__setattr__(self, "values", arr)

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def m(self) -> int:
        return self.values.shape[1]


@dataclass(frozen=True)
class IndicatorStats:
    """Per-column summary; kurtosis is bias-corrected sample excess kurtosis."""

    indicator_id: str
    mean: float
    sd: float
    max: float
    min: float
    kurtosis: float | None


def validate_matrix(matrix: DecisionMatrix, schema: IndicatorSchema) -> DecisionMatrix:
    """Check a matrix against its schema; returns the matrix unchanged on success.

    Rejects anything the downstream arithmetic cannot survive: zero-norm
    columns (vector normalization divides by the column norm) and constant
    columns (ideal would equal anti-ideal, making closeness 0/0).
    """
    for defect in scan_matrix(matrix, schema):
        raise defect
    return matrix


def scan_matrix(matrix: DecisionMatrix, schema: IndicatorSchema) -> list[McpiError]:
    """All structural defects of a matrix, in deterministic order."""
    defects: list[McpiError] = []
    n, m = matrix.values.shape

    if m != schema.m:
        defects.append(ColumnCountMismatch(
            f"matrix has {m} columns but schema defines {schema.m} indicators"
        ))
        return defects  # column-aligned checks below would mislabel indicators

    if n < 2:
        defects.append(McpiError("need at least two alternatives"))

    seen: set[str] = set()
    for name in matrix.alternatives:
        if name in seen:
            defects.append(DuplicateAlternative(f"alternative {name!r} appears more than once"))
        seen.add(name)

    bad_cells = np.argwhere(~np.isfinite(matrix.values))
    for row, col in bad_cells:
        defects.append(NonFiniteValue(
            f"non-finite value at row {row + 1} ({matrix.alternatives[row]!r}), "
            f"column {col + 1} ({schema.indicator_ids[col]!r})",
            row=int(row), col=int(col),
        ))
    if len(bad_cells):
        return defects  # norms and ranges are meaningless with NaN/inf present

    for j, ind_id in enumerate(schema.indicator_ids):
        col = matrix.values[:, j]
        if not np.linalg.norm(col) > 0:
            defects.append(ZeroNormColumn(f"indicator {ind_id!r} is all zeros"))
        elif col.min() == col.max():
            defects.append(ConstantColumn(f"indicator {ind_id!r} is constant ({col[0]!r})"))
    return defects


def describe(matrix: DecisionMatrix, schema: IndicatorSchema) -> list[IndicatorStats]:
    """One IndicatorStats per indicator, in schema order.

    sd uses the n-1 denominator. Kurtosis follows the bias-corrected sample
    excess convention

        n(n+1) / ((n-1)(n-2)(n-3)) * sum(((x - mean)/sd)^4) - 3(n-1)^2 / ((n-2)(n-3))

    and is reported as None when n < 4, where the estimator is undefined.
    """
    n = matrix.n
    stats = []
    for j, ind_id in enumerate(schema.indicator_ids):
        col = matrix.values[:, j]
        mean = float(col.mean())
        sd = float(col.std(ddof=1))
        kurt = _excess_kurtosis(col, mean, sd) if n >= 4 else None
        stats.append(IndicatorStats(
            indicator_id=ind_id,
            mean=mean, sd=sd,
            max=float(col.max()), min=float(col.min()),
            kurtosis=kurt,
        ))
    return stats


def _excess_kurtosis(col: np.ndarray, mean: float, sd: float) -> float:
    n = len(col)
    if sd == 0:
        return float("nan")  # unreachable after ConstantColumn validation
    z4 = float(np.sum(((col - mean) / sd) ** 4))
    lead = n * (n + 1) / ((n - 1) * (n - 2) * (n - 3))
    tail = 3 * (n - 1) ** 2 / ((n - 2) * (n - 3))
    return lead * z4 - tail
