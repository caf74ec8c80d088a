"""End-to-end scoring: raw matrix in, ranked and rated interval results out."""

from __future__ import annotations

from .interval import MCPIResult, attach_ratings, closeness, overall_interval, rank_alternatives
from .matrix import DecisionMatrix, validate_matrix
from .normalize import normalize, weight_and_anchor
from .schema import IndicatorSchema
from .separation import separations


def compute_mcpi(
    matrix: DecisionMatrix,
    schema: IndicatorSchema,
    rating_rule: str = "minmax",
    validate: bool = True,
) -> list[MCPIResult]:
    """Score every alternative; the returned list is in rank order."""
    if validate:
        validate_matrix(matrix, schema)
    wm = weight_and_anchor(normalize(matrix), schema)

    results = []
    for name, row in zip(matrix.alternatives, wm.values):
        dims = tuple(closeness(sep) for sep in separations(row, wm, schema))
        overall = overall_interval(list(dims))
        results.append(MCPIResult(
            alternative=name,
            dimension_scores=dims,
            overall=overall,
            span=100.0 * overall.width,
        ))
    return attach_ratings(rank_alternatives(results), rule=rating_rule)
