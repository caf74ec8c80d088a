"""Multicriteria composite performance intervals.

Scores each alternative of a decision matrix with a [strong, weak]
closeness-to-ideal interval per dimension and overall, where the strong bound
aggregates separation measures non-compensatorily (Tchebycheff) and the weak
bound fully compensatorily (Manhattan). Interval spans feed a 1-3 star
balance rating; alternatives rank by the upper bound.
"""

from .errors import (
    ColumnCountMismatch,
    ConstantColumn,
    DegenerateCriterion,
    DegenerateDimension,
    DuplicateAlternative,
    DuplicateIndicatorId,
    EmptyDimension,
    EmptyDimensionList,
    InsufficientObservations,
    InvalidOrder,
    LastDimension,
    LengthMismatch,
    McpiError,
    MixedWeightPresence,
    NonFiniteValue,
    NonPositiveWeight,
    UnknownDimension,
    UnwritableOutput,
    ZeroNormColumn,
)
from .interval import (
    BetaRating,
    DimensionScores,
    ExclusionEntry,
    Interval,
    MCPIResult,
    beta_ratings,
    closeness,
    exclude_dimension,
    overall_interval,
    rank_alternatives,
)
from .matrix import DecisionMatrix, IndicatorStats, describe, validate_matrix
from .normalize import NormalizedMatrix, WeightedMatrix, normalize, weight_and_anchor
from .pipeline import compute_mcpi
from .schema import DimensionSpec, IndicatorSchema, IndicatorSpec, Polarity, validate_schema
from .separation import SeparationSummary, all_separations, lp_distance, separations

__version__ = "0.1.0"

__all__ = [
    "BetaRating",
    "ColumnCountMismatch",
    "ConstantColumn",
    "DecisionMatrix",
    "DegenerateCriterion",
    "DegenerateDimension",
    "DimensionScores",
    "DimensionSpec",
    "DuplicateAlternative",
    "DuplicateIndicatorId",
    "EmptyDimension",
    "EmptyDimensionList",
    "ExclusionEntry",
    "IndicatorSchema",
    "IndicatorSpec",
    "IndicatorStats",
    "InsufficientObservations",
    "Interval",
    "InvalidOrder",
    "LastDimension",
    "LengthMismatch",
    "MCPIResult",
    "McpiError",
    "MixedWeightPresence",
    "NonFiniteValue",
    "NonPositiveWeight",
    "NormalizedMatrix",
    "Polarity",
    "SeparationSummary",
    "UnknownDimension",
    "UnwritableOutput",
    "WeightedMatrix",
    "ZeroNormColumn",
    "all_separations",
    "beta_ratings",
    "closeness",
    "compute_mcpi",
    "describe",
    "exclude_dimension",
    "lp_distance",
    "normalize",
    "overall_interval",
    "rank_alternatives",
    "separations",
    "validate_matrix",
    "validate_schema",
    "weight_and_anchor",
]
