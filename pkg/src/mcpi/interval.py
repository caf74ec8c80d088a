"""Composite performance intervals: closeness scores, ranking, balance ratings.

Every closeness score is a ratio d_minus / (d_plus + d_minus) built from a
separation summary. The strong score uses the non-compensatory aggregates
(max gap to the ideal, min gap to the anti-ideal) and can only reach high
values when every criterion of the dimension performs well; the weak score
uses mean gaps and lets a surplus on one criterion offset a deficit on
another. Together they bound a [strong, weak] interval whose width signals
imbalance.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

from .errors import (
    DegenerateDimension,
    EmptyDimensionList,
    LastDimension,
    McpiError,
    UnknownDimension,
)
from .separation import SeparationSummary

RATING_RULES = ("minmax", "maxfrac")


@dataclass(frozen=True)
class Interval:
    """A [lower, upper] pair of closeness scores, both in [0, 1]."""

    lower: float
    upper: float

    def __post_init__(self):
        if not (0.0 <= self.lower <= self.upper <= 1.0):
            raise McpiError(f"not a valid closeness interval: [{self.lower}, {self.upper}]")

    @property
    def width(self) -> float:
        return self.upper - self.lower


@dataclass(frozen=True)
class DimensionScores:
    dimension_id: str
    strong: float
    weak: float

    @property
    def interval(self) -> Interval:
        return Interval(self.strong, self.weak)


@dataclass(frozen=True)
class BetaRating:
    """Balance category: 3 stars for the most balanced third of the span scale."""

    stars: int
    normalized_span: float


@dataclass(frozen=True)
class MCPIResult:
    alternative: str
    dimension_scores: tuple[DimensionScores, ...]
    overall: Interval
    span: float  # 100 * (upper - lower), percentage points
    rank: int | None = None
    rating: BetaRating | None = None


def closeness(sep: SeparationSummary) -> DimensionScores:
    """Strong and weak closeness of one alternative within one dimension."""
    strong_denom = sep.strong_plus + sep.strong_minus
    weak_denom = sep.weak_plus + sep.weak_minus
    if strong_denom == 0 or weak_denom == 0:
        # unreachable once constant columns are rejected upstream
        raise DegenerateDimension(
            f"zero separation denominator in dimension {sep.dimension_id!r}"
        )
    return DimensionScores(
        dimension_id=sep.dimension_id,
        strong=sep.strong_minus / strong_denom,
        weak=sep.weak_minus / weak_denom,
    )


def overall_interval(dims: list[DimensionScores]) -> Interval:
    """[min over dimensions of weak, mean over dimensions of weak]."""
    if not dims:
        raise EmptyDimensionList("need at least one dimension")
    weaks = [d.weak for d in dims]
    return Interval(lower=min(weaks), upper=sum(weaks) / len(weaks))


def rank_alternatives(results: list[MCPIResult]) -> list[MCPIResult]:
    """Assign ranks 1..n by descending overall upper bound.

    Ties break by ascending lower bound, then by alternative name, so equal
    inputs always rank identically regardless of input order.
    """
    if not results:
        raise McpiError("need at least one alternative to rank")
    ordered = sorted(results, key=lambda r: (-r.overall.upper, r.overall.lower, r.alternative))
    return [dataclasses.replace(r, rank=i + 1) for i, r in enumerate(ordered)]


def beta_ratings(spans: list[float], rule: str = "minmax") -> list[BetaRating]:
    """Rate each span against the cohort; 3 stars = most balanced.

    "minmax" rescales spans to [0, 1] over the cohort's [min, max] before
    applying the 1/3 and 2/3 cutoffs; "maxfrac" applies them to the plain
    fraction of the maximum span. All-equal spans normalize to 0.
    """
    if rule not in RATING_RULES:
        raise McpiError(f"unknown rating rule {rule!r}; expected one of {RATING_RULES}")
    if not spans:
        return []
    lo, hi = min(spans), max(spans)
    out = []
    for s in spans:
        if rule == "minmax":
            ns = (s - lo) / (hi - lo) if hi > lo else 0.0
        else:
            ns = s / hi if hi > 0 else 0.0
        stars = 3 if ns <= 1 / 3 else 2 if ns <= 2 / 3 else 1
        out.append(BetaRating(stars=stars, normalized_span=ns))
    return out


def attach_ratings(results: list[MCPIResult], rule: str = "minmax") -> list[MCPIResult]:
    """Rate every result's span against the cohort."""
    ratings = beta_ratings([r.span for r in results], rule=rule)
    return [dataclasses.replace(r, rating=rt) for r, rt in zip(results, ratings)]


@dataclass(frozen=True)
class ExclusionEntry:
    """One alternative rescored without a dimension; positive delta_rank = improved."""

    result: MCPIResult
    baseline_rank: int
    delta_rank: int


def exclude_dimension(
    baseline: list[MCPIResult], excluded: str, rule: str = "minmax"
) -> list[ExclusionEntry]:
    """Rescore all alternatives over the remaining dimensions' existing scores.

    The per-dimension closeness values are reused as-is; nothing is
    re-normalized against a reduced indicator set. delta_rank is the baseline
    rank minus the new rank.
    """
    if not baseline:
        raise McpiError("need at least one baseline result")
    dim_ids = [d.dimension_id for d in baseline[0].dimension_scores]
    if excluded not in dim_ids:
        raise UnknownDimension(f"dimension {excluded!r} not in {dim_ids}")
    if len(dim_ids) < 2:
        raise LastDimension(f"cannot exclude {excluded!r}: it is the only dimension")
    if any(r.rank is None for r in baseline):
        raise McpiError("baseline results must be ranked before exclusion")

    reduced = []
    for r in baseline:
        remaining = tuple(d for d in r.dimension_scores if d.dimension_id != excluded)
        overall = overall_interval(list(remaining))
        reduced.append(MCPIResult(
            alternative=r.alternative,
            dimension_scores=remaining,
            overall=overall,
            span=100.0 * overall.width,
        ))
    reduced = attach_ratings(rank_alternatives(reduced), rule=rule)

    base_rank = {r.alternative: r.rank for r in baseline}
    return [
        ExclusionEntry(
            result=r,
            baseline_rank=base_rank[r.alternative],
            delta_rank=base_rank[r.alternative] - r.rank,
        )
        for r in reduced
    ]
