"""Indicator schema: dimensions, indicators, polarity and resolved weights.

The schema fixes the column order of every decision matrix: indicators appear
in the order their dimension declares them, dimensions in declaration order.
All downstream results preserve that order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DuplicateIndicatorId,
    EmptyDimension,
    McpiError,
    MixedWeightPresence,
    NonPositiveWeight,
)

WEIGHT_SUM_TOL = 1e-12


class Polarity(enum.Enum):
    """Direction of preference for an indicator."""

    BENEFIT = "benefit"  # higher is better
    COST = "cost"        # lower is better

    @classmethod
    def from_string(cls, s: str) -> "Polarity":
        try:
            return cls(s.strip().lower())
        except ValueError:
            raise McpiError(f"unknown polarity {s!r}; expected 'benefit' or 'cost'") from None


@dataclass(frozen=True)
class IndicatorSpec:
    id: str
    label: str
    polarity: Polarity
    weight: float | None = None


@dataclass(frozen=True)
class DimensionSpec:
    id: str
    label: str
    indicators: tuple[IndicatorSpec, ...]


@dataclass(frozen=True, eq=False)
class IndicatorSchema:
    """Validated hierarchy plus globally normalized weights (one per column)."""

    dimensions: tuple[DimensionSpec, ...]
    resolved_weights: np.ndarray = field(repr=False)

    @property
    def indicators(self) -> tuple[IndicatorSpec, ...]:
        return tuple(ind for dim in self.dimensions for ind in dim.indicators)

    @property
    def indicator_ids(self) -> tuple[str, ...]:
        return tuple(ind.id for ind in self.indicators)

    @property
    def dimension_ids(self) -> tuple[str, ...]:
        return tuple(dim.id for dim in self.dimensions)

    @property
    def m(self) -> int:
        """Total indicator count."""
        return len(self.indicators)

    @property
    def n_dimensions(self) -> int:
        return len(self.dimensions)

    def polarities(self) -> tuple[Polarity, ...]:
        return tuple(ind.polarity for ind in self.indicators)

    def dimension_slices(self) -> dict[str, slice]:
        """Column slice of each dimension, in schema order."""
        out, start = {}, 0
        for dim in self.dimensions:
            out[dim.id] = slice(start, start + len(dim.indicators))
            start += len(dim.indicators)
        return out


def _parse_indicator(raw: dict) -> IndicatorSpec:
    try:
        ind_id = str(raw["id"])
        polarity = Polarity.from_string(str(raw["polarity"]))
    except KeyError as exc:
        raise McpiError(f"indicator entry missing required key {exc}") from None
    if not ind_id.strip():
        raise McpiError("indicator id must be a non-empty token")
    weight = raw.get("weight")
    if weight is not None:
        weight = float(weight)
    return IndicatorSpec(
        id=ind_id,
        label=str(raw.get("label", ind_id)),
        polarity=polarity,
        weight=weight,
    )


def validate_schema(raw_schema: dict) -> IndicatorSchema:
    """Build an IndicatorSchema from a parsed config structure.

    Weights are resolved globally: absent everywhere means equal weights 1/m;
    present everywhere means rescale to unit sum; anything in between is
    rejected so a schema can never be silently half-weighted.
    """
    raw_dims = raw_schema.get("dimensions")
    if not raw_dims:
        raise McpiError("schema must declare at least one dimension")

    dimensions = []
    seen_ids: set[str] = set()
    for raw_dim in raw_dims:
        dim_id = str(raw_dim.get("id", "")).strip()
        if not dim_id:
            raise McpiError("dimension id must be a non-empty token")
        raw_inds = raw_dim.get("indicators") or []
        if not raw_inds:
            raise EmptyDimension(f"dimension {dim_id!r} has no indicators")
        indicators = []
        for raw_ind in raw_inds:
            spec = _parse_indicator(raw_ind)
            if spec.id in seen_ids:
                raise DuplicateIndicatorId(f"indicator id {spec.id!r} appears more than once")
            seen_ids.add(spec.id)
            indicators.append(spec)
        if dim_id in (d.id for d in dimensions):
            raise McpiError(f"dimension id {dim_id!r} appears more than once")
        dimensions.append(DimensionSpec(id=dim_id, label=str(raw_dim.get("label", dim_id)),
                                        indicators=tuple(indicators)))

    all_inds = [ind for dim in dimensions for ind in dim.indicators]
    weights = _resolve_weights(all_inds)
    return IndicatorSchema(dimensions=tuple(dimensions), resolved_weights=weights)


def _resolve_weights(indicators: list[IndicatorSpec]) -> np.ndarray:
    m = len(indicators)
    given = [ind.weight for ind in indicators]
    n_given = sum(w is not None for w in given)
    if n_given == 0:
        return np.full(m, 1.0 / m)
    if n_given != m:
        missing = [ind.id for ind in indicators if ind.weight is None]
        raise MixedWeightPresence(
            f"weights must be given for all indicators or none; missing for {missing}"
        )
    raw = np.asarray(given, dtype=float)
    bad = [ind.id for ind, w in zip(indicators, raw) if not w > 0]
    if bad:
        raise NonPositiveWeight(f"weights must be > 0; offending indicators: {bad}")
    return raw / raw.sum()
