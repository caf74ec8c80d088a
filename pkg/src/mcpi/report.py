"""Report tables: plain rows of built-in types, serializable as CSV or JSON.

Closeness values are reported as percentages rounded to a configurable number
of decimals; ranks and ratings are computed on unrounded values before any
display rounding happens.
"""

from __future__ import annotations

import csv
import io
import json

from .interval import ExclusionEntry, MCPIResult
from .matrix import IndicatorStats
from .schema import IndicatorSchema

DESCRIBE_DECIMALS = 2


def describe_table(stats: list[IndicatorStats], schema: IndicatorSchema) -> list[dict]:
    """Indicator summary rows in schema order (raw units, not percent)."""
    dim_of = {ind.id: dim for dim in schema.dimensions for ind in dim.indicators}
    label_of = {ind.id: ind.label for dim in schema.dimensions for ind in dim.indicators}
    rows = []
    for s in stats:
        dim = dim_of[s.indicator_id]
        rows.append({
            "dimension": dim.id,
            "indicator": s.indicator_id,
            "label": label_of[s.indicator_id],
            "mean": round(s.mean, DESCRIBE_DECIMALS),
            "sd": round(s.sd, DESCRIBE_DECIMALS),
            "max": round(s.max, DESCRIBE_DECIMALS),
            "min": round(s.min, DESCRIBE_DECIMALS),
            "kurtosis": None if s.kurtosis is None else round(s.kurtosis, DESCRIBE_DECIMALS),
        })
    return rows


def dimension_table(results: list[MCPIResult], order: list[str], decimals: int = 1) -> list[dict]:
    """Per-dimension [strong, weak] bounds, one row per alternative in `order`."""
    by_name = {r.alternative: r for r in results}
    rows = []
    for name in order:
        r = by_name[name]
        row: dict = {"alternative": name}
        for d in r.dimension_scores:
            row[f"{d.dimension_id}_lower"] = round(100.0 * d.strong, decimals)
            row[f"{d.dimension_id}_upper"] = round(100.0 * d.weak, decimals)
        rows.append(row)
    return rows


def overall_table(results: list[MCPIResult], decimals: int = 1) -> list[dict]:
    """Rank, overall interval, span and stars; rows in rank order."""
    rows = []
    for r in sorted(results, key=lambda r: r.rank):
        rows.append({
            "alternative": r.alternative,
            "rank": r.rank,
            "lower": round(100.0 * r.overall.lower, decimals),
            "upper": round(100.0 * r.overall.upper, decimals),
            "span": round(r.span, decimals),
            "stars": r.rating.stars,
        })
    return rows


def exclusion_table(entries: list[ExclusionEntry], decimals: int = 1) -> list[dict]:
    """Like overall_table but with the rank shift against the baseline."""
    rows = []
    for e in sorted(entries, key=lambda e: e.result.rank):
        r = e.result
        rows.append({
            "alternative": r.alternative,
            "rank": r.rank,
            "delta_rank": e.delta_rank,
            "lower": round(100.0 * r.overall.lower, decimals),
            "upper": round(100.0 * r.overall.upper, decimals),
            "span": round(r.span, decimals),
            "stars": r.rating.stars,
        })
    return rows


def to_csv(rows: list[dict]) -> str:
    """Render rows as a CSV document with a header line."""
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def to_json(tables: dict[str, object]) -> str:
    """One JSON document containing every table of a run."""
    return json.dumps(tables, indent=2, allow_nan=False) + "\n"
