"""Command-line front end: validate, describe, compute, plot.

Input is a CSV decision matrix (first column "alternative", remaining header
cells exactly the schema indicator ids, UTF-8, "." decimals, no missing
cells) plus a JSON config with the dimension/indicator structure and options.

Exit codes: 0 ok, 2 validation failure, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from .chart import render_interval_chart
from .errors import ColumnCountMismatch, McpiError, NonFiniteValue, UnknownDimension
from .interval import RATING_RULES, exclude_dimension
from .matrix import DecisionMatrix, describe, scan_matrix
from .pipeline import compute_mcpi
from .report import (
    describe_table,
    dimension_table,
    exclusion_table,
    overall_table,
    to_csv,
    to_json,
)
from .schema import IndicatorSchema, validate_schema

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_IO = 3


@dataclass
class RunConfig:
    schema: IndicatorSchema
    rating_rule: str = "minmax"
    fmt: str = "csv"
    exclude: str | None = None
    decimals: int = 1

    def __post_init__(self):
        if self.rating_rule not in RATING_RULES:
            raise McpiError(f"options.rating_rule must be one of {RATING_RULES}")
        if self.fmt not in ("csv", "json"):
            raise McpiError("options.format must be 'csv' or 'json'")
        if not 0 <= self.decimals <= 6:
            raise McpiError("options.decimals must be between 0 and 6")
        if self.exclude is not None and self.exclude not in self.schema.dimension_ids:
            raise UnknownDimension(
                f"excluded dimension {self.exclude!r} not in schema "
                f"{list(self.schema.dimension_ids)}"
            )


def read_config(path: str, args: argparse.Namespace | None = None) -> RunConfig:
    """Parse the JSON config; command-line flags override its options."""
    with open(path, encoding="utf-8") as f:
        raw = json.load(f)
    schema = validate_schema(raw)
    options = raw.get("options") or {}
    merged = {
        "rating_rule": options.get("rating_rule", "minmax"),
        "fmt": options.get("format", "csv"),
        "exclude": options.get("exclude"),
        "decimals": int(options.get("decimals", 1)),
    }
    if args is not None:
        if getattr(args, "rating_rule", None):
            merged["rating_rule"] = args.rating_rule
        if getattr(args, "format", None):
            merged["fmt"] = args.format
        if getattr(args, "exclude", None):
            merged["exclude"] = args.exclude
        if getattr(args, "decimals", None) is not None:
            merged["decimals"] = args.decimals
    return RunConfig(schema=schema, **merged)


def read_decision_csv(path: str, schema: IndicatorSchema):
    """Parse the data CSV; returns (matrix, cell defects).

    Cells that are empty or not parseable as numbers become NaN placeholders
    and a NonFiniteValue defect, so one pass reports every bad cell.
    """
    with open(path, encoding="utf-8-sig", newline="") as f:
        rows = list(csv.reader(f))
    if not rows:
        raise McpiError(f"{path}: empty CSV")
    header = rows[0]
    if not header or header[0].strip() != "alternative":
        raise ColumnCountMismatch(
            f"{path}: first header cell must be 'alternative', got {header[:1]!r}"
        )
    if tuple(h.strip() for h in header[1:]) != schema.indicator_ids:
        raise ColumnCountMismatch(
            f"{path}: header indicators {header[1:]!r} do not match schema "
            f"{list(schema.indicator_ids)}"
        )

    names, values, defects = [], [], []
    for i, row in enumerate(rows[1:]):
        if len(row) != len(header):
            raise ColumnCountMismatch(
                f"{path}: line {i + 2} has {len(row)} cells, expected {len(header)}"
            )
        names.append(row[0])
        parsed = []
        for j, cell in enumerate(row[1:]):
            try:
                value = float(cell)
                if not math.isfinite(value):
                    raise ValueError
            except ValueError:
                defects.append(NonFiniteValue(
                    f"cell {cell!r} is not a finite number", row=i, col=j
                ))
                value = math.nan
            parsed.append(value)
        values.append(parsed)
    return DecisionMatrix(alternatives=tuple(names), values=values), defects


def _defect_line(defect: McpiError, path: str) -> str:
    row = col = "-"
    if isinstance(defect, NonFiniteValue):
        if defect.row is not None:
            row = str(defect.row + 2)  # CSV line number; header is line 1
        if defect.col is not None:
            col = str(defect.col + 2)  # CSV column number; alternative is column 1
    return f"error={type(defect).__name__} file={path} row={row} col={col} msg={defect}"


def _load_validated(args) -> tuple[RunConfig, DecisionMatrix, list[str]]:
    """Config + matrix + defect lines (empty when everything validates)."""
    config = read_config(args.config, args)
    matrix, defects = read_decision_csv(args.data, config.schema)
    defects = defects + scan_matrix(matrix, config.schema)
    # cell defects surface as NaN; drop the duplicate scan-level reports
    seen = set()
    lines = []
    for d in defects:
        line = _defect_line(d, args.data)
        if line not in seen:
            seen.add(line)
            lines.append(line)
    return config, matrix, lines


def cmd_validate(args) -> int:
    config, matrix, defects = _load_validated(args)
    if defects:
        for line in defects:
            print(line, file=sys.stderr)
        return EXIT_VALIDATION
    print(f"OK n={matrix.n} m={config.schema.m}")
    return EXIT_OK


def _emit(tables: dict[str, list[dict]], config: RunConfig, out_dir: str | None) -> None:
    if config.fmt == "json":
        doc = to_json(tables)
        if out_dir:
            _write_text(Path(out_dir) / "report.json", doc)
        else:
            sys.stdout.write(doc)
        return
    for name, rows in tables.items():
        doc = to_csv(rows)
        if out_dir:
            _write_text(Path(out_dir) / f"{name}.csv", doc)
        else:
            sys.stdout.write(f"# {name}\n{doc}\n")


def _write_text(path: Path, text: str) -> None:
    from .errors import UnwritableOutput
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise UnwritableOutput(f"cannot write {path}: {exc}") from exc


def cmd_describe(args) -> int:
    config, matrix, defects = _load_validated(args)
    if defects:
        for line in defects:
            print(line, file=sys.stderr)
        return EXIT_VALIDATION
    table = describe_table(describe(matrix, config.schema), config.schema)
    _emit({"describe": table}, config, args.out)
    return EXIT_OK


def cmd_compute(args) -> int:
    config, matrix, defects = _load_validated(args)
    if defects:
        for line in defects:
            print(line, file=sys.stderr)
        return EXIT_VALIDATION
    results = compute_mcpi(matrix, config.schema, rating_rule=config.rating_rule)
    tables = {
        "dimension_intervals": dimension_table(
            results, list(matrix.alternatives), config.decimals
        ),
        "overall": overall_table(results, config.decimals),
    }
    if config.exclude:
        entries = exclude_dimension(results, config.exclude, rule=config.rating_rule)
        tables["excluded"] = exclusion_table(entries, config.decimals)
    _emit(tables, config, args.out)
    return EXIT_OK


def cmd_plot(args) -> int:
    config, matrix, defects = _load_validated(args)
    if defects:
        for line in defects:
            print(line, file=sys.stderr)
        return EXIT_VALIDATION
    results = compute_mcpi(matrix, config.schema, rating_rule=config.rating_rule)
    title = "Composite performance intervals"
    if config.exclude:
        entries = exclude_dimension(results, config.exclude, rule=config.rating_rule)
        results = [e.result for e in entries]
        title += f" (excluding {config.exclude})"
    svg = render_interval_chart(results, title=title)
    _write_text(Path(args.out), svg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mcpi",
        description="Interval-valued composite performance scores for a decision matrix.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, out_help):
        p.add_argument("data", help="decision matrix CSV")
        p.add_argument("config", help="schema + options JSON")
        p.add_argument("--rating-rule", choices=list(RATING_RULES), default=None)
        p.add_argument("--format", choices=["csv", "json"], default=None)
        p.add_argument("--exclude", metavar="DIM", default=None)
        p.add_argument("--decimals", type=int, default=None)
        p.add_argument("--out", default=None, help=out_help)

    p = sub.add_parser("validate", help="check data against the schema")
    p.add_argument("data")
    p.add_argument("config")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("describe", help="per-indicator summary statistics")
    add_common(p, "output directory (default: stdout)")
    p.set_defaults(func=cmd_describe)

    p = sub.add_parser("compute", help="interval scores, ranking and ratings")
    add_common(p, "output directory (default: stdout)")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("plot", help="SVG chart of the overall intervals")
    add_common(p, "output SVG path")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "plot" and not args.out:
        print("error=UnwritableOutput msg=plot requires --out <file.svg>", file=sys.stderr)
        return EXIT_VALIDATION
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error=IOError msg={exc}", file=sys.stderr)
        return EXIT_IO
    except McpiError as exc:
        from .errors import UnwritableOutput
        if isinstance(exc, UnwritableOutput):
            print(f"error=UnwritableOutput msg={exc}", file=sys.stderr)
            return EXIT_IO
        print(_defect_line(exc, getattr(args, "data", "-")), file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
