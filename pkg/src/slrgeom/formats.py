"""Serialisation of density tables: CSV, JSON and Markdown."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from slrgeom.errors import InvalidArgument

COLUMNS = ("p", "q", "radius", "circle_area", "base_area", "density")
FORMATS = ("csv", "json", "md")


@dataclass(frozen=True)
class OutputSpec:
    format: str = "csv"
    path: str | None = None
    precision: int = 5

    def __post_init__(self):
        if self.format not in FORMATS:
            raise InvalidArgument(f"format must be one of {FORMATS}, got {self.format!r}")
        if not 1 <= self.precision <= 15:
            raise InvalidArgument(f"precision must be in [1, 15], got {self.precision}")


def _fixed(value, precision):
    if isinstance(value, int):
        return str(value)
    return f"{value:.{precision}f}"


def _cells(row, precision):
    d = row.as_dict()
    return [_fixed(d[c], precision) for c in COLUMNS]


def to_csv(rows, precision=5, meta=None):
    buf = io.StringIO()
    if meta:
        buf.write(f"# {meta}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for row in rows:
        w.writerow(_cells(row, precision))
    return buf.getvalue()


def to_json(rows, meta=None):
    data = [row.as_dict() for row in rows]
    if meta:
        data = {"meta": meta, "rows": data}
    return json.dumps(data, indent=2) + "\n"


def to_markdown(rows, precision=5, meta=None):
    lines = []
    if meta:
        lines += [f"<!-- {meta} -->"]
    lines.append("| " + " | ".join(COLUMNS) + " |")
    lines.append("|" + "|".join("---:" for _ in COLUMNS) + "|")
    for row in rows:
        lines.append("| " + " | ".join(_cells(row, precision)) + " |")
    return "\n".join(lines) + "\n"


def render(rows, spec, meta=None):
    if spec.format == "csv":
        return to_csv(rows, spec.precision, meta)
    if spec.format == "json":
        return to_json(rows, meta)
    return to_markdown(rows, spec.precision, meta)


def read_csv(text):
    """Parse :func:`to_csv` output back into dicts of numbers."""
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    out = []
    for rec in csv.DictReader(lines):
        out.append({k: (int(v) if k in ("p", "q") else float(v)) for k, v in rec.items()})
    return out
