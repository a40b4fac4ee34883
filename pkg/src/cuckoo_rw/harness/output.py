"""CSV / JSON emission with diff-stable number formatting."""

from __future__ import annotations

import csv
import dataclasses
import io
import json
from typing import Any, Sequence

FLOAT_FORMAT = ".6g"


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, FLOAT_FORMAT)
    return str(value)


def _json_value(value: Any) -> Any:
    if isinstance(value, float) and not isinstance(value, bool):
        return float(format(value, FLOAT_FORMAT))
    return value


def as_records(rows: Sequence[Any]) -> tuple[list[str], list[dict]]:
    """Column names and row dicts; dataclass rows keep their field order."""
    if not rows:
        return [], []
    first = rows[0]
    if dataclasses.is_dataclass(first):
        columns = [f.name for f in dataclasses.fields(first)]
        return columns, [dataclasses.asdict(r) for r in rows]
    columns = list(first)
    return columns, [dict(r) for r in rows]


def to_csv(rows: Sequence[Any]) -> str:
    columns, records = as_records(rows)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if columns:
        writer.writerow(columns)
    for rec in records:
        writer.writerow([_cell(rec[c]) for c in columns])
    return buf.getvalue()


def to_json(rows: Sequence[Any], single: bool = False) -> str:
    """JSON array of row objects, or the lone object when ``single``."""
    columns, records = as_records(rows)
    clean = [{c: _json_value(rec[c]) for c in columns} for rec in records]
    payload = clean[0] if single and len(clean) == 1 else clean
    return json.dumps(payload, indent=2) + "\n"


def render(rows: Sequence[Any], fmt: str, single: bool = False) -> str:
    if fmt == "csv":
        return to_csv(rows)
    if fmt == "json":
        return to_json(rows, single=single)
    raise ValueError(f"unknown format {fmt!r}")
