"""Serialization of campaign reports and tables as CSV, JSON or aligned text.

CSV cells never contain commas: lists are joined with ``;``, booleans are
``1``/``0``, missing values are empty.  Timings are left out so that output
is byte-identical across runs.
"""

from __future__ import annotations

import csv
import io
import json
from importlib import resources

from .verifier import CampaignReport, VerificationRecord

FORMATS = ("table", "csv", "json")

COLUMNS = {
    "fibonacci": ("p", "status", "method", "witnesses", "complete", "complete_count", "checks"),
    "padovan": (
        "p", "rho", "roots", "witnesses", "admits_complete", "complete", "complete_count",
        "method", "status", "n_p", "exceptional", "weak_covered", "note",
    ),
    "conjecture": ("p", "kappa", "status", "method", "witnesses", "complete", "complete_count", "note"),
    "half": ("p", "kappa", "status", "method", "witnesses", "complete", "complete_count", "checks", "note"),
}


def cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, (list, tuple)):
        return ";".join(cell(v) for v in value)
    if isinstance(value, dict):
        return ";".join(f"{k}={cell(v)}" for k, v in sorted(value.items()))
    return str(value).replace(",", ";")


def record_row(rec: VerificationRecord, columns) -> list[str]:
    return [cell(getattr(rec, c)) for c in columns]


def report_rows(report: CampaignReport) -> tuple[tuple[str, ...], list[list[str]]]:
    cols = COLUMNS[report.mode]
    return cols, [record_row(r, cols) for r in report.records]


def format_csv(columns, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([cell(v) for v in row])
    return buf.getvalue()


def format_text(columns, rows) -> str:
    cells = [list(columns)] + [[cell(v) for v in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(columns))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def format_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def render_report(report: CampaignReport, fmt: str) -> str:
    if fmt == "json":
        return format_json(report.to_dict())
    cols, rows = report_rows(report)
    return format_csv(cols, rows) if fmt == "csv" else format_text(cols, rows)


def render_table(name: str, columns, rows, fmt: str) -> str:
    if fmt == "json":
        return format_json({"table": name, "columns": list(columns), "rows": [dict(zip(columns, r)) for r in rows]})
    return format_csv(columns, rows) if fmt == "csv" else format_text(columns, rows)


def load_schema(name: str = "report") -> dict:
    text = resources.files("phiseq").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)
