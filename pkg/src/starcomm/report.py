"""Report serialization: CSV and JSON emission, byte-identical per input."""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, Sequence

from .checks import CheckReport, ConcisenessRow

CSV_COLUMNS = (
    "group_id",
    "order",
    "check_id",
    "params",
    "status",
    "m",
    "subgroup_order",
    "witness",
)

TABLE_COLUMNS = ("group_id", "order", "variant", "k", "m", "subgroup_order")


def reports_to_csv(reports: Sequence[CheckReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in reports:
        writer.writerow(
            [
                r.group_id,
                r.group_order,
                r.check_id,
                r.params_string(),
                r.status,
                r.metrics.get("m", ""),
                r.metrics.get("subgroup_order", ""),
                r.witness,
            ]
        )
    return buf.getvalue()


def reports_to_json(reports: Sequence[CheckReport]) -> str:
    payload = [
        {
            "check_id": r.check_id,
            "group_id": r.group_id,
            "group_order": r.group_order,
            "params": r.params,
            "status": r.status,
            "witness": r.witness,
            "metrics": r.metrics,
        }
        for r in reports
    ]
    return json.dumps(payload, indent=1, sort_keys=True) + "\n"


def table_to_csv(rows: Iterable[tuple[str, int, ConcisenessRow]]) -> str:
    """Conciseness table rows as (group_id, order, row) triples."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(TABLE_COLUMNS)
    for group_id, order, row in rows:
        writer.writerow([group_id, order, row.variant, row.level, row.m, row.subgroup_order])
    return buf.getvalue()


def emit(text: str, destination) -> None:
    """Write to a path, or stdout when destination is None."""
    if destination is None:
        import sys

        sys.stdout.write(text)
        return
    with open(destination, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
