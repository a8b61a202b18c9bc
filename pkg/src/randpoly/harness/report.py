"""Summary reports and their CSV / JSON serializations.

CSV: UTF-8, LF line endings, one header row, columns in the order fixed per
experiment (see ``experiments.COLUMNS``).  Exact rationals are written as
``num/den`` (always with a denominator), floats with 12 significant digits,
missing values as empty fields.

JSON: one object with the frozen keys ``config``, ``cells``, ``runtime_ms``
and ``version``; ``cells`` is the list of CSV rows as objects.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .. import __version__


def render(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return format(value, ".12g")
    return str(value)


def _json_value(value: Any) -> Any:
    if isinstance(value, Fraction):
        return render(value)
    if isinstance(value, float):
        return float(format(value, ".12g"))
    if isinstance(value, (list, tuple)):
        return [_json_value(v) for v in value]
    return value


@dataclass
class SummaryReport:
    config: dict[str, Any]
    columns: list[str]
    cells: list[dict[str, Any]]
    runtime_ms: int = 0
    version: str = __version__

    def column(self, name: str) -> list[Any]:
        return [row[name] for row in self.cells]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.cells:
            writer.writerow([render(row.get(c)) for c in self.columns])
        return buf.getvalue()

    def to_json(self) -> str:
        obj = {
            "config": {k: _json_value(v) for k, v in self.config.items()},
            "cells": [{c: _json_value(row.get(c)) for c in self.columns} for row in self.cells],
            "runtime_ms": self.runtime_ms,
            "version": self.version,
        }
        return json.dumps(obj, indent=2) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json()
        raise ValueError(f"unknown format {fmt!r}")
