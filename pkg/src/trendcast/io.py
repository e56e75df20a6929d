"""CSV ingestion and export for monthly unemployment and weekly search data.

Unemployment rows are ``YYYY-MM,<rate>``; search-intensity rows are
``YYYY-MM-DD,<value>`` with week starts exactly 7 days apart. A single
header line is allowed in either file, values use a dot decimal, and
blank lines are ignored.
"""

from __future__ import annotations

import datetime as dt
import math
import os
from pathlib import Path

from .exceptions import GapError, NonWeeklySpacing, ParseError, RangeError
from .series import Month, MonthlySeries, WeeklySeries

__all__ = [
    "ingest_unemployment_csv",
    "ingest_trends_csv",
    "write_unemployment_csv",
    "write_trends_csv",
]


def _rows(path):
    """Yield (line number, first field, second field), skipping one header line."""
    with open(path, encoding="utf-8-sig") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            parts = [p.strip() for p in line.split(",")]
            if lineno == 1 and not parts[0][:1].isdigit():
                continue
            if len(parts) != 2:
                raise ParseError(f"expected 2 comma-separated fields, got {len(parts)}", lineno, path)
            yield lineno, parts[0], parts[1]


def _value(text, lineno, path) -> float:
    try:
        v = float(text)
    except ValueError:
        raise ParseError(f"cannot parse value {text!r}", lineno, path) from None
    if not math.isfinite(v):
        raise ParseError(f"non-finite value {text!r}", lineno, path)
    if not 0.0 <= v <= 100.0:
        raise RangeError(v, lineno, path)
    return v


def ingest_unemployment_csv(path, id: str | None = None) -> MonthlySeries:
    """Read a monthly unemployment-rate file into a level series in percent."""
    months, values = [], []
    for lineno, key, val in _rows(path):
        try:
            month = Month.parse(key)
        except ValueError:
            raise ParseError(f"cannot parse month {key!r}", lineno, path) from None
        if months:
            expected = months[-1] + 1
            if month < expected or month == months[-1]:
                raise ParseError(f"month {month} does not follow {months[-1]}", lineno, path)
            if month != expected:
                raise GapError(expected, path)
        months.append(month)
        values.append(_value(val, lineno, path))
    if not months:
        raise ParseError("file contains no observations", None, path)
    return MonthlySeries(
        id=id or Path(path).stem,
        start=months[0],
        values=values,
        units="percent",
        meta={"source": os.fspath(path)},
    )


def ingest_trends_csv(path, id: str | None = None) -> WeeklySeries:
    """Read a weekly search-intensity file (values in [0, 100])."""
    weeks, values = [], []
    for lineno, key, val in _rows(path):
        try:
            day = dt.date.fromisoformat(key)
        except ValueError:
            raise ParseError(f"cannot parse date {key!r}", lineno, path) from None
        if weeks and (day - weeks[-1]).days != 7:
            raise NonWeeklySpacing(day, path)
        weeks.append(day)
        values.append(_value(val, lineno, path))
    if not weeks:
        raise ParseError("file contains no observations", None, path)
    return WeeklySeries(week_start=weeks, values=values, id=id or Path(path).stem)


def write_unemployment_csv(series: MonthlySeries, path, header: bool = True, digits: int = 2) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        if header:
            fh.write("month,rate\n")
        for month, v in zip(series.months, series.values):
            fh.write(f"{month},{v:.{digits}f}\n")


def write_trends_csv(weeks, values, path, header: bool = True, digits: int = 2) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        if header:
            fh.write("week,value\n")
        for day, v in zip(weeks, values):
            fh.write(f"{day.isoformat()},{v:.{digits}f}\n")
