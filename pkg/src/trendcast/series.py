"""Calendar-aware monthly and weekly series.

Series are immutable: every transformation returns a new object and the
underlying value arrays are flagged read-only.
"""

from __future__ import annotations

import calendar
import datetime as dt
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import total_ordering

import numpy as np

from .exceptions import (
    CoverageGap,
    InvalidSeries,
    NoOverlap,
    NonPositiveValue,
    NonWeeklySpacing,
    SeriesTooShort,
)

__all__ = [
    "Month",
    "TransformState",
    "MonthlySeries",
    "WeeklySeries",
    "first_difference",
    "log_transform",
    "cumulate",
    "aggregate_weekly_to_monthly",
    "align",
]


@total_ordering
@dataclass(frozen=True)
class Month:
    """A calendar month (proleptic Gregorian)."""

    year: int
    month: int

    def __post_init__(self):
        if not 1 <= self.month <= 12:
            raise ValueError(f"month must be in 1..12, got {self.month}")

    @classmethod
    def parse(cls, text: str) -> "Month":
        """Parse ``YYYY-MM``."""
        text = text.strip()
        if len(text) != 7 or text[4] != "-" or not (text[:4].isdigit() and text[5:].isdigit()):
            raise ValueError(f"expected YYYY-MM, got {text!r}")
        return cls(int(text[:4]), int(text[5:]))

    @classmethod
    def from_ordinal(cls, n: int) -> "Month":
        return cls(n // 12, n % 12 + 1)

    @classmethod
    def of(cls, date: dt.date) -> "Month":
        return cls(date.year, date.month)

    @property
    def ordinal(self) -> int:
        return self.year * 12 + self.month - 1

    @property
    def days(self) -> int:
        return calendar.monthrange(self.year, self.month)[1]

    @property
    def first_day(self) -> dt.date:
        return dt.date(self.year, self.month, 1)

    @property
    def last_day(self) -> dt.date:
        return dt.date(self.year, self.month, self.days)

    def __add__(self, k: int) -> "Month":
        if not isinstance(k, (int, np.integer)):
            return NotImplemented
        return Month.from_ordinal(self.ordinal + int(k))

    def __sub__(self, other):
        if isinstance(other, Month):
            return self.ordinal - other.ordinal
        if isinstance(other, (int, np.integer)):
            return Month.from_ordinal(self.ordinal - int(other))
        return NotImplemented

    def __lt__(self, other: "Month") -> bool:
        return self.ordinal < other.ordinal

    def __str__(self) -> str:
        return f"{self.year:04d}-{self.month:02d}"


class TransformState(str, Enum):
    LEVEL = "level"
    LOG = "log"
    DIFF = "diff"
    LOG_DIFF = "log_diff"


_UNITS = ("percent", "index")
# slack on the [0, 100] bounds so that round-off from cumulate() is accepted
_RANGE_TOL = 1e-9


def _frozen_array(values) -> np.ndarray:
    arr = np.array(values, dtype=float)
    if arr.ndim != 1:
        raise InvalidSeries("values must be one-dimensional")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class MonthlySeries:
    """Monthly observations without gaps; ``values[k]`` belongs to ``start + k``.

    ``units`` is ``"percent"`` for unemployment rates and ``"index"`` for
    search intensity (0-100). Level values of either kind must lie in [0, 100].
    """

    id: str
    start: Month
    values: np.ndarray
    transform_state: TransformState = TransformState.LEVEL
    units: str = "percent"
    meta: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if isinstance(self.start, str):
            object.__setattr__(self, "start", Month.parse(self.start))
        object.__setattr__(self, "values", _frozen_array(self.values))
        object.__setattr__(self, "transform_state", TransformState(self.transform_state))
        if self.units not in _UNITS:
            raise InvalidSeries(f"units must be one of {_UNITS}, got {self.units!r}")
        if len(self.values) < 1:
            raise InvalidSeries("series must have at least one observation")
        if not np.all(np.isfinite(self.values)):
            bad = int(np.flatnonzero(~np.isfinite(self.values))[0])
            raise InvalidSeries(f"non-finite value at index {bad}")
        if self.transform_state is TransformState.LEVEL:
            out = (self.values < -_RANGE_TOL) | (self.values > 100 + _RANGE_TOL)
            if np.any(out):
                bad = int(np.flatnonzero(out)[0])
                raise InvalidSeries(
                    f"level value {self.values[bad]!r} at index {bad} outside [0, 100]"
                )

    def __len__(self) -> int:
        return len(self.values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonthlySeries):
            return NotImplemented
        return (
            self.id == other.id
            and self.start == other.start
            and self.transform_state == other.transform_state
            and self.units == other.units
            and np.array_equal(self.values, other.values)
        )

    __hash__ = None

    @property
    def end(self) -> Month:
        return self.start + (len(self.values) - 1)

    @property
    def months(self) -> list[Month]:
        return [self.start + k for k in range(len(self.values))]

    def index_of(self, month: Month) -> int:
        k = month - self.start
        if not 0 <= k < len(self.values):
            raise KeyError(f"{month} outside {self.start}..{self.end}")
        return k

    def __getitem__(self, month: Month) -> float:
        return float(self.values[self.index_of(month)])

    def window(self, start: Month | None = None, end: Month | None = None) -> "MonthlySeries":
        """Sub-series between ``start`` and ``end`` inclusive."""
        start = self.start if start is None else max(start, self.start)
        end = self.end if end is None else min(end, self.end)
        if end < start:
            raise NoOverlap(f"window {start}..{end} does not intersect {self.id}")
        i, j = start - self.start, end - self.start + 1
        return replace(self, start=start, values=self.values[i:j])

    def to_pandas(self):
        import pandas as pd

        idx = pd.PeriodIndex([str(m) for m in self.months], freq="M")
        return pd.Series(np.asarray(self.values), index=idx, name=self.id)


@dataclass(frozen=True, eq=False)
class WeeklySeries:
    """Consecutive 7-day periods identified by their first day."""

    week_start: tuple
    values: np.ndarray
    id: str = ""

    def __post_init__(self):
        starts = tuple(self.week_start)
        object.__setattr__(self, "week_start", starts)
        object.__setattr__(self, "values", _frozen_array(self.values))
        if len(starts) != len(self.values):
            raise InvalidSeries("week_start and values differ in length")
        if len(starts) < 1:
            raise InvalidSeries("weekly series is empty")
        for prev, cur in zip(starts, starts[1:]):
            if (cur - prev).days != 7:
                raise NonWeeklySpacing(cur)
        if not np.all(np.isfinite(self.values)):
            raise InvalidSeries("non-finite weekly value")
        if np.any(self.values < -_RANGE_TOL) or np.any(self.values > 100 + _RANGE_TOL):
            raise InvalidSeries("weekly values must lie in [0, 100]")

    def __len__(self) -> int:
        return len(self.values)

    @property
    def first_day(self) -> dt.date:
        return self.week_start[0]

    @property
    def last_day(self) -> dt.date:
        return self.week_start[-1] + dt.timedelta(days=6)


_NEXT_STATE = {
    TransformState.LEVEL: TransformState.DIFF,
    TransformState.LOG: TransformState.LOG_DIFF,
    TransformState.DIFF: TransformState.DIFF,
    TransformState.LOG_DIFF: TransformState.LOG_DIFF,
}


def first_difference(s: MonthlySeries) -> MonthlySeries:
    """``out[k] = s[k + 1] - s[k]``; the start moves forward one month."""
    if len(s) < 2:
        raise SeriesTooShort(f"{s.id}: first difference needs at least 2 observations")
    meta = dict(s.meta)
    meta["diff_order"] = meta.get("diff_order", 0) + 1
    return replace(
        s,
        start=s.start + 1,
        values=np.diff(s.values),
        transform_state=_NEXT_STATE[s.transform_state],
        meta=meta,
    )


def log_transform(s: MonthlySeries) -> MonthlySeries:
    """Elementwise natural logarithm."""
    nonpos = np.flatnonzero(s.values <= 0)
    if nonpos.size:
        i = int(nonpos[0])
        raise NonPositiveValue(i, float(s.values[i]))
    state = {
        TransformState.LEVEL: TransformState.LOG,
        TransformState.DIFF: TransformState.LOG_DIFF,
    }.get(s.transform_state, s.transform_state)
    return replace(s, values=np.log(s.values), transform_state=state)


def cumulate(d: MonthlySeries, initial: float) -> MonthlySeries:
    """Invert :func:`first_difference` given the value preceding ``d.start``."""
    values = np.concatenate([[initial], initial + np.cumsum(d.values)])
    state = {
        TransformState.DIFF: TransformState.LEVEL,
        TransformState.LOG_DIFF: TransformState.LOG,
    }.get(d.transform_state, d.transform_state)
    meta = dict(d.meta)
    if meta.get("diff_order"):
        meta["diff_order"] -= 1
        if not meta["diff_order"]:
            del meta["diff_order"]
    return replace(d, start=d.start - 1, values=values, transform_state=state, meta=meta)


def _month_weights(w: WeeklySeries, month: Month) -> list[tuple[int, int]]:
    """(week index, days of that week inside ``month``) for overlapping weeks."""
    first, last = month.first_day, month.last_day
    out = []
    for i, start in enumerate(w.week_start):
        end = start + dt.timedelta(days=6)
        lo, hi = max(start, first), min(end, last)
        if lo <= hi:
            out.append((i, (hi - lo).days + 1))
    return out


def aggregate_weekly_to_monthly(
    w: WeeklySeries, id: str | None = None, units: str = "index"
) -> MonthlySeries:
    """Days-weighted monthly means of a weekly series.

    A week straddling two months contributes to each in proportion to the
    number of its days falling in that month. Months at either end that the
    weekly data do not cover completely are dropped.
    """
    first_full = Month.of(w.first_day)
    if w.first_day != first_full.first_day:
        first_full = first_full + 1
    last_full = Month.of(w.last_day)
    if w.last_day != last_full.last_day:
        last_full = last_full - 1
    if last_full < first_full:
        raise CoverageGap(
            f"weekly data {w.first_day}..{w.last_day} cover no complete calendar month"
        )

    values = []
    month = first_full
    while month <= last_full:
        weights = _month_weights(w, month)
        covered = sum(d for _, d in weights)
        if covered != month.days:
            raise CoverageGap(f"{month}: {covered} of {month.days} days covered")
        values.append(sum(w.values[i] * d for i, d in weights) / month.days)
        month = month + 1
    return MonthlySeries(
        id=id if id is not None else w.id,
        start=first_full,
        values=values,
        transform_state=TransformState.LEVEL,
        units=units,
        meta={"aggregated_from": "weekly", "dropped_edge_months": _edge_months(w, first_full, last_full)},
    )


def _edge_months(w: WeeklySeries, first_full: Month, last_full: Month) -> list[str]:
    dropped = []
    if Month.of(w.first_day) < first_full:
        dropped.append(str(Month.of(w.first_day)))
    if Month.of(w.last_day) > last_full:
        dropped.append(str(Month.of(w.last_day)))
    return dropped


def align(a: MonthlySeries, b: MonthlySeries) -> tuple[MonthlySeries, MonthlySeries]:
    """Restrict both series to their common months."""
    start = max(a.start, b.start)
    end = min(a.end, b.end)
    if end < start:
        raise NoOverlap(f"{a.id} ({a.start}..{a.end}) and {b.id} ({b.start}..{b.end}) do not overlap")
    return a.window(start, end), b.window(start, end)
