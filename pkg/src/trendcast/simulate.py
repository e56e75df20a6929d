"""Seeded data-generating processes for fixtures and Monte Carlo checks."""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass

import numpy as np

from .series import Month


def rng_for(seed: int, *stream: int) -> np.random.Generator:
    """Independent generator per (seed, stream...) so results ignore execution order."""
    return np.random.default_rng([seed, *stream])


@dataclass(frozen=True)
class PairProcess:
    """Bivariate process for (dUR, dlogGI) with optional coupling.

    ``dur_t = own_ar * dur_{t-1} + gi_now * g_t + gi_lag * g_{t-1} + e_t``
    ``g_t = gi_ar * g_{t-1} + ur_to_gi * dur_{t-1} + seasonal_t + u_t``
    """

    own_ar: float = 0.3
    gi_now: float = 0.0
    gi_lag: float = 0.0
    gi_ar: float = 0.2
    ur_to_gi: float = 0.0
    ur_sd: float = 1.0
    gi_sd: float = 1.0
    seasonal_amp: float = 0.0

    def simulate(self, n: int, rng: np.random.Generator, burn: int = 100) -> tuple[np.ndarray, np.ndarray]:
        total = n + burn
        e = rng.standard_normal(total) * self.ur_sd
        u = rng.standard_normal(total) * self.gi_sd
        season = self.seasonal_amp * np.cos(2 * np.pi * np.arange(total) / 12.0)
        ur = np.zeros(total)
        gi = np.zeros(total)
        for t in range(1, total):
            gi[t] = self.gi_ar * gi[t - 1] + self.ur_to_gi * ur[t - 1] + season[t] + u[t]
            ur[t] = self.own_ar * ur[t - 1] + self.gi_now * gi[t] + self.gi_lag * gi[t - 1] + e[t]
        return ur[burn:], gi[burn:]


def simulate_var1(A, n: int, rng: np.random.Generator, burn: int = 100, intercept=None) -> np.ndarray:
    A = np.asarray(A, dtype=float)
    k = A.shape[0]
    c = np.zeros(k) if intercept is None else np.asarray(intercept, dtype=float)
    eps = rng.standard_normal((n + burn, k))
    Y = np.zeros((n + burn, k))
    for t in range(1, n + burn):
        Y[t] = c + A @ Y[t - 1] + eps[t]
    return Y[burn:]


def simulate_ar(coefs, n: int, rng: np.random.Generator, burn: int = 100) -> np.ndarray:
    coefs = np.asarray(coefs, dtype=float)
    p = len(coefs)
    e = rng.standard_normal(n + burn)
    y = np.zeros(n + burn)
    for t in range(p, n + burn):
        y[t] = coefs @ y[t - p : t][::-1] + e[t]
    return y[burn:]


def weekly_from_monthly(
    monthly_levels: np.ndarray,
    start: Month,
    rng: np.random.Generator,
    rel_noise: float = 0.01,
) -> tuple[list[dt.date], np.ndarray]:
    """Sunday-starting weekly values whose days follow ``monthly_levels``.

    Each day takes its month's level; a week's value is the mean over its
    seven days times ``1 + rel_noise * z`` (standard normal ``z``), rounded
    to two decimals and clipped to [0, 100].
    Weeks start in the month before ``start`` and run past the final month,
    so every requested month is fully covered.
    """
    first = start.first_day
    offset = (first.weekday() + 1) % 7  # days since Sunday
    week0 = first - dt.timedelta(days=offset + 7)
    last_month = start + (len(monthly_levels) - 1)
    stop = last_month.last_day + dt.timedelta(days=7)
    weeks, values = [], []
    d = week0
    while d <= stop:
        days = [d + dt.timedelta(days=i) for i in range(7)]
        levels = []
        for day in days:
            k = Month.of(day) - start
            k = min(max(k, 0), len(monthly_levels) - 1)
            levels.append(monthly_levels[k])
        v = float(np.mean(levels)) * (1.0 + rel_noise * rng.standard_normal())
        weeks.append(d)
        values.append(round(min(max(v, 0.0), 100.0), 2))
        d += dt.timedelta(days=7)
    return weeks, np.array(values)
