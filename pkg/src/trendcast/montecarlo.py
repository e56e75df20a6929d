"""Seeded Monte Carlo size and power checks.

Replication ``r`` always draws from ``rng_for(seed, stream, r)``, so rates
do not depend on the order in which replications run.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .evaluation import dm_test, rmse
from .series import Month, MonthlySeries, TransformState
from .simulate import PairProcess, rng_for
from .var import ModelSpec, fit_nowcast, fit_var, forecast_rolling, granger_test

NULL_PROCESS = PairProcess()
# Lagged coupling; search innovations twice as volatile as unemployment ones.
FORECAST_POWER_PROCESS = PairProcess(gi_lag=0.8, gi_sd=2.0)
GRANGER_POWER_PROCESS = PairProcess(gi_lag=0.8)
NOWCAST_POWER_PROCESS = PairProcess(gi_now=0.8)

_GRANGER, _NOWCAST, _DM, _FORECAST = 1, 2, 3, 4


@dataclass(frozen=True)
class RateResult:
    name: str
    rate: float
    reps: int
    level: float

    def __str__(self) -> str:
        return f"{self.name:<34} {self.rate:7.2%}  ({self.reps} reps, level {self.level:.0%})"


def granger_rejection_rate(
    reps: int, process: PairProcess = NULL_PROCESS, n: int = 120, p: int = 12, seed: int = 0, level: float = 0.05
) -> float:
    """Share of replications where "gi does not Granger-cause ur" is rejected."""
    hits = 0
    for r in range(reps):
        ur, gi = process.simulate(n, rng_for(seed, _GRANGER, r))
        fit = fit_var(np.column_stack([ur, gi]), p, labels=["ur", "gi"])
        hits += granger_test(fit, "gi", "ur").p_value < level
    return hits / reps


def nowcast_rejection_rate(
    reps: int, process: PairProcess = NULL_PROCESS, n: int = 120, seed: int = 0, level: float = 0.05
) -> float:
    """Share of replications where the search terms are jointly significant."""
    hits = 0
    for r in range(reps):
        ur, gi = process.simulate(n, rng_for(seed, _NOWCAST, r))
        hits += fit_nowcast(ur, gi).google_joint_F.p_value < level
    return hits / reps


def dm_rejection_rate(reps: int, T: int = 100, seed: int = 0, level: float = 0.05, loss: str = "squared") -> float:
    """One-sided DM rejections for two equally accurate Gaussian error sequences."""
    hits = 0
    for r in range(reps):
        rng = rng_for(seed, _DM, r)
        e1 = rng.standard_normal(T)
        e2 = rng.standard_normal(T)
        hits += dm_test(e1, e2, loss=loss).p_value_greater < level
    return hits / reps


def var_beats_ar_rate(
    reps: int,
    process: PairProcess = FORECAST_POWER_PROCESS,
    n: int = 120,
    p: int = 12,
    horizon: int = 12,
    seed: int = 0,
) -> float:
    """Share of replications where rolling VAR forecasts have lower RMSE than AR ones."""
    start = Month(2004, 2)
    train_end = start + (n - horizon - 1)
    wins = 0
    for r in range(reps):
        ur, gi = process.simulate(n, rng_for(seed, _FORECAST, r))
        pair = [
            MonthlySeries("ur", start, ur, TransformState.DIFF),
            MonthlySeries("gi", start, gi, TransformState.LOG_DIFF, units="index"),
        ]
        ar = forecast_rolling(ModelSpec("ar", p), pair, train_end, horizon)
        var = forecast_rolling(ModelSpec("var", p), pair, train_end, horizon)
        wins += rmse(var) < rmse(ar)
    return wins / reps


def run_all(seed: int = 0, size_reps: int = 2000, power_reps: int = 500) -> list[RateResult]:
    return [
        RateResult("size: Granger gi -> ur", granger_rejection_rate(size_reps, seed=seed), size_reps, 0.05),
        RateResult("size: nowcast joint F", nowcast_rejection_rate(size_reps, seed=seed), size_reps, 0.05),
        RateResult("size: DM one-sided (T=100)", dm_rejection_rate(size_reps, seed=seed), size_reps, 0.05),
        RateResult(
            "power: Granger gi -> ur",
            granger_rejection_rate(power_reps, GRANGER_POWER_PROCESS, seed=seed),
            power_reps,
            0.05,
        ),
        RateResult(
            "power: nowcast joint F",
            nowcast_rejection_rate(power_reps, NOWCAST_POWER_PROCESS, seed=seed),
            power_reps,
            0.05,
        ),
        RateResult("power: VAR RMSE < AR RMSE", var_beats_ar_rate(power_reps, seed=seed), power_reps, 0.05),
    ]
