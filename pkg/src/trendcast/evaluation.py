"""Forecast accuracy: MAE, RMSE and the Diebold-Mariano test."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import stats

from .exceptions import DegenerateLossDifferential, EmptyForecastSet, LengthMismatch
from .validation import check_count

__all__ = ["ForecastEvaluation", "DmResult", "mae", "rmse", "evaluate", "dm_test", "loss_series"]

LOSSES = ("squared", "absolute")


def _errors(pairs) -> np.ndarray:
    """Forecast errors ``f - y`` from (forecast, actual) pairs or ForecastRecords."""
    pairs = list(pairs)
    if not pairs:
        raise EmptyForecastSet("no forecasts to evaluate")
    if hasattr(pairs[0], "forecast"):
        return np.array([r.forecast - r.actual for r in pairs], dtype=float)
    arr = np.asarray(pairs, dtype=float)
    return arr[:, 0] - arr[:, 1]


def _pairs_from(forecast, actual=None):
    if actual is None:
        return forecast
    f = np.asarray(forecast, dtype=float)
    y = np.asarray(actual, dtype=float)
    if f.shape != y.shape:
        raise LengthMismatch(f"{f.shape} forecasts for {y.shape} actuals")
    return list(zip(f, y))


def mae(forecast, actual=None) -> float:
    """Mean absolute error; accepts pairs, records, or two arrays."""
    return float(np.mean(np.abs(_errors(_pairs_from(forecast, actual)))))


def rmse(forecast, actual=None) -> float:
    """Root mean squared error; accepts pairs, records, or two arrays."""
    return float(math.sqrt(np.mean(_errors(_pairs_from(forecast, actual)) ** 2)))


def loss_series(errors, loss: str = "squared") -> np.ndarray:
    e = np.asarray(errors, dtype=float)
    if loss == "squared":
        return e**2
    if loss == "absolute":
        return np.abs(e)
    raise ValueError(f"loss must be one of {LOSSES}, got {loss!r}")


@dataclass(frozen=True)
class ForecastEvaluation:
    targets: tuple
    forecasts: np.ndarray
    actuals: np.ndarray
    mae: float
    rmse: float

    @property
    def errors(self) -> np.ndarray:
        return self.forecasts - self.actuals

    @property
    def absolute_losses(self) -> np.ndarray:
        return np.abs(self.errors)

    @property
    def squared_losses(self) -> np.ndarray:
        return self.errors**2


def evaluate(records) -> ForecastEvaluation:
    """Score a list of forecast records (anything with ``target``, ``forecast``, ``actual``)."""
    records = list(records)
    if not records:
        raise EmptyForecastSet("no forecasts to evaluate")
    f = np.array([r.forecast for r in records], dtype=float)
    y = np.array([r.actual for r in records], dtype=float)
    return ForecastEvaluation(
        targets=tuple(r.target for r in records),
        forecasts=f,
        actuals=y,
        mae=mae(f, y),
        rmse=rmse(f, y),
    )


@dataclass(frozen=True)
class DmResult:
    """Diebold-Mariano comparison of forecast 1 against forecast 2.

    ``p_value_greater`` tests H1: forecast 2 is more accurate (positive
    statistic); ``p_value_two_sided`` tests H1: accuracies differ.
    """

    statistic: float
    p_value_two_sided: float
    p_value_greater: float
    loss: str
    lrv_estimate: float
    T: int
    bandwidth: int
    mean_differential: float
    small_sample_correction: bool = False

    @property
    def p_value_less(self) -> float:
        return 1.0 - self.p_value_greater


def dm_test(
    errors_1,
    errors_2,
    loss: str = "squared",
    h: int = 1,
    bandwidth: int | None = None,
    small_sample_correction: bool = False,
) -> DmResult:
    """Diebold-Mariano test on ``d_t = loss(e1_t) - loss(e2_t)``.

    The long-run variance of ``d`` uses Bartlett weights with truncation
    ``h - 1`` unless ``bandwidth`` is given, so one-step forecasts use the
    plain variance. With ``small_sample_correction`` the statistic is scaled
    as proposed by Harvey, Leybourne and Newbold and compared with Student t
    on ``T - 1`` degrees of freedom.
    """
    e1 = np.asarray(errors_1, dtype=float).ravel()
    e2 = np.asarray(errors_2, dtype=float).ravel()
    if e1.shape != e2.shape:
        raise LengthMismatch(f"error sequences differ in length: {len(e1)} vs {len(e2)}")
    T = len(e1)
    if T < 4:
        raise LengthMismatch(f"DM test needs at least 4 forecasts, got {T}")
    h = check_count(h, "h", 1)
    L = h - 1 if bandwidth is None else check_count(bandwidth, "bandwidth")
    if L >= T:
        raise ValueError(f"bandwidth {L} must be below T={T}")

    d = loss_series(e1, loss) - loss_series(e2, loss)
    dbar = float(d.mean())
    dc = d - dbar
    scale = max(np.max(np.abs(d)), np.finfo(float).tiny)
    if np.max(np.abs(dc)) <= 1e-14 * scale or np.all(d == d[0]):
        raise DegenerateLossDifferential(
            f"loss differential is constant ({dbar!r}); the DM statistic is undefined"
        )
    lrv = float(dc @ dc) / T
    for j in range(1, L + 1):
        lrv += 2.0 * (1.0 - j / (L + 1.0)) * float(dc[j:] @ dc[:-j]) / T
    if lrv <= 0:
        raise DegenerateLossDifferential(f"non-positive long-run variance {lrv!r}")
    S = dbar / math.sqrt(lrv / T)
    if small_sample_correction:
        S *= math.sqrt((T + 1 - 2 * h + h * (h - 1) / T) / T)
        dist = stats.t(T - 1)
    else:
        dist = stats.norm
    return DmResult(
        statistic=float(S),
        p_value_two_sided=float(2.0 * dist.sf(abs(S))),
        p_value_greater=float(dist.sf(S)),
        loss=loss,
        lrv_estimate=lrv,
        T=T,
        bandwidth=L,
        mean_differential=dbar,
        small_sample_correction=small_sample_correction,
    )
