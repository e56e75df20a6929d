"""Augmented Dickey-Fuller and KPSS tests."""

from __future__ import annotations

import numpy as np

from .exceptions import BandwidthTooLarge, ConstantSeries, SeriesTooShort
from .ols import newey_west_bandwidth, ols_fit
from .reports import LEVELS, TestReport
from .series import MonthlySeries
from .validation import check_count, lag_matrix

__all__ = ["adf_test", "kpss_test", "adf_critical_values", "KPSS_CRITICAL_VALUES"]

# Fuller's Dickey-Fuller t-statistic table; rows are sample sizes
# (np.inf = asymptotic), columns are the 1%, 5%, 10% quantiles.
_DF_SIZES = np.array([25, 50, 100, 250, 500, np.inf])
_DF_TABLES = {
    "n": np.array([
        [-2.66, -1.95, -1.60],
        [-2.62, -1.95, -1.61],
        [-2.60, -1.95, -1.61],
        [-2.58, -1.95, -1.62],
        [-2.58, -1.95, -1.62],
        [-2.58, -1.95, -1.62],
    ]),
    "c": np.array([
        [-3.75, -3.00, -2.63],
        [-3.58, -2.93, -2.60],
        [-3.51, -2.89, -2.58],
        [-3.46, -2.88, -2.57],
        [-3.44, -2.87, -2.57],
        [-3.43, -2.86, -2.57],
    ]),
    "ct": np.array([
        [-4.38, -3.60, -3.24],
        [-4.15, -3.50, -3.18],
        [-4.04, -3.45, -3.15],
        [-3.99, -3.43, -3.13],
        [-3.98, -3.42, -3.13],
        [-3.96, -3.41, -3.12],
    ]),
}

KPSS_CRITICAL_VALUES = {
    "c": {0.10: 0.347, 0.05: 0.463, 0.01: 0.739},
    "ct": {0.10: 0.119, 0.05: 0.146, 0.01: 0.216},
}


def _regression_code(intercept: bool, trend: bool) -> str:
    if trend and not intercept:
        raise ValueError("a trend without an intercept is not supported")
    return "ct" if trend else ("c" if intercept else "n")


def adf_critical_values(nobs: int, regression: str = "ct") -> dict:
    """Dickey-Fuller critical values, linear in ``1/nobs`` between table rows.

    Sample sizes below 25 use the 25-observation row.
    """
    table = _DF_TABLES[regression]
    inv = 1.0 / _DF_SIZES  # decreasing: 0.04 ... 0
    x = min(1.0 / nobs, inv[0])
    # np.interp wants increasing abscissae
    out = {}
    for j, level in enumerate(LEVELS):
        out[level] = float(np.interp(x, inv[::-1], table[::-1, j]))
    return out


def _interpolated_p(stat: float, crit: dict, reject_when: str) -> float:
    """Linear interpolation of p between the 1%, 5%, 10% critical values, clipped."""
    cvs = np.array([crit[lv] for lv in LEVELS])
    ps = np.array(LEVELS)
    if reject_when == "below":
        # cvs increase with the level
        return float(np.interp(stat, cvs, ps))
    return float(np.interp(stat, cvs[::-1], ps[::-1]))


def _values(s) -> tuple[np.ndarray, str]:
    if isinstance(s, MonthlySeries):
        return np.asarray(s.values, dtype=float), s.id
    return np.asarray(s, dtype=float).ravel(), ""


def adf_test(
    s,
    lags: int = 3,
    intercept: bool = True,
    trend: bool = True,
    interpolate_p: bool = False,
) -> TestReport:
    """Augmented Dickey-Fuller test; H0 is a unit root.

    Regresses ``dz_t`` on ``z_{t-1}``, ``dz_{t-1} .. dz_{t-lags}`` and the
    requested deterministic terms. The statistic is the t ratio on
    ``z_{t-1}``; the test rejects when it falls below the critical value.
    """
    z, label = _values(s)
    lags = check_count(lags, "lags")
    regression = _regression_code(intercept, trend)
    need = lags + 3 + int(intercept) + int(trend)
    if len(z) <= need:
        raise SeriesTooShort(f"ADF with {lags} lags needs more than {need} observations, got {len(z)}")
    if np.ptp(z) == 0:
        raise ConstantSeries(f"{label or 'series'} is constant")

    dz = np.diff(z)
    lagged = lag_matrix(dz, range(0, lags + 1))  # column l holds dz_{t-l}
    y = lagged[:, 0]
    nobs = len(y)
    level = z[lags : lags + nobs]  # z_{t-1} for each row
    cols, names = [], []
    if intercept:
        cols.append(np.ones(nobs))
        names.append("const")
    if trend:
        cols.append(np.arange(1, nobs + 1, dtype=float))
        names.append("trend")
    cols.append(level)
    names.append("level_lag")
    for l in range(1, lags + 1):
        cols.append(lagged[:, l])
        names.append(f"diff_lag{l}")
    fit = ols_fit(np.column_stack(cols), y, names=names)
    j = names.index("level_lag")
    stat = float(fit.tvalues[j])
    crit = adf_critical_values(nobs, regression)
    return TestReport(
        test_name="ADF",
        statistic=stat,
        critical_values=crit,
        reject_when="below",
        n=nobs,
        p_value=_interpolated_p(stat, crit, "below") if interpolate_p else None,
        spec={"intercept": intercept, "trend": trend, "lags": lags, "series": label},
    )


def kpss_test(
    s,
    trend: bool = True,
    bandwidth: int | None = None,
    interpolate_p: bool = False,
) -> TestReport:
    """KPSS test; H0 is (level or trend) stationarity.

    ``sum(S_t^2) / (n^2 * lrv)`` where ``S_t`` are partial sums of the
    residuals from regressing the series on an intercept (and a trend) and
    ``lrv`` is their Bartlett-kernel long-run variance.
    """
    z, label = _values(s)
    n = len(z)
    if n < 10:
        raise SeriesTooShort(f"KPSS needs at least 10 observations, got {n}")
    L = newey_west_bandwidth(n) if bandwidth is None else check_count(bandwidth, "bandwidth")
    if L >= n:
        raise BandwidthTooLarge(f"bandwidth {L} >= sample size {n}")
    regression = "ct" if trend else "c"

    if trend:
        X = np.column_stack([np.ones(n), np.arange(1, n + 1, dtype=float)])
        resid = np.asarray(ols_fit(X, z).residuals)
    else:
        resid = z - z.mean()

    flags = ()
    scale = max(np.max(np.abs(z)), 1.0)
    if np.max(np.abs(resid)) <= 1e-12 * scale:
        stat = 0.0
        flags = ("degenerate_variance",)
    else:
        partial = np.cumsum(resid)
        lrv = resid @ resid
        for j in range(1, L + 1):
            lrv += 2.0 * (1.0 - j / (L + 1.0)) * (resid[j:] @ resid[:-j])
        lrv /= n
        stat = float(partial @ partial / (n**2 * lrv))

    crit = dict(KPSS_CRITICAL_VALUES[regression])
    return TestReport(
        test_name="KPSS",
        statistic=stat,
        critical_values=crit,
        reject_when="above",
        n=n,
        p_value=_interpolated_p(stat, crit, "above") if interpolate_p else None,
        spec={"intercept": True, "trend": trend, "bandwidth": L, "series": label},
        flags=flags,
    )
