"""Autoregressions, VARs, the nowcasting regression and Granger causality."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .exceptions import (
    AlignmentError,
    InsufficientObservations,
    SeriesTooShort,
    UnknownVariable,
    WindowOutOfRange,
)
from .ols import RegressionFit, joint_f_test, ols_fit
from .reports import TestReport
from .series import Month, MonthlySeries
from .validation import as_float_matrix, as_float_vector, check_count, check_enough_rows, lag_matrix

__all__ = [
    "VarFit",
    "NowcastFit",
    "ModelSpec",
    "ForecastRecord",
    "fit_ar",
    "fit_var",
    "fit_nowcast",
    "granger_test",
    "forecast_rolling",
    "select_lag_order",
    "ARModel",
    "VARModel",
    "NowcastModel",
]


def _stack(ys, labels=None) -> tuple[np.ndarray, tuple, Month | None]:
    """(T, k) array, variable labels and the common start month."""
    if isinstance(ys, MonthlySeries):
        ys = [ys]
    if isinstance(ys, (list, tuple)) and ys and all(isinstance(s, MonthlySeries) for s in ys):
        first = ys[0]
        for s in ys[1:]:
            if s.start != first.start or len(s) != len(first):
                raise AlignmentError(
                    f"{first.id} ({first.start}..{first.end}) and {s.id} ({s.start}..{s.end}) "
                    "are not aligned"
                )
        Y = np.column_stack([np.asarray(s.values) for s in ys])
        names = tuple(labels) if labels else tuple(s.id for s in ys)
        return Y, names, first.start
    Y = as_float_matrix(ys, "ys")
    names = tuple(labels) if labels else tuple(f"y{j}" for j in range(Y.shape[1]))
    return Y, names, None


def _lag_names(variables, lags) -> list[str]:
    return [f"{v}.L{l}" for l in lags for v in variables]


@dataclass(frozen=True, eq=False)
class VarFit:
    """Equation-by-equation OLS estimate of a VAR(p) with intercept.

    ``coefs[l - 1][i, j]`` is the effect of variable ``j`` at lag ``l`` in the
    equation for variable ``i``.
    """

    variables: tuple
    p: int
    intercepts: np.ndarray
    coefs: np.ndarray
    residuals: np.ndarray
    sigma_u: np.ndarray
    equations: tuple
    data: np.ndarray = field(repr=False)
    start: Month | None = None

    @property
    def k(self) -> int:
        return len(self.variables)

    @property
    def nobs(self) -> int:
        return self.residuals.shape[1]

    @property
    def exog(self) -> np.ndarray:
        return self.equations[0].exog

    @property
    def names(self) -> tuple:
        return self.equations[0].names

    def equation(self, variable: str) -> RegressionFit:
        return self.equations[self._index(variable)]

    def _index(self, variable: str) -> int:
        try:
            return self.variables.index(variable)
        except ValueError:
            raise UnknownVariable(f"unknown variable {variable!r}; have {list(self.variables)}") from None

    def forecast(self, history=None) -> np.ndarray:
        """One-step forecast given the last ``p`` rows of ``history`` (default: fit data)."""
        H = self.data if history is None else as_float_matrix(history)
        if H.shape[0] < self.p or H.shape[1] != self.k:
            raise InsufficientObservations(f"need {self.p} rows of {self.k} variables to forecast")
        out = self.intercepts.copy()
        for l in range(1, self.p + 1):
            out += self.coefs[l - 1] @ H[-l]
        return out


def fit_var(ys, p: int = 12, labels=None) -> VarFit:
    """Fit a VAR(p) with intercept by OLS on each equation.

    ``ys`` is a sequence of aligned :class:`MonthlySeries` or a ``(T, k)``
    array. Every equation shares the regressor set ``[1, y_{t-1}, ..., y_{t-p}]``.
    """
    p = check_count(p, "p", 1)
    Y, variables, start = _stack(ys, labels)
    T, k = Y.shape
    if T <= 2 * p + 2:
        raise SeriesTooShort(f"VAR({p}) needs more than {2 * p + 2} observations, got {T}")
    X = np.column_stack([np.ones(T - p), lag_matrix(Y, range(1, p + 1))])
    names = ["const"] + _lag_names(variables, range(1, p + 1))
    check_enough_rows(X.shape[0], X.shape[1], f"VAR({p})")
    eqs = tuple(ols_fit(X, Y[p:, i], names=names) for i in range(k))
    B = np.column_stack([e.coefficients for e in eqs])  # (1 + k p, k)
    intercepts = B[0].copy()
    coefs = np.stack([B[1 + (l - 1) * k : 1 + l * k].T for l in range(1, p + 1)])
    resid = np.vstack([e.residuals for e in eqs])
    df = X.shape[0] - X.shape[1]
    sigma_u = resid @ resid.T / df
    return VarFit(
        variables=variables,
        p=p,
        intercepts=intercepts,
        coefs=coefs,
        residuals=resid,
        sigma_u=sigma_u,
        equations=eqs,
        data=Y,
        start=start,
    )


def fit_ar(y, p: int = 12) -> RegressionFit:
    """OLS of ``y_t`` on an intercept and ``y_{t-1} .. y_{t-p}``."""
    p = check_count(p, "p", 1)
    Y, names, _ = _stack(y)
    if Y.shape[1] != 1:
        raise ValueError("fit_ar expects a single series")
    T = Y.shape[0]
    if T <= p + 2:
        raise SeriesTooShort(f"AR({p}) needs more than {p + 2} observations, got {T}")
    X = np.column_stack([np.ones(T - p), lag_matrix(Y, range(1, p + 1))])
    return ols_fit(X, Y[p:, 0], names=["const"] + _lag_names(names, range(1, p + 1)))


def granger_test(fit: VarFit, cause: str, effect: str) -> TestReport:
    """F-test that all lags of ``cause`` can be dropped from the ``effect`` equation.

    The restricted equation is re-estimated on the same rows.
    """
    if cause == effect:
        raise ValueError("cause and effect must differ")
    i = fit._index(effect)
    fit._index(cause)
    unrestricted = fit.equations[i]
    prefix = f"{cause}.L"
    keep = [j for j, name in enumerate(unrestricted.names) if not name.startswith(prefix)]
    restricted = ols_fit(
        unrestricted.exog[:, keep],
        unrestricted.endog,
        names=[unrestricted.names[j] for j in keep],
    )
    report = joint_f_test(unrestricted, restricted, fit.p, name=f"Granger {cause} -> {effect}")
    return _with_spec(report, {"cause": cause, "effect": effect, "lags": fit.p})


def _with_spec(report: TestReport, spec: dict) -> TestReport:
    return replace(report, spec={**report.spec, **spec})


@dataclass(frozen=True, eq=False)
class NowcastFit:
    """Nowcasting regression with and without the search-intensity terms."""

    fit: RegressionFit
    restricted: RegressionFit
    adj_r2_with: float
    adj_r2_without: float
    google_joint_F: TestReport
    own_lags: tuple
    google_lags: tuple
    rows: tuple  # target months (or integer positions) of the dependent variable


def fit_nowcast(ur, gi, publication_lag: int = 3, max_lag: int = 12) -> NowcastFit:
    """Regress ``ur_t`` on ``ur_{t-publication_lag} .. ur_{t-max_lag}`` and ``gi_t .. gi_{t-max_lag}``.

    Both inputs are the (differenced) series; the restricted model drops
    every ``gi`` term and is fit on identical rows, giving comparable
    adjusted R-squared values and the joint F-test on the ``gi`` terms.
    """
    publication_lag = check_count(publication_lag, "publication_lag", 0)
    max_lag = check_count(max_lag, "max_lag", 1)
    if publication_lag > max_lag:
        raise ValueError("publication_lag must not exceed max_lag")
    if isinstance(ur, MonthlySeries) and isinstance(gi, MonthlySeries):
        Y, (ur_name, gi_name), start = _stack([ur, gi])
    else:
        u = as_float_vector(ur, "ur")
        g = as_float_vector(gi, "gi")
        if len(u) != len(g):
            raise AlignmentError(f"ur has {len(u)} observations, gi has {len(g)}")
        Y, (ur_name, gi_name), start = np.column_stack([u, g]), ("ur", "gi"), None
    T = Y.shape[0]
    own = tuple(range(publication_lag, max_lag + 1))
    goo = tuple(range(0, max_lag + 1))
    n_eff = T - max_lag
    k_full = 1 + len(own) + len(goo)
    if n_eff <= k_full:
        raise InsufficientObservations(
            f"nowcast regression: {n_eff} usable observations for {k_full} regressors"
        )

    ur_lags = lag_matrix(Y[:, :1], own) if own else np.empty((n_eff, 0))
    # lag_matrix trims by max(lags); align both blocks on t >= max_lag
    ur_lags = ur_lags[len(ur_lags) - n_eff :]
    gi_lags = lag_matrix(Y[:, 1:], goo)
    const = np.ones((n_eff, 1))
    y = Y[max_lag:, 0]
    own_names = [f"{ur_name}.L{l}" for l in own]
    goo_names = [f"{gi_name}.L{l}" for l in goo]
    full = ols_fit(np.hstack([const, ur_lags, gi_lags]), y, names=["const"] + own_names + goo_names)
    restricted = ols_fit(np.hstack([const, ur_lags]), y, names=["const"] + own_names)
    F = joint_f_test(full, restricted, len(goo), name=f"{gi_name} terms jointly zero")
    rows = tuple(start + t for t in range(max_lag, T)) if start is not None else tuple(range(max_lag, T))
    return NowcastFit(
        fit=full,
        restricted=restricted,
        adj_r2_with=full.adj_r2,
        adj_r2_without=restricted.adj_r2,
        google_joint_F=_with_spec(F, {"publication_lag": publication_lag, "max_lag": max_lag}),
        own_lags=own,
        google_lags=goo,
        rows=rows,
    )


def select_lag_order(ys, max_p: int = 12, labels=None) -> int:
    """Lag order minimising AIC over a common estimation sample."""
    max_p = check_count(max_p, "max_p", 1)
    Y, _, _ = _stack(ys, labels)
    T, k = Y.shape
    n = T - max_p
    best, best_aic = None, np.inf
    for p in range(1, max_p + 1):
        X = np.column_stack([np.ones(n), lag_matrix(Y, range(1, p + 1))[max_p - p :]])
        if n <= X.shape[1]:
            break
        resid = np.column_stack([ols_fit(X, Y[max_p:, i]).residuals for i in range(k)])
        sigma = resid.T @ resid / n
        sign, logdet = np.linalg.slogdet(sigma)
        if sign <= 0:
            continue
        aic = logdet + 2.0 * k * (1 + k * p) / n
        if aic < best_aic:
            best, best_aic = p, aic
    if best is None:
        raise InsufficientObservations("no lag order could be estimated")
    return best


@dataclass(frozen=True)
class ModelSpec:
    """``kind`` is ``"ar"`` (own lags of the first series) or ``"var"``."""

    kind: str
    p: int = 12

    def __post_init__(self):
        if self.kind not in ("ar", "var"):
            raise ValueError(f"model kind must be 'ar' or 'var', got {self.kind!r}")


@dataclass(frozen=True)
class ForecastRecord:
    origin: Month
    target: Month
    forecast: float
    actual: float
    model: str = ""

    @property
    def error(self) -> float:
        return self.forecast - self.actual


def forecast_rolling(
    spec: ModelSpec,
    data,
    train_end: Month,
    horizon_months: int,
    window: str = "expanding",
) -> list[ForecastRecord]:
    """One-step-ahead forecasts of the first series for each month after ``train_end``.

    Parameters are re-estimated at every origin on all observations up to it
    (``window="expanding"``) or on a window of fixed length equal to the
    initial training sample (``window="fixed"``).
    """
    if window not in ("expanding", "fixed"):
        raise ValueError(f"window must be 'expanding' or 'fixed', got {window!r}")
    horizon_months = check_count(horizon_months, "horizon_months", 1)
    if isinstance(train_end, str):
        train_end = Month.parse(train_end)
    if isinstance(data, MonthlySeries):
        data = [data]
    Y, names, start = _stack(list(data))
    if start is None:
        raise TypeError("forecast_rolling needs MonthlySeries inputs")
    end = start + (Y.shape[0] - 1)
    last_target = train_end + horizon_months
    if train_end < start or last_target > end:
        raise WindowOutOfRange(
            f"forecast window {train_end + 1}..{last_target} not inside data {start}..{end}"
        )
    if spec.kind == "ar":
        Y = Y[:, :1]
    n_train = (train_end - start) + 1
    label = f"{spec.kind.upper()}({spec.p})"

    records = []
    for h in range(1, horizon_months + 1):
        target = train_end + h
        stop = n_train + h - 1  # rows [.., stop) end at the origin
        lo = h - 1 if window == "fixed" else 0
        sample = Y[lo:stop]
        if spec.kind == "ar":
            fit = fit_ar(sample[:, 0], spec.p)
            lags = sample[-1 : -spec.p - 1 : -1, 0]
            f = float(fit.coefficients[0] + fit.coefficients[1:] @ lags)
        else:
            f = float(fit_var(sample, spec.p, labels=names).forecast()[0])
        records.append(
            ForecastRecord(
                origin=target - 1, target=target, forecast=f, actual=float(Y[stop, 0]), model=label
            )
        )
    return records


class ARModel(BaseEstimator):
    """Autoregression with intercept, scikit-learn style.

    ``fit(y)`` takes a 1-D series; ``forecast(steps)`` iterates one-step
    predictions from the end of the training data.
    """

    def __init__(self, lags=12):
        self.lags = lags

    def fit(self, y, _=None):
        self.result_ = fit_ar(as_float_vector(y), self.lags)
        self.intercept_ = float(self.result_.coefficients[0])
        self.coef_ = np.array(self.result_.coefficients[1:])
        self.history_ = np.array(as_float_vector(y))
        return self

    def forecast(self, steps=1, history=None):
        check_is_fitted(self, "result_")
        h = list(self.history_ if history is None else as_float_vector(history))
        if len(h) < self.lags:
            raise InsufficientObservations(f"need {self.lags} observations to forecast")
        out = []
        for _ in range(check_count(steps, "steps", 1)):
            nxt = self.intercept_ + self.coef_ @ np.array(h[-1 : -self.lags - 1 : -1])
            out.append(float(nxt))
            h.append(nxt)
        return np.array(out)


class VARModel(BaseEstimator):
    """Vector autoregression with intercept, scikit-learn style."""

    def __init__(self, lags=12, labels=None):
        self.lags = lags
        self.labels = labels

    def fit(self, Y, _=None):
        self.result_ = fit_var(Y, self.lags, labels=self.labels)
        self.intercept_ = self.result_.intercepts
        self.coefs_ = self.result_.coefs
        self.sigma_u_ = self.result_.sigma_u
        return self

    def forecast(self, steps=1, history=None):
        check_is_fitted(self, "result_")
        H = self.result_.data if history is None else as_float_matrix(history)
        H = list(H)
        out = []
        for _ in range(check_count(steps, "steps", 1)):
            nxt = self.result_.forecast(np.array(H))
            out.append(nxt)
            H.append(nxt)
        return np.array(out)

    def granger(self, cause, effect) -> TestReport:
        check_is_fitted(self, "result_")
        return granger_test(self.result_, cause, effect)


class NowcastModel(BaseEstimator):
    """Nowcasting regression: ``fit(X=gi, y=ur)`` on the differenced series.

    ``predict(X, y)`` nowcasts ``y`` at every row of ``X`` from row
    ``max_lag`` on, using only ``y`` values at least ``publication_lag``
    months old.
    """

    def __init__(self, publication_lag=3, max_lag=12):
        self.publication_lag = publication_lag
        self.max_lag = max_lag

    def fit(self, X, y):
        gi = as_float_vector(X, "X")
        self.result_ = fit_nowcast(y, gi, self.publication_lag, self.max_lag)
        self.coef_ = np.array(self.result_.fit.coefficients)
        return self

    def predict(self, X, y):
        check_is_fitted(self, "result_")
        gi = as_float_vector(X, "X")
        ur = as_float_vector(y, "y", n=len(gi))
        own = range(self.publication_lag, self.max_lag + 1)
        goo = range(0, self.max_lag + 1)
        n_eff = len(gi) - self.max_lag
        ur_lags = lag_matrix(ur, own)[-n_eff:] if n_eff > 0 else np.empty((0, len(own)))
        gi_lags = lag_matrix(gi, goo)
        design = np.hstack([np.ones((n_eff, 1)), ur_lags, gi_lags])
        return design @ self.coef_
