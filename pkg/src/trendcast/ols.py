"""Least squares with conventional and Newey-West covariance, plus nested F-tests."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np
from scipy import linalg, stats
from sklearn.base import BaseEstimator, RegressorMixin
from sklearn.utils.validation import check_is_fitted

from .exceptions import (
    BandwidthTooLarge,
    NestedViolation,
    RankDeficient,
    SampleMismatch,
)
from .reports import LEVELS, TestReport
from .validation import as_float_matrix, as_float_vector, check_count, check_enough_rows

__all__ = [
    "RegressionFit",
    "ols_fit",
    "hac_covariance",
    "white_covariance",
    "newey_west_bandwidth",
    "joint_f_test",
    "f_statistic",
    "OLSRegressor",
]

RANK_TOL = 1e-10


def newey_west_bandwidth(n: int) -> int:
    """Automatic lag truncation ``floor(4 (n/100)^(2/9))``."""
    return int(math.floor(4.0 * (n / 100.0) ** (2.0 / 9.0)))


@dataclass(frozen=True, eq=False)
class RegressionFit:
    coefficients: np.ndarray
    residuals: np.ndarray
    sigma2: float
    cov_ols: np.ndarray
    r2: float
    adj_r2: float
    n: int
    k: int
    ssr: float
    tss: float
    names: tuple
    has_intercept: bool
    xtx_inv: np.ndarray = field(repr=False)
    endog: np.ndarray = field(repr=False)
    exog: np.ndarray = field(repr=False)
    cov_hac: np.ndarray | None = None
    hac_bandwidth: int | None = None

    @property
    def df_resid(self) -> int:
        return self.n - self.k

    @property
    def fitted(self) -> np.ndarray:
        return self.endog - self.residuals

    @property
    def bse(self) -> np.ndarray:
        return np.sqrt(np.diag(self.cov_ols))

    @property
    def tvalues(self) -> np.ndarray:
        return self.coefficients / self.bse

    @property
    def pvalues(self) -> np.ndarray:
        return 2.0 * stats.t.sf(np.abs(self.tvalues), self.df_resid)

    @property
    def bse_hac(self) -> np.ndarray:
        if self.cov_hac is None:
            raise ValueError("fit has no HAC covariance; use with_hac()")
        return np.sqrt(np.diag(self.cov_hac))

    @property
    def tvalues_hac(self) -> np.ndarray:
        return self.coefficients / self.bse_hac

    @property
    def pvalues_hac(self) -> np.ndarray:
        # HAC inference is asymptotic, so use the normal rather than Student t
        return 2.0 * stats.norm.sf(np.abs(self.tvalues_hac))

    def coef(self, name: str) -> float:
        if name not in self.names:
            raise KeyError(f"no regressor named {name!r}; have {list(self.names)}")
        return float(self.coefficients[self.names.index(name)])

    def with_hac(self, bandwidth: int | None = None) -> "RegressionFit":
        """Copy of the fit carrying the Newey-West covariance."""
        L = newey_west_bandwidth(self.n) if bandwidth is None else bandwidth
        cov = hac_covariance(self, self.exog, L)
        return replace(self, cov_hac=cov, hac_bandwidth=L)


def _intercept_present(X: np.ndarray) -> bool:
    return any(
        np.all(X[:, j] == X[0, j]) and X[0, j] != 0 for j in range(X.shape[1])
    )


def ols_fit(X, y, names=None) -> RegressionFit:
    """Least-squares fit via column-pivoted QR.

    Raises :class:`RankDeficient` if any column is all zero or the design
    loses rank (|R_ii| below ``1e-10`` times the largest column norm).
    """
    X = np.array(as_float_matrix(X))
    n, k = X.shape
    y = np.array(as_float_vector(y, n=n))
    if names is None:
        names = tuple(f"x{j}" for j in range(k))
    names = tuple(names)
    if len(names) != k:
        raise ValueError(f"{len(names)} names for {k} columns")
    check_enough_rows(n, k)

    col_norms = np.linalg.norm(X, axis=0)
    zero = np.flatnonzero(col_norms == 0)
    if zero.size:
        raise RankDeficient(f"column {names[zero[0]]!r} is all zero")

    Q, R, piv = linalg.qr(X, mode="economic", pivoting=True)
    diag = np.abs(np.diag(R))
    rank = int(np.sum(diag > RANK_TOL * col_norms.max()))
    if rank < k:
        dropped = [names[j] for j in piv[rank:]]
        raise RankDeficient(f"design has rank {rank} < {k}; collinear columns: {dropped}")

    beta_p = linalg.solve_triangular(R, Q.T @ y)
    beta = np.empty(k)
    beta[piv] = beta_p
    Rinv = linalg.solve_triangular(R, np.eye(k))
    xtx_inv_p = Rinv @ Rinv.T
    xtx_inv = np.empty((k, k))
    xtx_inv[np.ix_(piv, piv)] = xtx_inv_p
    xtx_inv = 0.5 * (xtx_inv + xtx_inv.T)

    resid = y - X @ beta
    ssr = float(resid @ resid)
    df = n - k
    sigma2 = ssr / df
    has_const = _intercept_present(X)
    if has_const:
        tss = float(np.sum((y - y.mean()) ** 2))
        df_total = n - 1
    else:
        tss = float(y @ y)
        df_total = n
    r2 = 0.0 if tss == 0 else 1.0 - ssr / tss
    adj_r2 = 1.0 - (1.0 - r2) * df_total / df

    for arr in (beta, resid, xtx_inv, X, y):
        arr.setflags(write=False)
    cov = sigma2 * xtx_inv
    cov.setflags(write=False)
    return RegressionFit(
        coefficients=beta,
        residuals=resid,
        sigma2=sigma2,
        cov_ols=cov,
        r2=r2,
        adj_r2=adj_r2,
        n=n,
        k=k,
        ssr=ssr,
        tss=tss,
        names=names,
        has_intercept=has_const,
        xtx_inv=xtx_inv,
        endog=y,
        exog=X,
    )


def hac_covariance(fit: RegressionFit, X, bandwidth: int | None = None) -> np.ndarray:
    """Newey-West sandwich covariance with Bartlett weights ``1 - j/(L+1)``.

    ``bandwidth=None`` uses :func:`newey_west_bandwidth`; ``0`` gives the
    White (HC0) estimator.
    """
    X = as_float_matrix(X)
    if X.shape[0] != fit.n or X.shape[1] != fit.k:
        raise SampleMismatch(f"design shape {X.shape} does not match fit ({fit.n}, {fit.k})")
    L = newey_west_bandwidth(fit.n) if bandwidth is None else check_count(bandwidth, "bandwidth")
    if L >= fit.n:
        raise BandwidthTooLarge(f"bandwidth {L} >= sample size {fit.n}")
    scores = X * fit.residuals[:, None]
    meat = scores.T @ scores
    for j in range(1, L + 1):
        w = 1.0 - j / (L + 1.0)
        gamma = scores[j:].T @ scores[:-j]
        meat += w * (gamma + gamma.T)
    cov = fit.xtx_inv @ meat @ fit.xtx_inv
    return 0.5 * (cov + cov.T)


def white_covariance(fit: RegressionFit, X) -> np.ndarray:
    return hac_covariance(fit, X, 0)


def f_statistic(ssr_restricted: float, ssr_unrestricted: float, q: int, df_resid: int) -> float:
    """``[(SSR_r - SSR_u) / q] / [SSR_u / df_resid]``."""
    if ssr_unrestricted == 0:
        return math.inf
    return ((ssr_restricted - ssr_unrestricted) / q) / (ssr_unrestricted / df_resid)


def joint_f_test(
    unrestricted: RegressionFit, restricted: RegressionFit, q: int, name: str = "joint F"
) -> TestReport:
    """F-test that the ``q`` regressors dropped from ``unrestricted`` are jointly zero."""
    q = check_count(q, "q", 1)
    if unrestricted.n != restricted.n or not np.array_equal(unrestricted.endog, restricted.endog):
        raise SampleMismatch("restricted and unrestricted fits use different samples")
    if restricted.k + q != unrestricted.k:
        raise NestedViolation(
            f"restricted model has {restricted.k} regressors; expected {unrestricted.k} - {q}"
        )
    if not set(restricted.names) <= set(unrestricted.names):
        extra = sorted(set(restricted.names) - set(unrestricted.names))
        raise NestedViolation(f"restricted regressors {extra} absent from unrestricted model")
    tol = 1e-10 * max(1.0, restricted.ssr)
    if unrestricted.ssr > restricted.ssr + tol:
        raise NestedViolation(
            f"unrestricted SSR {unrestricted.ssr} exceeds restricted SSR {restricted.ssr}"
        )
    df_den = unrestricted.df_resid
    gain = restricted.ssr - unrestricted.ssr
    if gain <= 1e-12 * max(restricted.tss, np.finfo(float).tiny):
        # nothing left to explain, e.g. noiseless data
        F = 0.0
    else:
        F = f_statistic(restricted.ssr, unrestricted.ssr, q, df_den)
    p = float(stats.f.sf(F, q, df_den))
    crit = {lv: float(stats.f.isf(lv, q, df_den)) for lv in LEVELS}
    return TestReport(
        test_name=name,
        statistic=float(F),
        critical_values=crit,
        reject_when="above",
        n=unrestricted.n,
        p_value=p,
        p_exact=True,
        df=(q, df_den),
    )


class OLSRegressor(RegressorMixin, BaseEstimator):
    """Scikit-learn style wrapper around :func:`ols_fit`.

    Parameters
    ----------
    fit_intercept : bool
        Prepend a column of ones.
    cov_type : {"nonrobust", "hac"}
        Covariance used for ``bse_`` and ``pvalues_``.
    hac_bandwidth : int or None
        Newey-West truncation lag; ``None`` selects it from the sample size.
    """

    def __init__(self, fit_intercept=True, cov_type="nonrobust", hac_bandwidth=None):
        self.fit_intercept = fit_intercept
        self.cov_type = cov_type
        self.hac_bandwidth = hac_bandwidth

    def _design(self, X):
        X = as_float_matrix(X)
        if self.fit_intercept:
            X = np.column_stack([np.ones(len(X)), X])
        return X

    def fit(self, X, y):
        if self.cov_type not in ("nonrobust", "hac"):
            raise ValueError(f"cov_type must be 'nonrobust' or 'hac', got {self.cov_type!r}")
        Xd = self._design(X)
        self.n_features_in_ = Xd.shape[1] - int(self.fit_intercept)
        names = (["const"] if self.fit_intercept else []) + [f"x{j}" for j in range(self.n_features_in_)]
        fit = ols_fit(Xd, y, names=names)
        if self.cov_type == "hac":
            fit = fit.with_hac(self.hac_bandwidth)
        self.result_ = fit
        if self.fit_intercept:
            self.intercept_ = float(fit.coefficients[0])
            self.coef_ = np.array(fit.coefficients[1:])
        else:
            self.intercept_ = 0.0
            self.coef_ = np.array(fit.coefficients)
        cov = fit.cov_hac if self.cov_type == "hac" else fit.cov_ols
        self.bse_ = np.sqrt(np.diag(cov))
        self.pvalues_ = fit.pvalues_hac if self.cov_type == "hac" else fit.pvalues
        return self

    def predict(self, X):
        check_is_fitted(self, "result_")
        X = as_float_matrix(X)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"expected {self.n_features_in_} features, got {X.shape[1]}")
        return X @ self.coef_ + self.intercept_
