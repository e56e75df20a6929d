"""Input validation helpers shared by the estimators."""

from __future__ import annotations

import numbers

import numpy as np

from .exceptions import InsufficientObservations, LengthMismatch


def as_float_matrix(X, name="X") -> np.ndarray:
    """2-D float array with finite entries (1-D input becomes one column)."""
    arr = np.asarray(X, dtype=float)
    if arr.ndim == 1:
        arr = arr[:, None]
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-dimensional, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains NaN or infinite values")
    return arr


def as_float_vector(y, name="y", n=None) -> np.ndarray:
    arr = np.asarray(y, dtype=float)
    if arr.ndim == 2 and arr.shape[1] == 1:
        arr = arr[:, 0]
    if arr.ndim != 1:
        raise ValueError(f"{name} must be 1-dimensional, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains NaN or infinite values")
    if n is not None and len(arr) != n:
        raise LengthMismatch(f"{name} has {len(arr)} rows, expected {n}")
    return arr


def check_count(value, name, minimum=0) -> int:
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise TypeError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return int(value)


def check_enough_rows(n_rows, n_cols, what="regression"):
    if n_rows <= n_cols:
        raise InsufficientObservations(
            f"{what}: {n_rows} observations for {n_cols} regressors"
        )


def lag_matrix(Y: np.ndarray, lags) -> np.ndarray:
    """Columns ``Y[t - l, j]`` for every lag ``l`` (outer) and column ``j`` (inner).

    Row ``r`` corresponds to time ``t = max(lags) + r``; the first
    ``max(lags)`` observations are consumed as pre-sample.
    """
    Y = np.asarray(Y, dtype=float)
    if Y.ndim == 1:
        Y = Y[:, None]
    lags = list(lags)
    maxlag = max(lags) if lags else 0
    T = Y.shape[0]
    blocks = [Y[maxlag - l : T - l] for l in lags]
    if not blocks:
        return np.empty((T - maxlag, 0))
    return np.hstack(blocks)
