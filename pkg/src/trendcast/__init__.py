"""Time-series econometrics for nowcasting unemployment with search-intensity data."""

__version__ = "0.1.0"

from .evaluation import DmResult, ForecastEvaluation, dm_test, evaluate, mae, rmse
from .exceptions import TrendcastError
from .ols import (
    OLSRegressor,
    RegressionFit,
    hac_covariance,
    joint_f_test,
    newey_west_bandwidth,
    ols_fit,
    white_covariance,
)
from .reports import TestReport
from .series import (
    Month,
    MonthlySeries,
    TransformState,
    WeeklySeries,
    aggregate_weekly_to_monthly,
    align,
    cumulate,
    first_difference,
    log_transform,
)
from .stationarity import adf_test, kpss_test
from .var import (
    ARModel,
    ModelSpec,
    NowcastFit,
    NowcastModel,
    VARModel,
    VarFit,
    fit_ar,
    fit_nowcast,
    fit_var,
    forecast_rolling,
    granger_test,
    select_lag_order,
)

__all__ = [
    "__version__",
    "ARModel",
    "DmResult",
    "ForecastEvaluation",
    "ModelSpec",
    "Month",
    "MonthlySeries",
    "NowcastFit",
    "NowcastModel",
    "OLSRegressor",
    "RegressionFit",
    "TestReport",
    "TransformState",
    "TrendcastError",
    "VARModel",
    "VarFit",
    "WeeklySeries",
    "adf_test",
    "aggregate_weekly_to_monthly",
    "align",
    "cumulate",
    "dm_test",
    "evaluate",
    "first_difference",
    "fit_ar",
    "fit_nowcast",
    "fit_var",
    "forecast_rolling",
    "granger_test",
    "hac_covariance",
    "joint_f_test",
    "kpss_test",
    "log_transform",
    "mae",
    "newey_west_bandwidth",
    "ols_fit",
    "rmse",
    "select_lag_order",
    "white_covariance",
]
