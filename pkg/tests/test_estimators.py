import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from trendcast.ols import OLSRegressor, newey_west_bandwidth, ols_fit
from trendcast.simulate import PairProcess, rng_for, simulate_var1
from trendcast.var import ARModel, NowcastModel, VARModel, fit_ar, fit_nowcast, fit_var, granger_test


def test_ols_regressor_matches_function():
    rng = np.random.default_rng(0)
    X = rng.normal(size=(80, 2))
    y = 1.0 + X @ [0.5, -2.0] + rng.normal(size=80)
    est = OLSRegressor().fit(X, y)
    fit = ols_fit(np.column_stack([np.ones(80), X]), y)
    assert est.intercept_ == pytest.approx(fit.coefficients[0])
    np.testing.assert_allclose(est.coef_, fit.coefficients[1:])
    np.testing.assert_allclose(est.predict(X), fit.fitted)
    assert est.score(X, y) == pytest.approx(fit.r2)
    assert est.n_features_in_ == 2


def test_ols_regressor_hac_and_params():
    rng = np.random.default_rng(1)
    X = rng.normal(size=(100, 1))
    y = 2 * X[:, 0] + rng.normal(size=100)
    est = OLSRegressor(cov_type="hac").fit(X, y)
    assert est.result_.hac_bandwidth == newey_west_bandwidth(100)
    np.testing.assert_allclose(est.bse_, est.result_.bse_hac)
    assert est.get_params() == {"fit_intercept": True, "cov_type": "hac", "hac_bandwidth": None}
    assert clone(est).set_params(hac_bandwidth=2).fit(X, y).result_.hac_bandwidth == 2
    with pytest.raises(ValueError):
        OLSRegressor(cov_type="robust").fit(X, y)


def test_ols_regressor_without_intercept():
    X = np.arange(1.0, 11.0)[:, None]
    est = OLSRegressor(fit_intercept=False).fit(X, 3 * X[:, 0])
    assert est.intercept_ == 0.0 and est.coef_[0] == pytest.approx(3.0)


def test_unfitted_estimators_raise():
    with pytest.raises(NotFittedError):
        OLSRegressor().predict(np.ones((2, 1)))
    with pytest.raises(NotFittedError):
        ARModel().forecast()
    with pytest.raises(NotFittedError):
        VARModel().forecast()
    with pytest.raises(NotFittedError):
        NowcastModel().predict(np.zeros(20), np.zeros(20))


def test_ar_model_forecast_iterates():
    y = np.random.default_rng(2).normal(size=120)
    m = ARModel(lags=3).fit(y)
    np.testing.assert_allclose(m.coef_, fit_ar(y, 3).coefficients[1:])
    f = m.forecast(2)
    first = m.intercept_ + m.coef_ @ y[-1:-4:-1]
    second = m.intercept_ + m.coef_ @ np.array([first, y[-1], y[-2]])
    np.testing.assert_allclose(f, [first, second], atol=1e-12)


def test_var_model_wraps_fit_var():
    Y = simulate_var1([[0.5, 0.3], [0.0, 0.4]], 300, rng_for(21, 0))
    m = VARModel(lags=2, labels=["y", "x"]).fit(Y)
    ref = fit_var(Y, 2, labels=["y", "x"])
    np.testing.assert_allclose(m.coefs_, ref.coefs)
    np.testing.assert_allclose(m.forecast(1)[0], ref.forecast())
    assert m.forecast(3).shape == (3, 2)
    assert m.granger("x", "y").statistic == pytest.approx(granger_test(ref, "x", "y").statistic)


def test_nowcast_model_predict_matches_fitted_values():
    ur, gi = PairProcess(gi_now=0.5).simulate(120, rng_for(22, 0))
    m = NowcastModel().fit(gi, ur)
    ref = fit_nowcast(ur, gi)
    np.testing.assert_allclose(m.predict(gi, ur), ref.fit.fitted, atol=1e-12)
    assert m.get_params() == {"publication_lag": 3, "max_lag": 12}
