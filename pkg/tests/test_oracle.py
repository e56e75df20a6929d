"""Agreement with values frozen from an independent statistics package.

The fixtures are produced by ``tests/fixtures/generate_oracle.py``.
"""

import numpy as np
import pytest

from trendcast.ols import hac_covariance, ols_fit, white_covariance
from trendcast.stationarity import adf_test, kpss_test
from trendcast.var import fit_nowcast, fit_var, granger_test

TOL = 1e-6


def _pair(o):
    return np.array(o["y"]), np.array(o["x"])


def test_adf_statistics(oracle):
    for col, z in zip("yx", _pair(oracle)):
        ref = oracle["series"][col]
        assert adf_test(z, lags=3, trend=True).statistic == pytest.approx(ref["adf_ct"], abs=TOL)
        assert adf_test(z, lags=3, trend=False).statistic == pytest.approx(ref["adf_c"], abs=TOL)


def test_kpss_statistics(oracle):
    for col, z in zip("yx", _pair(oracle)):
        ref = oracle["series"][col]
        L = ref["kpss_bandwidth"]
        assert kpss_test(z, trend=True, bandwidth=L).statistic == pytest.approx(ref["kpss_ct"], abs=TOL)
        assert kpss_test(z, trend=False, bandwidth=L).statistic == pytest.approx(ref["kpss_c"], abs=TOL)
        # the automatic bandwidth is the same rule
        assert kpss_test(z).spec["bandwidth"] == L


@pytest.mark.parametrize("p", ["2", "12"])
def test_var_coefficients(oracle, p):
    y, x = _pair(oracle)
    fit = fit_var(np.column_stack([y, x]), int(p), labels=["y", "x"])
    ref = oracle["var"][p]
    np.testing.assert_allclose(fit.coefs, ref["coefs"], rtol=0, atol=TOL)
    np.testing.assert_allclose(fit.intercepts, ref["intercept"], rtol=0, atol=TOL)
    np.testing.assert_allclose(fit.sigma_u, ref["sigma_u"], rtol=0, atol=TOL)


@pytest.mark.parametrize("p", ["2", "12"])
def test_granger_f(oracle, p):
    y, x = _pair(oracle)
    fit = fit_var(np.column_stack([y, x]), int(p), labels=["y", "x"])
    ref = oracle["granger"][p]
    for (cause, effect), key in ((("x", "y"), "x_to_y"), (("y", "x"), "y_to_x")):
        rep = granger_test(fit, cause, effect)
        assert rep.statistic == pytest.approx(ref[key]["F"], abs=TOL)
        assert rep.p_value == pytest.approx(ref[key]["p_value"], abs=TOL)
        assert list(rep.df) == ref[key]["df"]


def test_nowcast_joint_f(oracle):
    y, x = _pair(oracle)
    nc = fit_nowcast(y, x)
    ref = oracle["nowcast"]
    assert nc.google_joint_F.statistic == pytest.approx(ref["F"], abs=TOL)
    assert nc.google_joint_F.p_value == pytest.approx(ref["p_value"], abs=TOL)
    assert nc.google_joint_F.df[0] == ref["q"]
    assert nc.fit.n == ref["n"]
    assert nc.adj_r2_with == pytest.approx(ref["adj_r2_with"], abs=TOL)
    assert nc.adj_r2_without == pytest.approx(ref["adj_r2_without"], abs=TOL)


def test_hac_and_white_standard_errors(oracle):
    y, x = _pair(oracle)
    X = np.column_stack([np.ones_like(x), x])
    fit = ols_fit(X, y)
    ref = oracle["elasticity"]
    np.testing.assert_allclose(fit.coefficients, ref["params"], rtol=0, atol=TOL)
    hac = np.sqrt(np.diag(hac_covariance(fit, X, ref["bandwidth"])))
    np.testing.assert_allclose(hac, ref["bse_hac"], rtol=0, atol=TOL)
    np.testing.assert_allclose(np.sqrt(np.diag(white_covariance(fit, X))), ref["bse_white"], rtol=0, atol=TOL)
