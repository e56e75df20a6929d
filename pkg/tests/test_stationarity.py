import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import load_oracle
from trendcast.exceptions import BandwidthTooLarge, ConstantSeries, SeriesTooShort
from trendcast.series import Month, MonthlySeries
from trendcast.stationarity import KPSS_CRITICAL_VALUES, adf_critical_values, adf_test, kpss_test

WHITE = np.array(load_oracle("white_noise")["y"])
WALK = np.array(load_oracle("random_walk")["y"])
AR1 = np.array(load_oracle("ar1")["y"])


def test_white_noise_adf_rejects_at_1pct():
    rep = adf_test(WHITE, lags=3, intercept=True, trend=True)
    assert rep.statistic < rep.critical_values[0.01]
    assert rep.stars == "***"


def test_random_walk_adf_does_not_reject_at_10pct():
    rep = adf_test(WALK, lags=3)
    assert rep.statistic > rep.critical_values[0.10]
    assert rep.p_bracket == ">=10%"


def test_constant_series_kpss_is_degenerate():
    rep = kpss_test(np.full(30, 4.2), trend=False)
    assert rep.statistic == 0.0
    assert "degenerate_variance" in rep.flags
    assert not rep.rejects(0.10)


def test_random_walk_kpss_rejects_at_1pct():
    rep = kpss_test(WALK, trend=True)
    assert rep.statistic > rep.critical_values[0.01]


def test_stationary_ar1_kpss_does_not_reject_at_5pct():
    assert not kpss_test(AR1, trend=True).rejects(0.05)
    assert not kpss_test(AR1, trend=False).rejects(0.05)


@pytest.mark.parametrize("name", ["white_noise", "ar1"])
def test_complementary_conclusions_stationary(name):
    z = np.array(load_oracle(name)["y"])
    assert adf_test(z).rejects(0.05)
    assert not kpss_test(z).rejects(0.05)


def test_complementary_conclusions_random_walk():
    assert not adf_test(WALK).rejects(0.05)
    assert kpss_test(WALK).rejects(0.05)


@pytest.mark.parametrize("col", ["y", "x"])
def test_differencing_random_walk_flips_both(col):
    z = np.array(load_oracle("random_walk")[col])
    assert not adf_test(z).rejects(0.05) and kpss_test(z).rejects(0.05)
    dz = np.diff(z)
    assert adf_test(dz).rejects(0.05) and not kpss_test(dz).rejects(0.05)


@given(st.integers(min_value=0, max_value=10_000), st.floats(min_value=1e-3, max_value=1e3))
@settings(max_examples=40)
def test_adf_scale_invariance(seed, c):
    z = np.cumsum(np.random.default_rng(seed).normal(size=80))
    for trend in (False, True):
        a = adf_test(z, trend=trend).statistic
        b = adf_test(c * z, trend=trend).statistic
        assert b == pytest.approx(a, abs=1e-10)


@given(
    st.integers(min_value=0, max_value=10_000),
    st.floats(min_value=-1e3, max_value=1e3),
    st.floats(min_value=-10, max_value=10),
)
@settings(max_examples=40)
def test_kpss_shift_invariance(seed, a, b):
    z = np.random.default_rng(seed).normal(size=90).cumsum() * 0.3
    t = np.arange(90.0)
    assert kpss_test(z + a, trend=False).statistic == pytest.approx(
        kpss_test(z, trend=False).statistic, abs=1e-10
    )
    assert kpss_test(z + a + b * t, trend=True).statistic == pytest.approx(
        kpss_test(z, trend=True).statistic, abs=1e-10
    )


def test_critical_values_ordered_by_direction():
    for reg in ("n", "c", "ct"):
        for n in (20, 50, 116, 400, 10**6):
            cv = adf_critical_values(n, reg)
            assert cv[0.01] < cv[0.05] < cv[0.10]
    for cv in KPSS_CRITICAL_VALUES.values():
        assert cv[0.01] > cv[0.05] > cv[0.10]


def test_adf_critical_values_interpolate_in_inverse_n():
    assert adf_critical_values(100, "ct")[0.05] == -3.45
    mid = adf_critical_values(int(1 / (0.5 / 100 + 0.5 / 250)), "ct")[0.01]
    assert -4.04 < mid < -3.99
    assert adf_critical_values(10, "c") == adf_critical_values(25, "c")


def test_interpolated_p_is_monotone_and_clipped():
    lo = adf_test(WHITE, interpolate_p=True)
    hi = adf_test(WALK, interpolate_p=True)
    assert lo.p_value == 0.01 and hi.p_value == 0.10
    assert not lo.p_exact


def test_report_spec_and_series_label():
    s = MonthlySeries("CZ.dUR", Month(2004, 2), WHITE[:119], "diff")
    rep = adf_test(s, lags=3, intercept=True, trend=False)
    assert rep.spec == {"intercept": True, "trend": False, "lags": 3, "series": "CZ.dUR"}
    assert rep.n == 119 - 1 - 3
    assert kpss_test(s, bandwidth=2).spec["bandwidth"] == 2


def test_adf_errors():
    with pytest.raises(SeriesTooShort):
        adf_test(np.arange(8.0), lags=3)
    with pytest.raises(ConstantSeries):
        adf_test(np.ones(40))
    with pytest.raises(ValueError):
        adf_test(WHITE, intercept=False, trend=True)


def test_kpss_errors():
    with pytest.raises(SeriesTooShort):
        kpss_test(np.arange(5.0))
    with pytest.raises(BandwidthTooLarge):
        kpss_test(np.arange(12.0) % 3, bandwidth=12)
