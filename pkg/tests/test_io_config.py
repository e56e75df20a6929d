import datetime as dt

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trendcast.config import load_config
from trendcast.exceptions import ConfigError, GapError, NonWeeklySpacing, ParseError, RangeError
from trendcast.io import (
    ingest_trends_csv,
    ingest_unemployment_csv,
    write_trends_csv,
    write_unemployment_csv,
)
from trendcast.series import Month, MonthlySeries


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return p


# --- unemployment CSV -------------------------------------------------------------


def test_minimal_unemployment_file(tmp_path):
    s = ingest_unemployment_csv(write(tmp_path, "u.csv", "2004-01,9.0\n2004-02,8.9"))
    assert len(s) == 2
    assert s.start == Month(2004, 1)
    assert list(s.values) == [9.0, 8.9]
    assert s.units == "percent"


def test_header_and_blank_lines_are_ignored(tmp_path):
    s = ingest_unemployment_csv(write(tmp_path, "u.csv", "month,rate\n\n2004-01,9.0\n2004-02,8.9\n\n"))
    assert len(s) == 2


def test_gap_detected(tmp_path):
    with pytest.raises(GapError) as exc:
        ingest_unemployment_csv(write(tmp_path, "u.csv", "2004-01,9\n2004-02,8.9\n2004-04,8.7\n"))
    assert exc.value.month == Month(2004, 3)


def test_bad_value_reports_line(tmp_path):
    with pytest.raises(ParseError) as exc:
        ingest_unemployment_csv(write(tmp_path, "u.csv", "month,rate\n2004-01,9.0\n2004-02,abc\n"))
    assert exc.value.line == 3
    assert ":3:" in str(exc.value)


@pytest.mark.parametrize(
    "text",
    [
        "2004-01,9.0\n2004-01,9.1\n",  # duplicate month
        "2004-02,9.0\n2004-01,9.1\n",  # backwards
        "2004-13,9.0\n",
        "2004-01;9.0\n",
        "2004-01,9.0,1\n",
        "2004-01,nan\n",
        "month,rate\n",
    ],
)
def test_malformed_unemployment_files(tmp_path, text):
    with pytest.raises(ParseError):
        ingest_unemployment_csv(write(tmp_path, "u.csv", text))


def test_unemployment_range(tmp_path):
    with pytest.raises(RangeError) as exc:
        ingest_unemployment_csv(write(tmp_path, "u.csv", "2004-01,9.0\n2004-02,120\n"))
    assert exc.value.value == 120.0 and exc.value.line == 2


# --- trends CSV ------------------------------------------------------------------------


def test_minimal_trends_file(tmp_path):
    w = ingest_trends_csv(write(tmp_path, "t.csv", "week,value\n2004-01-04,55\n2004-01-11,60\n"))
    assert w.week_start == (dt.date(2004, 1, 4), dt.date(2004, 1, 11))
    assert list(w.values) == [55.0, 60.0]


def test_trends_spacing_violation(tmp_path):
    with pytest.raises(NonWeeklySpacing) as exc:
        ingest_trends_csv(write(tmp_path, "t.csv", "2004-01-04,55\n2004-01-12,60\n"))
    assert exc.value.date == dt.date(2004, 1, 12)


def test_trends_range_violation(tmp_path):
    with pytest.raises(RangeError):
        ingest_trends_csv(write(tmp_path, "t.csv", "2004-01-04,55\n2004-01-11,-1\n"))


def test_trends_bad_date(tmp_path):
    with pytest.raises(ParseError):
        ingest_trends_csv(write(tmp_path, "t.csv", "2004/01/04,55\n"))


# --- round trip through the writers ---------------------------------------------------


@given(st.lists(st.integers(min_value=0, max_value=10000), min_size=1, max_size=40))
@settings(max_examples=30)
def test_unemployment_write_read_round_trip(tmp_path_factory, cents):
    values = np.array(cents) / 100
    s = MonthlySeries("x", Month(2003, 11), values)
    p = tmp_path_factory.mktemp("rt") / "u.csv"
    write_unemployment_csv(s, p)
    back = ingest_unemployment_csv(p, id="x")
    assert back.start == s.start
    np.testing.assert_array_equal(back.values, values)


def test_trends_write_read_round_trip(tmp_path):
    weeks = [dt.date(2004, 1, 4) + dt.timedelta(days=7 * i) for i in range(10)]
    values = np.linspace(0, 100, 10).round(2)
    write_trends_csv(weeks, values, tmp_path / "t.csv")
    back = ingest_trends_csv(tmp_path / "t.csv")
    assert list(back.week_start) == weeks
    np.testing.assert_array_equal(back.values, values)


# --- config --------------------------------------------------------------------------------

BASE = """\
[defaults]
sample_start = 2004-01
sample_end = 2013-12
train_end = 2012-12
forecast_end = 2013-12

[country CZ]
unemployment = data/cz_u.csv
trends = data/cz_t.csv
search_terms = prace
"""


def test_config_defaults_and_paths(tmp_path):
    cfg = load_config(write(tmp_path, "c.ini", BASE))
    assert len(cfg) == 1
    c = cfg[0]
    assert c.country == "CZ"
    assert c.unemployment == (tmp_path / "data" / "cz_u.csv").resolve()
    assert (c.adf_lags, c.var_lags, c.publication_lag) == (3, 12, 3)
    assert c.kpss_bandwidth is None and c.hac_bandwidth is None
    assert c.forecast_start == Month(2013, 1)
    assert c.horizon == 12
    r = c.resolved()
    assert r["hac_bandwidth"] == "auto" and r["unemployment"] == "cz_u.csv"


def test_config_country_overrides_defaults(tmp_path):
    text = BASE + "var_lags = 6\ndm_loss = absolute\nforecast_window = fixed\n\n[country HU]\nunemployment = h.csv\ntrends = t.csv\n"
    cz, hu = load_config(write(tmp_path, "c.ini", text))
    assert cz.var_lags == 6 and cz.dm_loss == "absolute" and cz.forecast_window == "fixed"
    assert hu.var_lags == 12 and hu.dm_loss == "squared"


@pytest.mark.parametrize(
    "extra, message",
    [
        ("train_end = 2014-01\n", "train_end"),
        ("forecast_end = 2012-06\n", "train_end"),
        ("forecast_start = 2013-03\n", "forecast_start"),
        ("colour = blue\n", "unknown"),
        ("adf_lags = -1\n", "non-negative"),
        ("adf_trend = maybe\n", "boolean"),
        ("var_lag_selection = bic\n", "var_lag_selection"),
        ("dm_loss = hinge\n", "dm_loss"),
        ("adf_intercept = false\n", "adf_trend requires"),
    ],
)
def test_config_validation(tmp_path, extra, message):
    with pytest.raises(ConfigError, match=message):
        load_config(write(tmp_path, "c.ini", BASE + extra))


def test_config_structure_errors(tmp_path):
    with pytest.raises(ConfigError, match="not found"):
        load_config(tmp_path / "missing.ini")
    with pytest.raises(ConfigError, match="no \\[country"):
        load_config(write(tmp_path, "a.ini", "[defaults]\nvar_lags = 2\n"))
    with pytest.raises(ConfigError, match="unexpected section"):
        load_config(write(tmp_path, "b.ini", BASE + "\n[region X]\nunemployment = a\ntrends = b\n"))
    with pytest.raises(ConfigError):
        load_config(write(tmp_path, "c.ini", BASE + "\n[country CZ]\nunemployment = a\ntrends = b\n"))
    with pytest.raises(ConfigError, match="missing 'trends'"):
        load_config(write(tmp_path, "d.ini", "[country XX]\nunemployment = a.csv\n"))
