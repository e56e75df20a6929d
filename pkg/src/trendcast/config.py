"""Pipeline configuration: an INI file with a ``[defaults]`` section and one
``[country XX]`` section per country.

Example::

    [defaults]
    sample_start = 2004-01
    sample_end = 2013-12
    train_end = 2012-12

    [country CZ]
    unemployment = cz_unemployment.csv
    trends = cz_trends.csv
    search_terms = prace

Relative paths resolve against the config file's directory.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, fields
from pathlib import Path

from .exceptions import ConfigError
from .series import Month

__all__ = ["CountryConfig", "load_config", "DEFAULTS"]

DEFAULTS = {
    "sample_start": "2004-01",
    "sample_end": "2013-12",
    "train_end": "2012-12",
    "forecast_start": "",
    "forecast_end": "2013-12",
    "adf_lags": "3",
    "adf_intercept": "true",
    "adf_trend": "true",
    "kpss_trend": "true",
    "kpss_bandwidth": "auto",
    "var_lags": "12",
    "var_lag_selection": "fixed",
    "publication_lag": "3",
    "nowcast_max_lag": "12",
    "hac_bandwidth": "auto",
    "dm_loss": "squared",
    "dm_bandwidth": "auto",
    "dm_small_sample": "false",
    "forecast_window": "expanding",
    "search_terms": "",
}


@dataclass(frozen=True)
class CountryConfig:
    country: str
    unemployment: Path
    trends: Path
    search_terms: str = ""
    sample_start: Month = Month(2004, 1)
    sample_end: Month = Month(2013, 12)
    train_end: Month = Month(2012, 12)
    forecast_end: Month = Month(2013, 12)
    adf_lags: int = 3
    adf_intercept: bool = True
    adf_trend: bool = True
    kpss_trend: bool = True
    kpss_bandwidth: int | None = None
    var_lags: int = 12
    var_lag_selection: str = "fixed"
    publication_lag: int = 3
    nowcast_max_lag: int = 12
    hac_bandwidth: int | None = None
    dm_loss: str = "squared"
    dm_bandwidth: int | None = None
    dm_small_sample: bool = False
    forecast_window: str = "expanding"

    def __post_init__(self):
        if not self.sample_start < self.sample_end:
            raise ConfigError(f"{self.country}: sample_start must precede sample_end")
        if not self.train_end < self.forecast_end <= self.sample_end:
            raise ConfigError(
                f"{self.country}: need train_end < forecast_end <= sample_end "
                f"({self.train_end}, {self.forecast_end}, {self.sample_end})"
            )
        if self.train_end < self.sample_start:
            raise ConfigError(f"{self.country}: train_end precedes sample_start")
        if self.var_lag_selection not in ("fixed", "aic"):
            raise ConfigError(f"{self.country}: var_lag_selection must be 'fixed' or 'aic'")
        if self.dm_loss not in ("squared", "absolute"):
            raise ConfigError(f"{self.country}: dm_loss must be 'squared' or 'absolute'")
        if self.forecast_window not in ("expanding", "fixed"):
            raise ConfigError(f"{self.country}: forecast_window must be 'expanding' or 'fixed'")
        if self.adf_trend and not self.adf_intercept:
            raise ConfigError(f"{self.country}: adf_trend requires adf_intercept")

    @property
    def horizon(self) -> int:
        return self.forecast_end - self.train_end

    @property
    def forecast_start(self) -> Month:
        return self.train_end + 1

    def resolved(self) -> dict:
        """Every setting as a display string, in field order."""
        out = {}
        for f in fields(self):
            v = getattr(self, f.name)
            if v is None:
                v = "auto"
            elif isinstance(v, bool):
                v = "true" if v else "false"
            elif isinstance(v, Path):
                v = v.name
            out[f.name] = str(v)
        out["forecast_start"] = str(self.forecast_start)
        return out


def _bool(text: str, key: str) -> bool:
    t = text.strip().lower()
    if t in ("1", "true", "yes", "on"):
        return True
    if t in ("0", "false", "no", "off"):
        return False
    raise ConfigError(f"{key}: expected a boolean, got {text!r}")


def _int(text: str, key: str, auto: bool = False) -> int | None:
    t = text.strip().lower()
    if auto and t in ("auto", ""):
        return None
    try:
        v = int(t)
    except ValueError:
        raise ConfigError(f"{key}: expected an integer, got {text!r}") from None
    if v < 0:
        raise ConfigError(f"{key}: must be non-negative, got {v}")
    return v


def _month(text: str, key: str) -> Month:
    try:
        return Month.parse(text)
    except ValueError as exc:
        raise ConfigError(f"{key}: {exc}") from None


def _country(code: str, section, base: Path) -> CountryConfig:
    def get(key):
        return section.get(key, DEFAULTS.get(key, ""))

    for key in ("unemployment", "trends"):
        if not section.get(key):
            raise ConfigError(f"country {code}: missing '{key}' path")
    train_end = _month(get("train_end"), "train_end")
    fs = get("forecast_start").strip()
    if fs and _month(fs, "forecast_start") != train_end + 1:
        raise ConfigError(f"country {code}: forecast_start must be the month after train_end")
    return CountryConfig(
        country=code,
        unemployment=(base / section["unemployment"]).resolve(),
        trends=(base / section["trends"]).resolve(),
        search_terms=get("search_terms"),
        sample_start=_month(get("sample_start"), "sample_start"),
        sample_end=_month(get("sample_end"), "sample_end"),
        train_end=train_end,
        forecast_end=_month(get("forecast_end"), "forecast_end"),
        adf_lags=_int(get("adf_lags"), "adf_lags"),
        adf_intercept=_bool(get("adf_intercept"), "adf_intercept"),
        adf_trend=_bool(get("adf_trend"), "adf_trend"),
        kpss_trend=_bool(get("kpss_trend"), "kpss_trend"),
        kpss_bandwidth=_int(get("kpss_bandwidth"), "kpss_bandwidth", auto=True),
        var_lags=_int(get("var_lags"), "var_lags"),
        var_lag_selection=get("var_lag_selection").strip(),
        publication_lag=_int(get("publication_lag"), "publication_lag"),
        nowcast_max_lag=_int(get("nowcast_max_lag"), "nowcast_max_lag"),
        hac_bandwidth=_int(get("hac_bandwidth"), "hac_bandwidth", auto=True),
        dm_loss=get("dm_loss").strip(),
        dm_bandwidth=_int(get("dm_bandwidth"), "dm_bandwidth", auto=True),
        dm_small_sample=_bool(get("dm_small_sample"), "dm_small_sample"),
        forecast_window=get("forecast_window").strip(),
    )


def load_config(path) -> list[CountryConfig]:
    """Parse a config file into per-country settings, in file order."""
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"config file not found: {path}")
    parser = configparser.ConfigParser(default_section="defaults", interpolation=None)
    try:
        parser.read(path, encoding="utf-8")
    except configparser.Error as exc:
        raise ConfigError(f"{path}: {exc}") from None
    unknown = set(parser.defaults()) - set(DEFAULTS)
    if unknown:
        raise ConfigError(f"unknown settings in [defaults]: {sorted(unknown)}")
    configs = []
    for name in parser.sections():
        kind, _, code = name.partition(" ")
        if kind != "country" or not code.strip():
            raise ConfigError(f"unexpected section [{name}]; use [country XX]")
        section = parser[name]
        extra = set(section) - set(DEFAULTS) - {"unemployment", "trends"}
        if extra:
            raise ConfigError(f"unknown settings in [{name}]: {sorted(extra)}")
        configs.append(_country(code.strip(), section, path.parent))
    if not configs:
        raise ConfigError(f"{path}: no [country XX] sections")
    codes = [c.country for c in configs]
    if len(set(codes)) != len(codes):
        raise ConfigError("duplicate country sections")
    return configs
