"""Bundled synthetic data set: four pseudo-countries, 2004-01..2013-12.

Each country pairs a monthly unemployment rate with a weekly search index
drawn from :class:`~trendcast.simulate.PairProcess`. Country ``BB`` has no
coupling between the two series; the others are coupled in both directions.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

import numpy as np

from .io import write_trends_csv, write_unemployment_csv
from .series import Month, MonthlySeries
from .simulate import PairProcess, rng_for, weekly_from_monthly

DEFAULT_SEED = 20140101
START = Month(2004, 1)
N_MONTHS = 120
UR_SCALE = 0.08  # percentage points per standardized unit
GI_SCALE = 0.08  # log points per standardized unit

COUNTRIES = {
    "AA": dict(process=PairProcess(own_ar=0.3, gi_now=0.25, gi_lag=0.6, ur_to_gi=0.35, seasonal_amp=1.0), ur0=8.0),
    "BB": dict(process=PairProcess(own_ar=0.3, seasonal_amp=1.0), ur0=6.0),
    "CC": dict(process=PairProcess(own_ar=0.2, gi_now=0.2, gi_lag=0.8, ur_to_gi=0.35, seasonal_amp=0.6), ur0=18.0),
    "DD": dict(process=PairProcess(own_ar=0.3, gi_now=0.3, gi_lag=0.5, ur_to_gi=0.4, seasonal_amp=0.8), ur0=15.0),
}

_CONFIG_TEMPLATE = """\
# Synthetic pseudo-countries shaped like the monthly 2004-2013 sample.
# Regenerate with: trendcast make-synthetic --out <dir> --seed {seed}
[defaults]
sample_start = 2004-01
sample_end = 2013-12
train_end = 2012-12
forecast_end = 2013-12
adf_lags = 3
var_lags = 12
publication_lag = 3
"""


def synthetic_config_path() -> Path:
    """Path of the bundled synthetic config file."""
    return Path(str(resources.files("trendcast") / "data" / "synthetic" / "config.ini"))


def synthetic_levels(code: str, seed: int = DEFAULT_SEED) -> tuple[np.ndarray, np.ndarray]:
    """Monthly (unemployment %, search index) levels for one pseudo-country."""
    spec = COUNTRIES[code]
    rng = rng_for(seed, list(COUNTRIES).index(code))
    dur, dgi = spec["process"].simulate(N_MONTHS - 1, rng)
    ur = spec["ur0"] + np.concatenate([[0.0], np.cumsum(UR_SCALE * dur)])
    ur = ur - min(ur.min() - 2.0, 0.0)
    log_gi = np.concatenate([[0.0], np.cumsum(GI_SCALE * dgi)])
    # the index is rescaled so its peak sits at 90, as search indices are
    gi = 90.0 * np.exp(log_gi - log_gi.max())
    return ur, gi


def write_synthetic_dataset(out_dir, seed: int = DEFAULT_SEED) -> Path:
    """Write CSV files and a config for every pseudo-country; returns the config path."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    sections = [_CONFIG_TEMPLATE.format(seed=seed)]
    for i, code in enumerate(COUNTRIES):
        ur, gi = synthetic_levels(code, seed)
        ur_series = MonthlySeries(f"{code}.unemployment", START, np.round(ur, 2))
        write_unemployment_csv(ur_series, out_dir / f"{code.lower()}_unemployment.csv")
        weeks, values = weekly_from_monthly(gi, START, rng_for(seed, 100 + i))
        write_trends_csv(weeks, values, out_dir / f"{code.lower()}_trends.csv")
        sections.append(
            f"\n[country {code}]\n"
            f"unemployment = {code.lower()}_unemployment.csv\n"
            f"trends = {code.lower()}_trends.csv\n"
            f"search_terms = synthetic\n"
        )
    path = out_dir / "config.ini"
    path.write_text("".join(sections), encoding="utf-8", newline="\n")
    return path
