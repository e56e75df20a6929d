"""Per-country orchestration of the full workflow and report emission.

Stages run in the order stationarity, elasticity, nowcast, forecast,
causality. Each stage is independent given the loaded data, so a failing
stage is recorded against its country and the rest still run.
"""

from __future__ import annotations

import hashlib
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from . import __version__
from .config import CountryConfig
from .evaluation import DmResult, ForecastEvaluation, dm_test, evaluate
from .exceptions import DegenerateLossDifferential, StageError, TrendcastError, WindowOutOfRange
from .io import ingest_trends_csv, ingest_unemployment_csv
from .ols import RegressionFit, newey_west_bandwidth, ols_fit
from .reports import TestReport
from .series import (
    Month,
    MonthlySeries,
    aggregate_weekly_to_monthly,
    align,
    first_difference,
    log_transform,
)
from .stationarity import adf_test, kpss_test
from .var import (
    ModelSpec,
    NowcastFit,
    fit_nowcast,
    fit_var,
    forecast_rolling,
    granger_test,
    select_lag_order,
)

__all__ = ["STAGES", "CountryData", "CountryResult", "PipelineReport", "load_country", "run_country", "run_pipeline"]

STAGES = ("stationarity", "elasticity", "nowcast", "forecast", "causality")
REPORT_FORMAT = "trendcast-report/1"
UR, GI = "dUR", "dlogGI"

STATIONARITY_ROWS = (
    ("Unemployment", "ur"),
    ("- first difference", "ur_diff"),
    ("Google", "gi"),
    ("- logarithm", "gi_log"),
    ("- difference", "gi_diff"),
    ("- logarithmic difference", "gi_logdiff"),
)


@dataclass(frozen=True)
class CountryData:
    ur: MonthlySeries  # level, percent
    gi: MonthlySeries  # level, monthly index
    dropped_months: tuple

    @property
    def ur_diff(self) -> MonthlySeries:
        return first_difference(self.ur)

    @property
    def gi_log(self) -> MonthlySeries:
        return log_transform(self.gi)

    @property
    def gi_diff(self) -> MonthlySeries:
        return first_difference(self.gi)

    @property
    def gi_logdiff(self) -> MonthlySeries:
        return first_difference(log_transform(self.gi))

    def model_pair(self) -> tuple[MonthlySeries, MonthlySeries]:
        """(dUR, dlogGI) relabelled for the models."""
        return replace(self.ur_diff, id=UR), replace(self.gi_logdiff, id=GI)


def load_country(cfg: CountryConfig) -> CountryData:
    """Ingest both files, aggregate the weekly data and restrict to the sample."""
    ur = ingest_unemployment_csv(cfg.unemployment, id=f"{cfg.country}.unemployment")
    weekly = ingest_trends_csv(cfg.trends, id=f"{cfg.country}.google")
    gi = aggregate_weekly_to_monthly(weekly, id=f"{cfg.country}.google")
    dropped = list(gi.meta.get("dropped_edge_months", []))
    ur = ur.window(cfg.sample_start, cfg.sample_end)
    gi = gi.window(cfg.sample_start, cfg.sample_end)
    ur, gi = align(ur, gi)
    for m in range(cfg.sample_end - cfg.sample_start + 1):
        month = cfg.sample_start + m
        if not ur.start <= month <= ur.end:
            dropped.append(str(month))
    if ur.end < cfg.forecast_end:
        raise WindowOutOfRange(f"data end at {ur.end}, before forecast_end {cfg.forecast_end}")
    in_sample = [d for d in dropped if cfg.sample_start <= Month.parse(d) <= cfg.sample_end]
    return CountryData(ur=ur, gi=gi, dropped_months=tuple(sorted(set(in_sample))))


@dataclass(frozen=True)
class StationarityRow:
    label: str
    adf: TestReport
    kpss: TestReport


@dataclass(frozen=True)
class ElasticityResult:
    fit: RegressionFit
    coefficient: float
    hac_se: float
    hac_p_value: float
    ols_p_value: float
    bandwidth: int


@dataclass(frozen=True)
class ForecastResult:
    ar_records: tuple
    var_records: tuple
    ar_eval: ForecastEvaluation
    var_eval: ForecastEvaluation
    dm: DmResult | None
    dm_note: str
    ar_lags: int
    var_lags: int


@dataclass(frozen=True)
class CausalityResult:
    lags: int
    nobs: int
    google_to_unemployment: TestReport
    unemployment_to_google: TestReport


def stage_stationarity(data: CountryData, cfg: CountryConfig) -> tuple:
    rows = []
    for label, attr in STATIONARITY_ROWS:
        s = getattr(data, attr)
        rows.append(
            StationarityRow(
                label=label,
                adf=adf_test(s, cfg.adf_lags, cfg.adf_intercept, cfg.adf_trend),
                kpss=kpss_test(s, cfg.kpss_trend, cfg.kpss_bandwidth),
            )
        )
    return tuple(rows)


def stage_elasticity(data: CountryData, cfg: CountryConfig) -> ElasticityResult:
    dur, dgi = data.model_pair()
    X = np.column_stack([np.ones(len(dgi)), dgi.values])
    fit = ols_fit(X, dur.values, names=["const", GI])
    bw = newey_west_bandwidth(fit.n) if cfg.hac_bandwidth is None else cfg.hac_bandwidth
    fit = fit.with_hac(bw)
    return ElasticityResult(
        fit=fit,
        coefficient=float(fit.coefficients[1]),
        hac_se=float(fit.bse_hac[1]),
        hac_p_value=float(fit.pvalues_hac[1]),
        ols_p_value=float(fit.pvalues[1]),
        bandwidth=bw,
    )


def stage_nowcast(data: CountryData, cfg: CountryConfig) -> NowcastFit:
    dur, dgi = data.model_pair()
    return fit_nowcast(dur, dgi, cfg.publication_lag, cfg.nowcast_max_lag)


def _lag_orders(pair, cfg: CountryConfig) -> tuple[int, int]:
    if cfg.var_lag_selection == "fixed":
        return cfg.var_lags, cfg.var_lags
    train = [s.window(None, cfg.train_end) for s in pair]
    return select_lag_order(train[:1], cfg.var_lags), select_lag_order(train, cfg.var_lags)


def stage_forecast(data: CountryData, cfg: CountryConfig) -> ForecastResult:
    pair = data.model_pair()
    p_ar, p_var = _lag_orders(pair, cfg)
    ar = forecast_rolling(ModelSpec("ar", p_ar), pair, cfg.train_end, cfg.horizon, cfg.forecast_window)
    var = forecast_rolling(ModelSpec("var", p_var), pair, cfg.train_end, cfg.horizon, cfg.forecast_window)
    ar_eval, var_eval = evaluate(ar), evaluate(var)
    dm, note = None, ""
    try:
        dm = dm_test(
            ar_eval.errors,
            var_eval.errors,
            loss=cfg.dm_loss,
            h=1,
            bandwidth=cfg.dm_bandwidth,
            small_sample_correction=cfg.dm_small_sample,
        )
    except DegenerateLossDifferential as exc:
        note = f"degenerate: {exc}"
    return ForecastResult(
        ar_records=tuple(ar),
        var_records=tuple(var),
        ar_eval=ar_eval,
        var_eval=var_eval,
        dm=dm,
        dm_note=note,
        ar_lags=p_ar,
        var_lags=p_var,
    )


def stage_causality(data: CountryData, cfg: CountryConfig) -> CausalityResult:
    pair = data.model_pair()
    _, p = _lag_orders(pair, cfg)
    fit = fit_var(list(pair), p)
    return CausalityResult(
        lags=p,
        nobs=fit.nobs,
        google_to_unemployment=granger_test(fit, GI, UR),
        unemployment_to_google=granger_test(fit, UR, GI),
    )


_STAGE_FUNCS = {
    "stationarity": stage_stationarity,
    "elasticity": stage_elasticity,
    "nowcast": stage_nowcast,
    "forecast": stage_forecast,
    "causality": stage_causality,
}


@dataclass
class CountryResult:
    config: CountryConfig
    data: CountryData | None = None
    results: dict = field(default_factory=dict)
    errors: dict = field(default_factory=dict)

    @property
    def country(self) -> str:
        return self.config.country

    @property
    def ok(self) -> bool:
        return not self.errors


def run_country(cfg: CountryConfig, stages=STAGES) -> CountryResult:
    out = CountryResult(config=cfg)
    try:
        out.data = load_country(cfg)
    except (TrendcastError, OSError, ValueError) as exc:
        out.errors["load"] = StageError(cfg.country, "load", exc)
        return out
    for stage in STAGES:
        if stage not in stages:
            continue
        try:
            out.results[stage] = _STAGE_FUNCS[stage](out.data, cfg)
        except (TrendcastError, ValueError, np.linalg.LinAlgError) as exc:
            out.errors[stage] = StageError(cfg.country, stage, exc)
    return out


def run_pipeline(configs, stages=STAGES, workers: int = 1) -> "PipelineReport":
    """Run every country; results keep the config order whatever ``workers`` is."""
    configs = list(configs)
    unknown = set(stages) - set(STAGES)
    if unknown:
        raise ValueError(f"unknown stages {sorted(unknown)}")
    stages = tuple(s for s in STAGES if s in set(stages))
    if workers > 1 and len(configs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda c: run_country(c, stages), configs))
    else:
        results = [run_country(c, stages) for c in configs]
    return PipelineReport(countries=tuple(results), stages=stages)


# --------------------------------------------------------------------------
# report rendering

def fmt(x: float, digits: int = 4) -> str:
    """Fixed-point text; never prints a negative zero."""
    if x is None:
        return "NA"
    if isinstance(x, float) and not math.isfinite(x):
        return "inf" if x > 0 else ("-inf" if x < 0 else "nan")
    s = f"{x:.{digits}f}"
    if s.startswith("-") and float(s) == 0:
        s = s[1:]
    return s


def pct_change(new: float, old: float) -> float:
    return 100.0 * (new - old) / old if old else math.nan


def _file_digest(path: Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


@dataclass
class PipelineReport:
    countries: tuple
    stages: tuple

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.countries)

    @property
    def errors(self) -> list[StageError]:
        return [e for c in self.countries for e in c.errors.values()]

    def fingerprint(self) -> str:
        h = hashlib.sha256()
        h.update(f"{REPORT_FORMAT}|{__version__}|{','.join(self.stages)}\n".encode())
        for c in self.countries:
            h.update(json.dumps(c.config.resolved(), sort_keys=True).encode())
            for p in (c.config.unemployment, c.config.trends):
                h.update((_file_digest(p) if Path(p).is_file() else "missing").encode())
        return h.hexdigest()

    def result(self, country: str, stage: str):
        for c in self.countries:
            if c.country == country:
                return c.results.get(stage)
        raise KeyError(country)

    # ---- text
    def to_text(self) -> str:
        lines = [
            "trendcast report",
            f"format = {REPORT_FORMAT}",
            f"version = {__version__}",
            f"fingerprint = sha256:{self.fingerprint()}",
            f"countries = {' '.join(c.country for c in self.countries)}",
            f"stages = {' '.join(self.stages)}",
            "",
        ]
        codes = [c.country for c in self.countries]
        if "stationarity" in self.stages:
            lines += self._table_stationarity(codes)
        if "elasticity" in self.stages:
            lines += self._table_elasticity(codes)
        if "nowcast" in self.stages:
            lines += self._table_nowcast(codes)
        if "forecast" in self.stages or "causality" in self.stages:
            lines += self._table_forecast(codes)
        for c in self.countries:
            lines += self._country_section(c)
        return "\n".join(lines).rstrip("\n") + "\n"

    def _get(self, code, stage):
        for c in self.countries:
            if c.country == code:
                return c.results.get(stage)
        return None

    @staticmethod
    def _row(label, cells, width=14):
        return f"{label:<30}" + "".join(f"{cell:>{width}}" for cell in cells)

    def _header(self, title, codes):
        return [f"== {title} ==", self._row("", codes), "-" * (30 + 14 * len(codes))]

    def _table_stationarity(self, codes):
        out = self._header("Stationarity testing", codes)
        for test in ("adf", "kpss"):
            out.append(f"{test.upper()} test")
            for i, (label, _) in enumerate(STATIONARITY_ROWS):
                cells = []
                for code in codes:
                    rows = self._get(code, "stationarity")
                    if rows is None:
                        cells.append("NA")
                        continue
                    rep = getattr(rows[i], test)
                    cells.append(fmt(rep.statistic) + (rep.stars or "").ljust(3))
                out.append(self._row(label, cells))
        out.append("stars: * 10%, ** 5%, *** 1%")
        out.append("")
        return out

    def _table_elasticity(self, codes):
        out = self._header("Basic relationship: dUR on dlogGI with HAC errors", codes)
        res = [self._get(code, "elasticity") for code in codes]
        out.append(self._row("elasticity", [fmt(r.coefficient) if r else "NA" for r in res]))
        out.append(self._row("HAC std. error", [fmt(r.hac_se) if r else "NA" for r in res]))
        out.append(self._row("HAC p-value", [fmt(r.hac_p_value) if r else "NA" for r in res]))
        out.append(self._row("HAC bandwidth", [str(r.bandwidth) if r else "NA" for r in res]))
        out.append(self._row("observations", [str(r.fit.n) if r else "NA" for r in res]))
        out.append("")
        return out

    def _table_nowcast(self, codes):
        out = self._header("Nowcasting summary", codes)
        res = [self._get(code, "nowcast") for code in codes]
        out.append(self._row("adj. R2 without Google", [fmt(r.adj_r2_without) if r else "NA" for r in res]))
        out.append(self._row("adj. R2 with Google", [fmt(r.adj_r2_with) if r else "NA" for r in res]))
        out.append(self._row("Google insignificant F-stat", [fmt(r.google_joint_F.statistic) if r else "NA" for r in res]))
        out.append(self._row("Google insignificant p-value", [fmt(r.google_joint_F.p_value) if r else "NA" for r in res]))
        out.append("")
        return out

    def _table_forecast(self, codes):
        out = self._header("Forecasting and causality summary", codes)
        fc = [self._get(code, "forecast") for code in codes]
        if "forecast" in self.stages:
            for metric in ("rmse", "mae"):
                ar = [getattr(r.ar_eval, metric) if r else None for r in fc]
                var = [getattr(r.var_eval, metric) if r else None for r in fc]
                out.append(self._row(f"{metric.upper()} no Google", [fmt(v) for v in ar]))
                out.append(self._row(f"{metric.upper()} Google", [fmt(v) for v in var]))
                out.append(
                    self._row(
                        f"{metric.upper()} change",
                        [fmt(pct_change(b, a), 2) + "%" if a is not None else "NA" for a, b in zip(ar, var)],
                    )
                )
            out.append(self._row("DM test statistic", [fmt(r.dm.statistic) if r and r.dm else "NA" for r in fc]))
            out.append(self._row("DM p-value (one-sided)", [fmt(r.dm.p_value_greater) if r and r.dm else "NA" for r in fc]))
            out.append(self._row("DM p-value (two-sided)", [fmt(r.dm.p_value_two_sided) if r and r.dm else "NA" for r in fc]))
        if "causality" in self.stages:
            ca = [self._get(code, "causality") for code in codes]
            for attr, label in (
                ("google_to_unemployment", "Google -> Unemployment"),
                ("unemployment_to_google", "Unemployment -> Google"),
            ):
                out.append(self._row(f"{label} F", [fmt(getattr(r, attr).statistic) if r else "NA" for r in ca]))
                out.append(self._row(f"{label} p", [fmt(getattr(r, attr).p_value) if r else "NA" for r in ca]))
        out.append("")
        return out

    def _country_section(self, c: CountryResult):
        out = [f"[country {c.country}]"]
        for key, value in c.config.resolved().items():
            if key == "country":
                continue
            out.append(f"config.{key} = {value}")
        if c.data is not None:
            out.append(f"sample = {c.data.ur.start}..{c.data.ur.end}")
            out.append(f"observations = {len(c.data.ur)}")
            out.append(f"dropped_months = {' '.join(c.data.dropped_months) or '(none)'}")
        r = c.results
        if "stationarity" in r:
            adf, kpss = r["stationarity"][0].adf, r["stationarity"][0].kpss
            out.append(
                f"stationarity.adf_spec = intercept={str(adf.spec['intercept']).lower()} "
                f"trend={str(adf.spec['trend']).lower()} lags={adf.spec['lags']}"
            )
            out.append(
                f"stationarity.kpss_spec = trend={str(kpss.spec['trend']).lower()} "
                f"bandwidth={kpss.spec['bandwidth']}"
            )
            for row in r["stationarity"]:
                key = row.label.strip("- ").replace(" ", "_").lower()
                out.append(f"stationarity.{key}.adf = {fmt(row.adf.statistic)} n={row.adf.n} p{row.adf.p_bracket}")
                out.append(f"stationarity.{key}.kpss = {fmt(row.kpss.statistic)} n={row.kpss.n} p{row.kpss.p_bracket}")
        if "elasticity" in r:
            e = r["elasticity"]
            out.append(f"elasticity.coefficient = {fmt(e.coefficient)}")
            out.append(f"elasticity.intercept = {fmt(float(e.fit.coefficients[0]))}")
            out.append(f"elasticity.hac_se = {fmt(e.hac_se)}")
            out.append(f"elasticity.hac_p_value = {fmt(e.hac_p_value)}")
            out.append(f"elasticity.ols_p_value = {fmt(e.ols_p_value)}")
            out.append(f"elasticity.hac_bandwidth = {e.bandwidth}")
            out.append(f"elasticity.r2 = {fmt(e.fit.r2)}")
            out.append(f"elasticity.n = {e.fit.n}")
        if "nowcast" in r:
            nw = r["nowcast"]
            out.append(f"nowcast.adj_r2_without = {fmt(nw.adj_r2_without)}")
            out.append(f"nowcast.adj_r2_with = {fmt(nw.adj_r2_with)}")
            out.append(f"nowcast.f_stat = {fmt(nw.google_joint_F.statistic)}")
            out.append(f"nowcast.f_df = {nw.google_joint_F.df[0]},{nw.google_joint_F.df[1]}")
            out.append(f"nowcast.p_value = {fmt(nw.google_joint_F.p_value)}")
            out.append(f"nowcast.n = {nw.fit.n}")
            out.append(f"nowcast.rows = {nw.rows[0]}..{nw.rows[-1]}")
        if "forecast" in r:
            f = r["forecast"]
            out.append(f"forecast.window = {f.ar_records[0].target}..{f.ar_records[-1].target}")
            out.append(f"forecast.ar_lags = {f.ar_lags}")
            out.append(f"forecast.var_lags = {f.var_lags}")
            out.append(f"forecast.rmse_ar = {fmt(f.ar_eval.rmse)}")
            out.append(f"forecast.rmse_var = {fmt(f.var_eval.rmse)}")
            out.append(f"forecast.mae_ar = {fmt(f.ar_eval.mae)}")
            out.append(f"forecast.mae_var = {fmt(f.var_eval.mae)}")
            if f.dm is not None:
                out.append(f"forecast.dm_loss = {f.dm.loss}")
                out.append(f"forecast.dm_statistic = {fmt(f.dm.statistic)}")
                out.append(f"forecast.dm_p_one_sided = {fmt(f.dm.p_value_greater)}")
                out.append(f"forecast.dm_p_two_sided = {fmt(f.dm.p_value_two_sided)}")
                out.append(f"forecast.dm_bandwidth = {f.dm.bandwidth}")
            else:
                out.append(f"forecast.dm_statistic = NA ({f.dm_note})")
        if "causality" in r:
            ca = r["causality"]
            out.append(f"causality.lags = {ca.lags}")
            out.append(f"causality.n = {ca.nobs}")
            for attr in ("google_to_unemployment", "unemployment_to_google"):
                rep = getattr(ca, attr)
                out.append(f"causality.{attr}.f_stat = {fmt(rep.statistic)}")
                out.append(f"causality.{attr}.df = {rep.df[0]},{rep.df[1]}")
                out.append(f"causality.{attr}.p_value = {fmt(rep.p_value)}")
        for stage, err in c.errors.items():
            out.append(f"error.{stage} = {type(err.error).__name__}: {err.error}")
        out.append("")
        return out

    # ---- json
    def to_dict(self) -> dict:
        doc = {
            "format": REPORT_FORMAT,
            "version": __version__,
            "fingerprint": self.fingerprint(),
            "stages": list(self.stages),
            "countries": {},
        }
        for c in self.countries:
            doc["countries"][c.country] = _country_dict(c)
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, allow_nan=True) + "\n"

    # ---- files
    def plot_tables(self) -> dict:
        """Delimiter-separated plot data keyed by file name."""
        tables = {}
        loaded = [c for c in self.countries if c.data is not None]
        if not loaded:
            return tables
        for name, attr in (
            ("figure_unemployment.csv", "ur"),
            ("figure_google.csv", "gi"),
            ("figure_unemployment_diff.csv", "ur_diff"),
            ("figure_google_logdiff.csv", "gi_logdiff"),
        ):
            series = {c.country: getattr(c.data, attr) for c in loaded}
            tables[name] = _wide_csv(series)
        rows = ["country,model,origin,target,forecast,actual"]
        for c in loaded:
            fr = c.results.get("forecast")
            if fr is None:
                continue
            for model, recs in (("AR", fr.ar_records), ("VAR", fr.var_records)):
                for rec in recs:
                    rows.append(f"{c.country},{model},{rec.origin},{rec.target},{rec.forecast:.10f},{rec.actual:.10f}")
        if len(rows) > 1:
            tables["forecasts.csv"] = "\n".join(rows) + "\n"
        return tables

    def write(self, out_dir) -> list[Path]:
        out_dir = Path(out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        written = []
        for name, text in [("report.txt", self.to_text()), ("report.json", self.to_json())] + sorted(
            self.plot_tables().items()
        ):
            path = out_dir / name
            path.write_text(text, encoding="utf-8", newline="\n")
            written.append(path)
        return written


def _wide_csv(series: dict) -> str:
    lo = min(s.start for s in series.values())
    hi = max(s.end for s in series.values())
    codes = list(series)
    lines = ["month," + ",".join(codes)]
    for k in range(hi - lo + 1):
        month = lo + k
        cells = []
        for code in codes:
            s = series[code]
            cells.append(f"{s[month]:.10f}" if s.start <= month <= s.end else "")
        lines.append(f"{month}," + ",".join(cells))
    return "\n".join(lines) + "\n"


def _report_dict(rep: TestReport) -> dict:
    return {
        "statistic": rep.statistic,
        "p_value": rep.p_value,
        "p_bracket": rep.p_bracket,
        "critical_values": {f"{k:.2f}": v for k, v in sorted(rep.critical_values.items())},
        "df": list(rep.df) if rep.df else None,
        "n": rep.n,
        "spec": {k: v for k, v in rep.spec.items()},
        "flags": list(rep.flags),
    }


def _country_dict(c: CountryResult) -> dict:
    d = {"config": c.config.resolved(), "errors": {k: str(v) for k, v in c.errors.items()}}
    if c.data is not None:
        d["sample"] = {
            "start": str(c.data.ur.start),
            "end": str(c.data.ur.end),
            "dropped_months": list(c.data.dropped_months),
        }
    r = c.results
    if "stationarity" in r:
        d["stationarity"] = [
            {"row": row.label, "adf": _report_dict(row.adf), "kpss": _report_dict(row.kpss)}
            for row in r["stationarity"]
        ]
    if "elasticity" in r:
        e = r["elasticity"]
        d["elasticity"] = {
            "coefficient": e.coefficient,
            "intercept": float(e.fit.coefficients[0]),
            "hac_se": e.hac_se,
            "hac_p_value": e.hac_p_value,
            "ols_p_value": e.ols_p_value,
            "hac_bandwidth": e.bandwidth,
            "r2": e.fit.r2,
            "n": e.fit.n,
        }
    if "nowcast" in r:
        nw = r["nowcast"]
        d["nowcast"] = {
            "adj_r2_without": nw.adj_r2_without,
            "adj_r2_with": nw.adj_r2_with,
            "google_joint_F": _report_dict(nw.google_joint_F),
            "n": nw.fit.n,
            "first_row": str(nw.rows[0]),
            "last_row": str(nw.rows[-1]),
        }
    if "forecast" in r:
        f = r["forecast"]
        d["forecast"] = {
            "ar_lags": f.ar_lags,
            "var_lags": f.var_lags,
            "rmse_ar": f.ar_eval.rmse,
            "rmse_var": f.var_eval.rmse,
            "rmse_change_pct": pct_change(f.var_eval.rmse, f.ar_eval.rmse),
            "mae_ar": f.ar_eval.mae,
            "mae_var": f.var_eval.mae,
            "mae_change_pct": pct_change(f.var_eval.mae, f.ar_eval.mae),
            "dm": None
            if f.dm is None
            else {
                "statistic": f.dm.statistic,
                "p_value_one_sided": f.dm.p_value_greater,
                "p_value_two_sided": f.dm.p_value_two_sided,
                "loss": f.dm.loss,
                "bandwidth": f.dm.bandwidth,
                "lrv": f.dm.lrv_estimate,
                "T": f.dm.T,
            },
            "dm_note": f.dm_note,
            "records": [
                {
                    "model": model,
                    "origin": str(rec.origin),
                    "target": str(rec.target),
                    "forecast": rec.forecast,
                    "actual": rec.actual,
                }
                for model, recs in (("AR", f.ar_records), ("VAR", f.var_records))
                for rec in recs
            ],
        }
    if "causality" in r:
        ca = r["causality"]
        d["causality"] = {
            "lags": ca.lags,
            "n": ca.nobs,
            "google_to_unemployment": _report_dict(ca.google_to_unemployment),
            "unemployment_to_google": _report_dict(ca.unemployment_to_google),
        }
    return d
