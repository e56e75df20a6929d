"""Command-line entry point: ``trendcast <stage> --config <path> --out <dir>``."""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from . import __version__
from .config import load_config
from .datasets import DEFAULT_SEED, synthetic_config_path, write_synthetic_dataset
from .exceptions import TrendcastError
from .pipeline import STAGES, run_pipeline

log = logging.getLogger("trendcast")

OUT_ENV = "TRENDCAST_OUT_DIR"
DEFAULT_OUT = "trendcast-out"


def _resolve_out(arg: str | None) -> Path:
    return Path(arg or os.environ.get(OUT_ENV) or DEFAULT_OUT)


def _resolve_config(arg: str) -> Path:
    return synthetic_config_path() if arg == "synthetic" else Path(arg)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trendcast",
        description="Unemployment nowcasting and forecasting with search-intensity data.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", required=True, help="config file, or 'synthetic' for the bundled data")
    common.add_argument("--out", help=f"output directory (default: ${OUT_ENV} or ./{DEFAULT_OUT})")
    common.add_argument("--country", action="append", help="only run this country code (repeatable)")
    common.add_argument("--workers", type=int, default=1, help="countries processed concurrently")
    common.add_argument("--seed", type=int, help="accepted for symmetry; only the montecarlo command uses it")
    common.add_argument("--quiet", action="store_true", help="do not print the report to stdout")

    for stage in STAGES + ("all",):
        sub.add_parser(stage, parents=[common], help=f"run the {stage} stage" if stage != "all" else "run every stage")

    mc = sub.add_parser("montecarlo", help="seeded size and power checks")
    mc.add_argument("--seed", type=int, default=0)
    mc.add_argument("--size-reps", type=int, default=2000)
    mc.add_argument("--power-reps", type=int, default=500)

    mk = sub.add_parser("make-synthetic", help="write the synthetic data set and its config")
    mk.add_argument("--out", required=True)
    mk.add_argument("--seed", type=int, default=DEFAULT_SEED)
    return parser


def _run_stages(args) -> int:
    configs = load_config(_resolve_config(args.config))
    if args.country:
        wanted = set(args.country)
        missing = wanted - {c.country for c in configs}
        if missing:
            raise TrendcastError(f"countries not in config: {sorted(missing)}")
        configs = [c for c in configs if c.country in wanted]
    stages = STAGES if args.command == "all" else (args.command,)
    report = run_pipeline(configs, stages=stages, workers=args.workers)
    out = _resolve_out(args.out)
    for path in report.write(out):
        log.info("wrote %s", path)
    if not args.quiet:
        sys.stdout.write(report.to_text())
    for err in report.errors:
        print(f"error: {err}", file=sys.stderr)
    return 0 if report.ok else 1


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        if args.command == "montecarlo":
            from .montecarlo import run_all

            for line in run_all(args.seed, args.size_reps, args.power_reps):
                print(line)
            return 0
        if args.command == "make-synthetic":
            print(write_synthetic_dataset(args.out, args.seed))
            return 0
        return _run_stages(args)
    except TrendcastError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
