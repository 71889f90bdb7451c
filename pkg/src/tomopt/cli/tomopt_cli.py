# -*- coding: utf-8 -*-
"""
Command-line entry point for tomopt.

Subcommands:

1. train        run one experiment file, write per-run CSVs
2. suite        run a problems x optimizers comparison file
3. verify-bias  print the forecast bias-correction report
4. forecast     smooth a CSV column and write one-step forecasts
5. gradcheck    backprop vs finite differences on random networks
6. fetch-data   download and build the regression dataset CSVs

Log lines go to stderr so stdout carries only the command's output.

Exit codes: 0 success, 1 usage or config error, 2 data error,
3 a run diverged.
"""

import argparse
import logging
import sys
from pathlib import Path

import pandas as pd
import requests

from ..core import settings
from ..core.errors import (
    DivergenceDetected,
    InvalidConfig,
    InvalidParam,
    KindMismatch,
    MissingColumn,
    ParseError,
    ShapeMismatch,
    TooFewRows,
    EmptySeries,
    SeriesTooShort,
)
from ..data.fetch import fetch_dataset
from ..data.lookup import BUNDLED
from ..harness import (
    format_summary,
    load_experiment_config,
    load_suite_config,
    run_experiment,
    run_suite,
    save_records,
    summarize,
)
from ..harness.summary import default_epochs
from ..model.gradcheck import gradient_check_suite
from ..model.network import LossKind
from ..record.csv import write_summary
from ..smoothing import (
    SmoothingParams,
    as_series,
    holt,
    holt_winters_additive,
    one_step_errors,
    ses_levels,
)
from ..verify import render_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_DATA = 2
EXIT_DIVERGED = 3

CONFIG_ERRORS = (InvalidConfig, InvalidParam, KindMismatch)
DATA_ERRORS = (
    FileNotFoundError,
    ParseError,
    MissingColumn,
    ShapeMismatch,
    TooFewRows,
    EmptySeries,
    SeriesTooShort,
    requests.RequestException,
)


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def parse_args(argv=None):
    """
    Parse command-line arguments.

    Returns:
        argparse.Namespace: Parsed arguments
    """
    parser = _Parser(
        prog="tomopt",
        description="Tom and adaptive optimizers on desk-scale problems",
    )
    parser.add_argument(
        "--log-level", default="INFO",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
    )
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    train = sub.add_parser("train", help="Run one experiment file")
    train.add_argument("--config", required=True, type=Path,
                       help="Path to experiment YAML file")
    train.add_argument("--output-dir", type=Path,
                       help="Override the file's output_dir")

    suite = sub.add_parser("suite", help="Run a comparison suite file")
    suite.add_argument("--config", required=True, type=Path,
                       help="Path to suite YAML file")
    suite.add_argument("--output-dir", type=Path)

    bias = sub.add_parser("verify-bias", help="Forecast bias report")
    bias.add_argument("--beta1", type=float, default=settings.DEFAULT_BETA1)
    bias.add_argument("--beta2", type=float,
                      default=settings.DEFAULT_BETA2_TOM)
    bias.add_argument("--t", type=int, nargs="+", dest="steps",
                      default=list(settings.REPORT_STEPS))
    bias.add_argument("--monte-carlo", action="store_true",
                      help="Append a Monte Carlo unbiasedness check")
    bias.add_argument("--mc-t", type=int, default=20)
    bias.add_argument("--trials", type=int, default=100_000)
    bias.add_argument("--seed", type=int, default=0)

    fc = sub.add_parser("forecast", help="Smooth one CSV column")
    fc.add_argument("--csv", required=True, type=Path)
    fc.add_argument("--column", required=True)
    fc.add_argument("--method", default="holt",
                    choices=["ses", "holt", "holt-winters"])
    fc.add_argument("--alpha", type=float, default=0.5)
    fc.add_argument("--beta", type=float, default=0.5)
    fc.add_argument("--gamma", type=float, default=0.5)
    fc.add_argument("--cycle", type=int, default=12)
    fc.add_argument("--out", type=Path,
                    help="Write forecasts CSV here instead of stdout")

    grad = sub.add_parser("gradcheck", help="Backprop gradient check")
    grad.add_argument("--cases", type=int, default=20)
    grad.add_argument("--seed", type=int, default=0)
    grad.add_argument("--loss", choices=["mse", "cross_entropy", "both"],
                      default="both")

    fetch = sub.add_parser("fetch-data", help="Build the dataset CSVs")
    fetch.add_argument("--name", nargs="+", choices=sorted(BUNDLED),
                       default=sorted(BUNDLED))
    fetch.add_argument("--dest", type=Path,
                       help="Directory to write to (default: data.dir)")
    fetch.add_argument("--force", action="store_true",
                       help="Rebuild files that already exist")
    return parser.parse_args(argv)


def _finish_runs(records, output_dir: Path) -> int:
    save_records(records, output_dir)
    if any(r.diverged for r in records):
        logger.error(
            "%d of %d runs diverged",
            sum(r.diverged for r in records), len(records),
        )
        return EXIT_DIVERGED
    return EXIT_OK


def cmd_train(args) -> int:
    config = load_experiment_config(args.config)
    output_dir = args.output_dir or config.output_dir
    records = run_experiment(config)
    epochs = [e for e in default_epochs(records) if e <= config.epochs]
    table = summarize(records, [*epochs, config.epochs])
    write_summary(output_dir / "summary.csv", table)
    sys.stdout.write(format_summary(table) + "\n")
    return _finish_runs(records, output_dir)


def cmd_suite(args) -> int:
    config = load_suite_config(args.config)
    result = run_suite(config, output_dir=args.output_dir)
    sys.stdout.write(format_summary(result.final_epoch_table()) + "\n")
    return EXIT_DIVERGED if result.diverged else EXIT_OK


def cmd_verify_bias(args) -> int:
    monte_carlo = None
    if args.monte_carlo:
        monte_carlo = {
            "mean": 1.0, "stddev": 0.5, "t": args.mc_t,
            "trials": args.trials, "seed": args.seed,
        }
    sys.stdout.write(
        render_report(args.beta1, args.beta2, args.steps, monte_carlo)
    )
    return EXIT_OK


def _read_series(path: Path, column: str):
    if not path.exists():
        raise FileNotFoundError(f"No such file: {path}")
    frame = pd.read_csv(path, dtype=str, keep_default_na=False)
    if column not in frame.columns:
        raise MissingColumn(f"Column {column!r} not in {path.name}")
    raw = frame[column].str.strip()
    values = pd.to_numeric(raw, errors="coerce")
    if values.isna().any():
        pos = int(values.isna().to_numpy().argmax())
        raise ParseError(pos + 1, column, raw.iloc[pos])
    return as_series(values.to_numpy(dtype=float))


def cmd_forecast(args) -> int:
    series = _read_series(args.csv, args.column)
    if args.method == "ses":
        forecasts = ses_levels(series, args.alpha, series[0])
    elif args.method == "holt":
        forecasts = holt(series, args.alpha, args.beta).forecasts
    else:
        params = SmoothingParams(args.alpha, args.beta, args.gamma,
                                 args.cycle)
        forecasts = holt_winters_additive(series, params).forecasts
    errors = one_step_errors(series, forecasts)
    logger.info(
        "%s on %s: one-step MAE %.6g over %d points",
        args.method, args.column, abs(errors).mean() if errors.size else 0.0,
        series.size,
    )
    out = pd.DataFrame({
        "t": range(1, series.size + 1),
        "y": series,
        "forecast_next": forecasts,
    })
    if args.out:
        write_summary(args.out, out)
    else:
        sys.stdout.write(out.to_csv(index=False, lineterminator="\n"))
    return EXIT_OK


def cmd_gradcheck(args) -> int:
    kinds = (
        [LossKind.MSE, LossKind.CROSS_ENTROPY] if args.loss == "both"
        else [LossKind.parse(args.loss)]
    )
    ok = True
    for kind in kinds:
        result = gradient_check_suite(kind, args.cases, args.seed)
        sys.stdout.write(
            f"{kind.value}: max error {result.max_error:.3e} over "
            f"{result.checked} coordinates ({result.skipped} at kinks) "
            f"{'PASS' if result.passed() else 'FAIL'}\n"
        )
        ok = ok and result.passed()
    return EXIT_OK if ok else EXIT_CONFIG


def cmd_fetch_data(args) -> int:
    for name in args.name:
        path = fetch_dataset(name, dest=args.dest, force=args.force)
        sys.stdout.write(f"{name}: {path}\n")
    return EXIT_OK


COMMANDS = {
    "train": cmd_train,
    "suite": cmd_suite,
    "verify-bias": cmd_verify_bias,
    "forecast": cmd_forecast,
    "gradcheck": cmd_gradcheck,
    "fetch-data": cmd_fetch_data,
}


def main(argv=None) -> int:
    """
    Dispatch a subcommand and map failures to exit codes.
    """
    args = parse_args(argv)

    # Set up logging
    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(asctime)s %(levelname)s %(message)s",
        stream=sys.stderr,
    )

    try:
        return COMMANDS[args.command](args)
    except DivergenceDetected as exc:
        logger.error("%s", exc)
        return EXIT_DIVERGED
    except CONFIG_ERRORS as exc:
        logger.error("Config error: %s", exc)
        return EXIT_CONFIG
    except DATA_ERRORS as exc:
        logger.error("Data error: %s", exc)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
