"""Metrics and summary CSV writers."""

from __future__ import annotations

import csv
import logging
from pathlib import Path
from typing import Iterable, NamedTuple

import pandas as pd

from ..core import settings

__all__ = ["METRICS_HEADER", "MetricRow", "format_value", "write_metrics",
           "write_summary"]

logger = logging.getLogger(__name__)

METRICS_HEADER = (
    "run_id",
    "optimizer",
    "dataset",
    "seed",
    "epoch",
    "split",
    "metric",
    "value",
)


class MetricRow(NamedTuple):
    run_id: str
    optimizer: str
    dataset: str
    seed: int
    epoch: int
    split: str
    metric: str
    value: float


def format_value(value: float, digits: int = settings.METRIC_DIGITS) -> str:
    return f"{float(value):.{digits}g}"


def write_metrics(path: Path, rows: Iterable[MetricRow]) -> Path:
    """Write ``rows`` to *path*, replacing it.

    Parameters
    ----------
    path:
        Destination CSV path; parent directories are created.
    rows:
        Metric rows in the order they should appear.

    Values carry 17 significant digits and lines end in a bare LF, so a
    rerun of the same seeded run reproduces the file byte for byte.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with path.open("w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(METRICS_HEADER)
        for row in rows:
            writer.writerow([
                row.run_id,
                row.optimizer,
                row.dataset,
                row.seed,
                row.epoch,
                row.split,
                row.metric,
                format_value(row.value),
            ])
            count += 1
    logger.debug("Wrote %d metric rows to %s", count, path)
    return path


def write_summary(path: Path, table: pd.DataFrame) -> Path:
    """Write a summary table (see ``harness.summarize``) as CSV."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    table.to_csv(
        path,
        index=False,
        lineterminator="\n",
        float_format=f"%.{settings.METRIC_DIGITS}g",
    )
    return path
