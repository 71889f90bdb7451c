"""Run output writers."""

from .csv import (
    METRICS_HEADER,
    MetricRow,
    format_value,
    write_metrics,
    write_summary,
)
from .metadata import read_metadata, write_metadata

__all__ = [
    "METRICS_HEADER",
    "MetricRow",
    "format_value",
    "write_metrics",
    "write_summary",
    "read_metadata",
    "write_metadata",
]
