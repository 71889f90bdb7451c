"""Experiment runner, summaries and comparison suites."""

from .experiment import (
    ExperimentConfig,
    ModelSpec,
    RunRecord,
    SuiteConfig,
    experiment_config_from_mapping,
    load_experiment_config,
    load_suite_config,
    optimizer_label,
)
from .runner import make_run_id, run_experiment, save_records
from .suite import SuiteResult, compare_suite, run_suite
from .summary import format_summary, summarize

__all__ = [
    "ExperimentConfig",
    "ModelSpec",
    "RunRecord",
    "SuiteConfig",
    "experiment_config_from_mapping",
    "load_experiment_config",
    "load_suite_config",
    "optimizer_label",
    "make_run_id",
    "run_experiment",
    "save_records",
    "SuiteResult",
    "compare_suite",
    "run_suite",
    "format_summary",
    "summarize",
]
