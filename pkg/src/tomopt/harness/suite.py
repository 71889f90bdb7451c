"""Problems x optimizers x seeds comparisons."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterable, List, Optional, Sequence

import pandas as pd

from ..core.errors import EmptyInput
from ..optim.config import OptimizerConfig
from ..record.csv import write_summary
from .experiment import RunRecord, SuiteConfig
from .runner import run_experiment, save_records
from .summary import default_epochs, summarize

logger = logging.getLogger(__name__)

__all__ = ["SuiteResult", "compare_suite", "run_suite"]


@dataclass
class SuiteResult:
    records: List[RunRecord]
    summary: pd.DataFrame

    @property
    def diverged(self) -> List[RunRecord]:
        return [r for r in self.records if r.diverged]

    def final_epoch_table(self) -> pd.DataFrame:
        """Rows of the summary at each dataset's last recorded epoch."""
        last = self.summary.groupby("dataset")["epoch"].transform("max")
        return self.summary[self.summary["epoch"] == last].reset_index(
            drop=True
        )


def _summary_epochs(records: Sequence[RunRecord]) -> List[int]:
    final = max(r.epochs for r in records)
    return sorted({e for e in default_epochs(records) if e <= final} | {final})


def compare_suite(
    problem_set: Sequence[Any],
    optimizer_set: Sequence[OptimizerConfig],
    seeds: Iterable[int],
    output_dir: Optional[Path] = None,
    **template: Any,
) -> SuiteResult:
    """Run every (problem, optimizer) pair over *seeds*.

    ``problem_set`` entries are bundled dataset names, CSV paths or
    synthetic problem mappings. Remaining experiment settings (epochs,
    batch_size, model, ...) go in ``template``. With ``output_dir`` each
    run's CSV and the summary CSV are written there.
    """
    if not problem_set or not optimizer_set:
        raise EmptyInput("A suite needs at least one problem and optimizer")
    template = dict(template, seeds=tuple(seeds))
    if output_dir is not None:
        template["output_dir"] = output_dir
    suite = SuiteConfig(tuple(problem_set), tuple(optimizer_set), template)
    experiments = suite.experiments()

    records: List[RunRecord] = []
    for i, experiment in enumerate(experiments, 1):
        logger.info(
            "Suite %d/%d: %s with %s", i, len(experiments),
            experiment.label, experiment.optimizer.kind.value,
        )
        records.extend(run_experiment(experiment))

    summary = summarize(records, _summary_epochs(records))
    if output_dir is not None:
        save_records(records, output_dir)
        write_summary(Path(output_dir) / "summary.csv", summary)
    return SuiteResult(records, summary)


def run_suite(
    config: SuiteConfig, output_dir: Optional[Path] = None
) -> SuiteResult:
    """``compare_suite`` driven by a loaded suite file."""
    template = dict(config.template)
    seeds = template.pop("seeds", (0,))
    if output_dir is None:
        output_dir = template.pop("output_dir", None)
    else:
        template.pop("output_dir", None)
    return compare_suite(
        config.problems, config.optimizers, seeds,
        output_dir=output_dir, **template,
    )
