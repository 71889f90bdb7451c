"""Across-seed summary tables."""

from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence

import pandas as pd

from ..core import settings
from ..core.errors import EmptyInput
from .experiment import RunRecord, select_metric

__all__ = ["summarize", "default_epochs", "format_summary"]

SUMMARY_COLUMNS = [
    "dataset", "optimizer", "split", "metric", "epoch",
    "mean", "std", "n", "best",
]


def default_epochs(records: Sequence[RunRecord]) -> tuple:
    """Regression checkpoints, or the shorter classification set."""
    if any("accuracy" in r.metrics for r in records):
        return settings.CLASSIFICATION_EPOCHS
    return settings.REGRESSION_EPOCHS


def _headline_metrics(records: Sequence[RunRecord]) -> Dict[str, str]:
    by_dataset: Dict[str, List[RunRecord]] = {}
    for record in records:
        by_dataset.setdefault(record.dataset, []).append(record)
    return {name: select_metric(group) for name, group in by_dataset.items()}


def summarize(
    records: Sequence[RunRecord],
    epochs_of_interest: Optional[Iterable[int]] = None,
    metric: Optional[str] = None,
    split: str = "test",
) -> pd.DataFrame:
    """Mean and sample std (n - 1) per (dataset, optimizer, epoch).

    Without ``metric`` each dataset reports its own headline metric, so
    objective problems (loss) and regression data (mse) share a table.
    A single seed reports std 0. ``best`` marks the lowest mean per
    (dataset, epoch), or the highest for accuracy. Epochs no run reached
    are left out.
    """
    records = list(records)
    if not records:
        raise EmptyInput("Nothing to summarize")
    if epochs_of_interest is None:
        epochs_of_interest = default_epochs(records)
    wanted = set(int(e) for e in epochs_of_interest)

    rows = pd.DataFrame(
        [row._asdict() for record in records for row in record.rows]
    )
    if not rows.empty:
        if metric is None:
            headline = rows["dataset"].map(_headline_metrics(records))
        else:
            headline = metric
        rows = rows[
            (rows["metric"] == headline)
            & (rows["split"] == split)
            & (rows["epoch"].isin(wanted))
        ]
    if rows.empty:
        return pd.DataFrame(columns=SUMMARY_COLUMNS)
    keys = ["dataset", "optimizer", "metric", "epoch"]
    table = rows.groupby(keys, sort=False)["value"].agg(
        ["mean", "std", "count"]
    ).reset_index()
    table = table.rename(columns={"count": "n"})
    table["std"] = table["std"].fillna(0.0)
    table.insert(2, "split", split)

    by_cell = table.groupby(["dataset", "epoch"])["mean"]
    best_max = by_cell.transform("max")
    best_min = by_cell.transform("min")
    accuracy = table["metric"] == "accuracy"
    table["best"] = table["mean"] == best_max.where(accuracy, best_min)
    table = table.sort_values(["dataset", "epoch"], kind="stable")
    return table[SUMMARY_COLUMNS].reset_index(drop=True)


def format_summary(table: pd.DataFrame, digits: int = 4) -> str:
    """Optimizers down, epochs across; best cells starred."""
    if table.empty:
        return "(no rows)"

    def cell(row) -> str:
        text = f"{row['mean']:.{digits}f} ± {row['std']:.{digits}f}"
        if row["n"] == 1:
            text += " (n=1)"
        return text + (" *" if row["best"] else "")

    frame = table.assign(cell=table.apply(cell, axis=1))
    blocks = []
    for dataset, part in frame.groupby("dataset", sort=False):
        wide = part.pivot(index="optimizer", columns="epoch", values="cell")
        wide = wide.reindex(part["optimizer"].drop_duplicates())
        first = part.iloc[0]
        header = f"{dataset} ({first['split']} {first['metric']})"
        blocks.append(f"{header}\n{wide.fillna('-').to_string()}")
    return "\n\n".join(blocks)
