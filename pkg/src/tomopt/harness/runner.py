"""Seeded training runs and their on-disk outputs."""

from __future__ import annotations

import logging
import re
from pathlib import Path
from typing import Dict, List, Optional, Sequence

import numpy as np

from ..core.errors import DivergenceDetected, InvalidConfig
from ..core.rng import spawn_rngs
from ..data.csv import Dataset
from ..data.lookup import load_dataset
from ..data.split import SplitDataset, batches, split_normalize
from ..data.synthetic import ProblemKind, SyntheticProblem, make_problem
from ..model.network import (
    Batch,
    LossKind,
    Model,
    accuracy,
    backward,
    forward,
    init_model,
    loss,
)
from ..optim.dispatch import STEPPERS
from ..optim.state import init_state
from ..record.csv import write_metrics
from ..record.metadata import write_metadata
from .experiment import ExperimentConfig, RunRecord, optimizer_label

logger = logging.getLogger(__name__)

__all__ = ["run_experiment", "save_records", "make_run_id"]

SPLITS = ("train", "test")


def make_run_id(prefix: str, optimizer: str, seed: int) -> str:
    """File-name safe ``<prefix>-<optimizer>-s<seed>``."""
    raw = f"{prefix}-{optimizer}-s{seed}"
    return re.sub(r"[^\w.=+-]+", "_", raw).strip("_")


def _check_finite(run_id: str, epoch: int, values: Dict) -> None:
    for value in values.values():
        if not np.isfinite(value):
            raise DivergenceDetected(run_id, epoch, value)


def _evaluate(model: Model, batch: Batch, kind: LossKind) -> Dict[str, float]:
    outputs = forward(model, batch)
    if kind is LossKind.MSE:
        return {"mse": loss(kind, outputs, batch.targets)}
    return {
        "loss": loss(kind, outputs, batch.targets),
        "accuracy": accuracy(outputs, batch.targets),
    }


def _record_epoch(record: RunRecord, epoch: int, per_split: Dict) -> None:
    for split in SPLITS:
        _check_finite(record.run_id, epoch, per_split[split])
    for split in SPLITS:
        for metric, value in per_split[split].items():
            record.add(epoch, split, metric, value)


def _train_network(
    record: RunRecord,
    config: ExperimentConfig,
    split: SplitDataset,
    kind: LossKind,
    layer_sizes: Sequence[int],
) -> None:
    seed = record.seed
    model = init_model(layer_sizes, seed)
    theta = model.flat.copy()
    state = init_state(config.optimizer, theta.size)
    stepper = STEPPERS[config.optimizer.kind]
    train = Batch(split.train.features, split.train.targets)
    test = Batch(split.test.features, split.test.targets)
    # child 0 drives mini-batch order so it never aliases the init stream
    shuffle = spawn_rngs(seed, 1)[0]

    for epoch in range(1, config.epochs + 1):
        for index in batches(len(train), config.batch_size, shuffle):
            batch = train if config.batch_size is None else train.subset(index)
            value, grads = backward(model, batch, kind)
            if not np.isfinite(value):
                raise DivergenceDetected(record.run_id, epoch, value)
            theta, _ = stepper(state, theta, grads.flat, config.optimizer)
            model = model.with_params(theta)
        _record_epoch(record, epoch, {
            "train": _evaluate(model, train, kind),
            "test": _evaluate(model, test, kind),
        })


def _train_objective(
    record: RunRecord, config: ExperimentConfig, problem: SyntheticProblem
) -> None:
    """One optimizer step per epoch; test mirrors the train objective."""
    theta = problem.initial_point(record.seed)
    state = init_state(config.optimizer, theta.size)
    stepper = STEPPERS[config.optimizer.kind]
    for epoch in range(1, config.epochs + 1):
        theta, _ = stepper(
            state, theta, problem.grad(theta), config.optimizer
        )
        value = {"loss": problem.loss(theta)}
        _record_epoch(record, epoch, {"train": value, "test": value})


def _loss_kind(config: ExperimentConfig, classification: bool) -> LossKind:
    if config.loss is not None:
        return config.loss
    return LossKind.CROSS_ENTROPY if classification else LossKind.MSE


def _n_outputs(dataset: Dataset, kind: LossKind) -> int:
    if kind is LossKind.MSE:
        return 1
    labels = np.asarray(dataset.targets)
    if not np.all(labels == np.round(labels)) or labels.min() < 0:
        raise InvalidConfig(
            f"{dataset.name}: cross-entropy needs integer class labels"
        )
    return int(labels.max()) + 1


def run_experiment(config: ExperimentConfig) -> List[RunRecord]:
    """Train once per seed and return one record per run.

    A run whose loss turns non-finite stops there; its record keeps the
    epochs completed so far and is flagged ``diverged``.
    """
    problem: Optional[SyntheticProblem] = None
    dataset: Optional[Dataset] = None
    if config.problem is not None:
        problem = make_problem(config.problem)
        dataset = problem.dataset
    else:
        dataset = load_dataset(config.dataset, config.target_column)

    objective = problem is not None and problem.kind is not ProblemKind.BLOBS
    if objective:
        if config.loss is not None or config.batch_size is not None:
            raise InvalidConfig(
                f"{problem.kind.value} is an objective; loss and batch_size "
                "do not apply"
            )
        kind, layer_sizes = None, None
    else:
        kind = _loss_kind(config, problem is not None)
        layer_sizes = config.model.resolve(
            dataset.n_features, _n_outputs(dataset, kind)
        )

    label = optimizer_label(config.optimizer)
    dataset_name = config.label
    prefix = config.name or dataset_name
    records: List[RunRecord] = []
    total = len(config.seeds)
    for i, seed in enumerate(config.seeds, 1):
        run_id = make_run_id(prefix, label, seed)
        record = RunRecord(run_id, seed, label, dataset_name)
        logger.info("[%d/%d] %s starting", i, total, run_id)
        try:
            if objective:
                _train_objective(record, config, problem)
            else:
                split = split_normalize(
                    dataset,
                    config.split_ratio,
                    seed,
                    standardize_targets=kind is LossKind.MSE,
                )
                _train_network(record, config, split, kind, layer_sizes)
        except DivergenceDetected as err:
            record.diverged = True
            record.diverged_epoch = err.epoch
            logger.warning("[%d/%d] %s", i, total, err)
        record.metadata = {
            "run_id": run_id,
            "seed": seed,
            "dataset": dataset_name,
            "optimizer_label": label,
            "layer_sizes": list(layer_sizes) if layer_sizes else None,
            "epochs_completed": record.epochs,
            "diverged": record.diverged,
            "diverged_epoch": record.diverged_epoch,
            "experiment": config.as_dict(),
        }
        if not record.diverged:
            headline = "mse" if "mse" in record.metrics else "loss"
            logger.info(
                "[%d/%d] %s finished: test %s %.6g",
                i, total, run_id, headline, record.final(headline),
            )
        records.append(record)
    return records


def save_records(
    records: Sequence[RunRecord], output_dir: Path
) -> List[Path]:
    """One metrics CSV and one YAML side-car per run."""
    output_dir = Path(output_dir)
    paths = []
    for record in records:
        paths.append(
            write_metrics(output_dir / f"{record.run_id}.csv", record.rows)
        )
        write_metadata(output_dir / f"{record.run_id}.yaml", record.metadata)
    logger.info("Wrote %d runs to %s", len(paths), output_dir)
    return paths
