"""Seeded train/test split with train-set standardization."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from ..core.errors import InvalidParam, TooFewRows
from ..core.rng import make_rng
from .csv import Dataset

__all__ = [
    "SplitDataset",
    "split_normalize",
    "denormalize_features",
    "denormalize_targets",
    "batches",
]


@dataclass
class SplitDataset:
    """Standardized train/test halves and the statistics used.

    Columns with zero training variance keep std 1, so they map to 0.
    For classification data the targets are labels and stay untouched
    (target_mean 0, target_std 1).
    """

    train: Dataset
    test: Dataset
    norm_mean: np.ndarray
    norm_std: np.ndarray
    target_mean: float
    target_std: float
    seed: int
    ratio: float
    train_index: np.ndarray
    test_index: np.ndarray


def _column_stats(x: np.ndarray):
    mean = x.mean(axis=0)
    std = x.std(axis=0)
    constant = np.ptp(x, axis=0) == 0
    return mean, np.where(constant, 1.0, std), constant


def split_normalize(
    dataset: Dataset,
    ratio: float,
    seed: int,
    standardize_targets: bool = True,
) -> SplitDataset:
    """Shuffle with *seed*, cut at round(ratio * n), standardize on train."""
    if not 0 < ratio < 1:
        raise InvalidParam(f"ratio must lie in (0, 1), got {ratio}")
    n = len(dataset)
    if n < 2:
        raise TooFewRows(f"Need at least 2 rows to split, got {n}")
    n_train = min(max(math.floor(ratio * n + 0.5), 1), n - 1)
    order = make_rng(seed).permutation(n)
    train_index, test_index = order[:n_train], order[n_train:]

    x_train = dataset.features[train_index]
    mean, std, constant = _column_stats(x_train)
    if standardize_targets:
        y_train = dataset.targets[train_index].astype(float)
        t_mean = float(y_train.mean())
        t_std = float(y_train.std()) or 1.0
    else:
        t_mean, t_std = 0.0, 1.0

    def _part(index: np.ndarray, suffix: str) -> Dataset:
        targets = dataset.targets[index]
        if standardize_targets:
            targets = (targets - t_mean) / t_std
        features = (dataset.features[index] - mean) / std
        features[:, constant] = 0.0
        return Dataset(
            name=f"{dataset.name}:{suffix}",
            features=features,
            targets=targets,
            feature_names=list(dataset.feature_names),
            target_name=dataset.target_name,
        )

    return SplitDataset(
        train=_part(train_index, "train"),
        test=_part(test_index, "test"),
        norm_mean=mean,
        norm_std=std,
        target_mean=t_mean,
        target_std=t_std,
        seed=seed,
        ratio=ratio,
        train_index=train_index,
        test_index=test_index,
    )


def denormalize_features(split: SplitDataset, x: np.ndarray) -> np.ndarray:
    return np.asarray(x) * split.norm_std + split.norm_mean


def denormalize_targets(split: SplitDataset, y: np.ndarray) -> np.ndarray:
    return np.asarray(y) * split.target_std + split.target_mean


def batches(
    n: int, batch_size: int | None, rng: np.random.Generator | None = None
) -> Iterator[np.ndarray]:
    """Row indices for one epoch.

    ``batch_size`` None (full batch) yields every row in order. Otherwise
    rows are shuffled with *rng* and cut into consecutive chunks, the last
    one possibly short.
    """
    if batch_size is None or batch_size >= n:
        yield np.arange(n)
        return
    if batch_size < 1:
        raise InvalidParam(f"batch_size must be >= 1, got {batch_size}")
    order = rng.permutation(n) if rng is not None else np.arange(n)
    for start in range(0, n, batch_size):
        yield order[start:start + batch_size]
