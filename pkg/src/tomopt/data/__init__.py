"""Datasets: CSV ingestion, splitting and synthetic problems."""

from .csv import Dataset, load_csv
from .lookup import BUNDLED, bundled_dataset, load_dataset
from .split import (
    SplitDataset,
    batches,
    denormalize_features,
    denormalize_targets,
    split_normalize,
)
from .synthetic import (
    ProblemKind,
    SyntheticProblem,
    make_blobs,
    make_problem,
    make_quadratic,
    make_rosenbrock,
    quadratic_from_matrix,
)

__all__ = [
    "Dataset",
    "load_csv",
    "BUNDLED",
    "bundled_dataset",
    "load_dataset",
    "SplitDataset",
    "batches",
    "denormalize_features",
    "denormalize_targets",
    "split_normalize",
    "ProblemKind",
    "SyntheticProblem",
    "make_blobs",
    "make_problem",
    "make_quadratic",
    "make_rosenbrock",
    "quadratic_from_matrix",
]
