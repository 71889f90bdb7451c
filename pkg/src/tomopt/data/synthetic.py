"""Desk-scale test problems: quadratic bowl, Rosenbrock, Gaussian blobs."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional

import numpy as np

from ..core.errors import InvalidConfig, InvalidParam
from ..core.rng import make_rng
from .csv import Dataset

__all__ = [
    "ProblemKind",
    "SyntheticProblem",
    "make_quadratic",
    "quadratic_from_matrix",
    "make_rosenbrock",
    "make_blobs",
    "make_problem",
]


class ProblemKind(str, Enum):
    QUADRATIC = "quadratic"
    ROSENBROCK = "rosenbrock"
    BLOBS = "blobs"


@dataclass
class SyntheticProblem:
    """A test problem.

    Quadratic and Rosenbrock are objectives over a parameter vector of
    length ``dim`` (``loss``/``grad``). Blobs carries a labelled
    ``dataset`` for cross-entropy training instead.
    """

    kind: ProblemKind
    dim: int
    seed: Optional[int] = None
    params: Dict[str, Any] = field(default_factory=dict)
    matrix: Optional[np.ndarray] = None
    dataset: Optional[Dataset] = None

    @property
    def name(self) -> str:
        return f"{self.kind.value}{self.dim}"

    def loss(self, theta) -> float:
        theta = np.asarray(theta, dtype=np.float64)
        if self.kind is ProblemKind.QUADRATIC:
            return 0.5 * float(theta @ self.matrix @ theta)
        if self.kind is ProblemKind.ROSENBROCK:
            x, y = theta[:-1], theta[1:]
            return float(np.sum(100.0 * (y - x * x) ** 2 + (1.0 - x) ** 2))
        raise InvalidParam("Blobs is a dataset, not an objective")

    def grad(self, theta) -> np.ndarray:
        theta = np.asarray(theta, dtype=np.float64)
        if self.kind is ProblemKind.QUADRATIC:
            return self.matrix @ theta
        if self.kind is ProblemKind.ROSENBROCK:
            x, y = theta[:-1], theta[1:]
            inner = y - x * x
            g = np.zeros_like(theta)
            g[:-1] = -400.0 * x * inner - 2.0 * (1.0 - x)
            g[1:] += 200.0 * inner
            return g
        raise InvalidParam("Blobs is a dataset, not an objective")

    def initial_point(self, seed: int) -> np.ndarray:
        """Seeded starting iterate for objective problems."""
        rng = make_rng(seed)
        if self.kind is ProblemKind.ROSENBROCK:
            return rng.uniform(-2.0, 2.0, size=self.dim)
        return rng.normal(size=self.dim)


def _random_rotation(rng: np.random.Generator, dim: int) -> np.ndarray:
    q, r = np.linalg.qr(rng.normal(size=(dim, dim)))
    # sign(diag(R)) on the columns: Haar-distributed Q
    return q * np.sign(np.diag(r))


def quadratic_from_matrix(matrix) -> SyntheticProblem:
    """L = 0.5 theta^T A theta for a given symmetric positive definite A."""
    a = np.atleast_2d(np.asarray(matrix, dtype=np.float64))
    if a.shape[0] != a.shape[1] or not np.allclose(a, a.T):
        raise InvalidParam("Quadratic matrix must be square and symmetric")
    return SyntheticProblem(ProblemKind.QUADRATIC, a.shape[0], matrix=a)


def make_quadratic(
    dim: int, condition_number: float, seed: int
) -> SyntheticProblem:
    """A = Q^T D Q with D log-spaced on [1, condition_number]."""
    if dim < 1:
        raise InvalidParam(f"dim must be >= 1, got {dim}")
    if condition_number < 1:
        raise InvalidParam(
            f"condition_number must be >= 1, got {condition_number}"
        )
    rng = make_rng(seed)
    spectrum = np.logspace(0.0, np.log10(condition_number), dim)
    q = _random_rotation(rng, dim)
    a = q.T @ np.diag(spectrum) @ q
    a = 0.5 * (a + a.T)
    return SyntheticProblem(
        ProblemKind.QUADRATIC,
        dim,
        seed=seed,
        params={"condition_number": float(condition_number)},
        matrix=a,
    )


def make_rosenbrock(dim: int) -> SyntheticProblem:
    """sum_i 100 (x_{i+1} - x_i^2)^2 + (1 - x_i)^2, minimum at all ones."""
    if dim < 2:
        raise InvalidParam(f"Rosenbrock needs dim >= 2, got {dim}")
    return SyntheticProblem(ProblemKind.ROSENBROCK, dim)


def _blob_centers(
    rng: np.random.Generator, k: int, dim: int, separation: float
) -> np.ndarray:
    """Neighbouring centers exactly *separation* apart, randomly rotated.

    In one dimension the centers sit on a line; otherwise on a circle in
    the first two coordinates before the rotation.
    """
    centers = np.zeros((k, dim))
    if dim == 1:
        centers[:, 0] = separation * (np.arange(k) - (k - 1) / 2)
        return centers
    radius = separation / (2 * np.sin(np.pi / k))
    angles = 2 * np.pi * np.arange(k) / k
    centers[:, 0] = radius * np.cos(angles)
    centers[:, 1] = radius * np.sin(angles)
    return centers @ _random_rotation(rng, dim)


def make_blobs(
    n: int,
    k: int,
    dim: int,
    seed: int,
    separation: float = 10.0,
    spread: float = 1.0,
) -> SyntheticProblem:
    """*k* Gaussian clusters in *dim* dimensions with integer labels.

    Labels are balanced (``i % k``) and shuffled; each point is its
    center plus Normal(0, spread**2) noise per coordinate.
    """
    if k < 2:
        raise InvalidParam(f"blobs needs k >= 2, got {k}")
    if n < k or dim < 1:
        raise InvalidParam(f"blobs needs n >= k and dim >= 1, got n={n}")
    if not separation > 0 or not spread > 0:
        raise InvalidParam("separation and spread must be > 0")
    rng = make_rng(seed)
    centers = _blob_centers(rng, k, dim, separation)
    labels = np.arange(n) % k
    rng.shuffle(labels)
    points = centers[labels] + rng.normal(0.0, spread, size=(n, dim))
    dataset = Dataset(
        name=f"blobs{k}x{dim}",
        features=points,
        targets=labels,
        feature_names=[f"x{i}" for i in range(dim)],
        target_name="label",
    )
    return SyntheticProblem(
        ProblemKind.BLOBS,
        dim,
        seed=seed,
        params={"n": n, "k": k, "separation": separation, "spread": spread},
        dataset=dataset,
    )


_PROBLEM_KEYS = {
    ProblemKind.QUADRATIC: {"kind", "dim", "condition_number", "seed"},
    ProblemKind.ROSENBROCK: {"kind", "dim"},
    ProblemKind.BLOBS: {"kind", "n", "k", "dim", "seed", "separation",
                        "spread"},
}


def make_problem(mapping: Dict[str, Any]) -> SyntheticProblem:
    """Build a problem from an experiment-file mapping."""
    try:
        kind = ProblemKind(str(mapping["kind"]).lower())
    except (KeyError, ValueError) as err:
        raise InvalidConfig(f"Bad problem kind in {mapping!r}") from err
    unknown = set(mapping) - _PROBLEM_KEYS[kind]
    if unknown:
        raise InvalidConfig(f"Unknown problem keys: {sorted(unknown)}")
    try:
        if kind is ProblemKind.QUADRATIC:
            return make_quadratic(
                int(mapping["dim"]),
                float(mapping.get("condition_number", 100.0)),
                int(mapping.get("seed", 0)),
            )
        if kind is ProblemKind.ROSENBROCK:
            return make_rosenbrock(int(mapping["dim"]))
        extras = {
            key: float(mapping[key])
            for key in ("separation", "spread") if key in mapping
        }
        return make_blobs(
            int(mapping.get("n", 300)),
            int(mapping.get("k", 3)),
            int(mapping.get("dim", 2)),
            int(mapping.get("seed", 0)),
            **extras,
        )
    except KeyError as err:
        raise InvalidConfig(f"Problem {kind.value} needs {err}") from err
