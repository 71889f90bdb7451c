"""Central-difference gradients and the backprop gradient check.

A parameter is skipped when its perturbation crosses a ReLU kink: the
sign pattern of the hidden pre-activations at theta + h*e_i differs from
the one at theta - h*e_i. Across a kink the central difference measures
an average of two slopes and says nothing about either.

Errors are scaled as |a - n| / max(|a|, |n|, abs_tol / rel_tol), which is
a relative error for ordinary coordinates and an absolute one (against
abs_tol) for coordinates near zero, where difference noise dominates.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np

from ..core import settings
from ..core.errors import InvalidParam
from ..core.rng import spawn_rngs
from .network import (
    Batch,
    Gradients,
    LossKind,
    Model,
    _forward_cache,
    backward,
    forward,
    loss,
    param_count,
)

logger = logging.getLogger(__name__)

__all__ = [
    "GradCheckResult",
    "central_difference",
    "finite_diff",
    "finite_diff_with_kinks",
    "scaled_errors",
    "gradient_check",
    "gradient_check_suite",
]


def central_difference(
    fn: Callable[[np.ndarray], float], x, h: float
) -> np.ndarray:
    """(fn(x + h e_i) - fn(x - h e_i)) / 2h for every coordinate."""
    if not h > 0:
        raise InvalidParam(f"h must be > 0, got {h}")
    x = np.array(x, dtype=np.float64).reshape(-1)
    grad = np.empty_like(x)
    for i in range(x.size):
        orig = x[i]
        x[i] = orig + h
        f_plus = fn(x)
        x[i] = orig - h
        f_minus = fn(x)
        x[i] = orig
        grad[i] = (f_plus - f_minus) / (2 * h)
    return grad


def _kink_pattern(model: Model, batch: Batch) -> Tuple[np.ndarray, ...]:
    pre, _ = _forward_cache(model, batch.inputs)
    return tuple(z > 0.0 for z in pre[:-1])


def finite_diff_with_kinks(
    model: Model, batch: Batch, loss_kind, h: float
) -> Tuple[Gradients, np.ndarray]:
    """Central differences plus a mask of coordinates that cross a kink."""
    kind = LossKind.parse(loss_kind)
    if not h > 0:
        raise InvalidParam(f"h must be > 0, got {h}")
    theta = model.flat.copy()
    grad = np.empty_like(theta)
    kinked = np.zeros(theta.size, dtype=bool)
    for i in range(theta.size):
        orig = theta[i]
        theta[i] = orig + h
        plus = model.with_params(theta)
        f_plus = loss(kind, forward(plus, batch), batch.targets)
        theta[i] = orig - h
        minus = model.with_params(theta)
        f_minus = loss(kind, forward(minus, batch), batch.targets)
        theta[i] = orig
        grad[i] = (f_plus - f_minus) / (2 * h)
        kinked[i] = any(
            not np.array_equal(p, m)
            for p, m in zip(_kink_pattern(plus, batch),
                            _kink_pattern(minus, batch))
        )
    return Gradients(model.layer_sizes, grad), kinked


def finite_diff(
    model: Model, batch: Batch, loss_kind, h: float = settings.GRADCHECK_STEP
) -> Gradients:
    grads, _ = finite_diff_with_kinks(model, batch, loss_kind, h)
    return grads


def scaled_errors(
    analytic: np.ndarray,
    numeric: np.ndarray,
    rel_tol: float = settings.GRADCHECK_REL_TOL,
    abs_tol: float = settings.GRADCHECK_ABS_TOL,
) -> np.ndarray:
    floor = abs_tol / rel_tol
    scale = np.maximum(np.maximum(np.abs(analytic), np.abs(numeric)), floor)
    return np.abs(analytic - numeric) / scale


@dataclass(frozen=True)
class GradCheckResult:
    max_error: float
    checked: int
    skipped: int

    def passed(self, rel_tol: float = settings.GRADCHECK_REL_TOL) -> bool:
        return self.max_error <= rel_tol


def gradient_check(
    model: Model,
    batch: Batch,
    loss_kind,
    h: float = settings.GRADCHECK_STEP,
) -> GradCheckResult:
    """Compare ``backward`` against central differences."""
    _, analytic = backward(model, batch, loss_kind)
    numeric, kinked = finite_diff_with_kinks(model, batch, loss_kind, h)
    keep = ~kinked
    errors = scaled_errors(analytic.flat[keep], numeric.flat[keep])
    return GradCheckResult(
        max_error=float(errors.max()) if errors.size else 0.0,
        checked=int(keep.sum()),
        skipped=int(kinked.sum()),
    )


def _random_case(rng: np.random.Generator, kind: LossKind):
    n_in = int(rng.integers(2, 6))
    hidden = [int(rng.integers(2, 7)) for _ in range(int(rng.integers(1, 3)))]
    n_out = 1 if kind is LossKind.MSE else int(rng.integers(2, 5))
    sizes = [n_in, *hidden, n_out]
    n_rows = int(rng.integers(3, 9))
    model = Model(sizes, rng.normal(0.0, 0.5, size=param_count(sizes)))
    inputs = rng.normal(size=(n_rows, n_in))
    if kind is LossKind.MSE:
        targets = rng.normal(size=n_rows)
    else:
        targets = rng.integers(0, n_out, size=n_rows)
    return model, Batch(inputs, targets)


def gradient_check_suite(
    loss_kind, cases: int = 20, seed: int = 0,
    h: float = settings.GRADCHECK_STEP,
) -> GradCheckResult:
    """Gradient check over *cases* seeded random (model, batch) pairs."""
    kind = LossKind.parse(loss_kind)
    worst, checked, skipped = 0.0, 0, 0
    for rng in spawn_rngs(seed, cases):
        model, batch = _random_case(rng, kind)
        result = gradient_check(model, batch, kind, h)
        worst = max(worst, result.max_error)
        checked += result.checked
        skipped += result.skipped
    logger.info(
        "Gradient check (%s): %d cases, max error %.3e, %d coordinates "
        "skipped at kinks", kind.value, cases, worst, skipped,
    )
    return GradCheckResult(max_error=worst, checked=checked, skipped=skipped)
