"""Uniform stepping interface over every optimizer kind."""

from __future__ import annotations

from typing import Callable, Dict, Tuple

import numpy as np

from ..core.errors import KindMismatch
from ..core.vector import RealVector, as_vector
from .config import OptimizerConfig, OptimizerKind
from .state import OptimizerState, StepReport, init_state
from .steps import (
    adagrad_step,
    adam_step,
    amsgrad_step,
    rmsprop_step,
    sgd_step,
    sgdm_step,
    tom_step,
)

__all__ = ["STEPPERS", "step", "run_steps"]

STEPPERS: Dict[OptimizerKind, Callable] = {
    OptimizerKind.SGD: sgd_step,
    OptimizerKind.SGDM: sgdm_step,
    OptimizerKind.ADAGRAD: adagrad_step,
    OptimizerKind.RMSPROP: rmsprop_step,
    OptimizerKind.ADAM: adam_step,
    OptimizerKind.AMSGRAD: amsgrad_step,
    OptimizerKind.TOM: tom_step,
}


def step(
    config: OptimizerConfig,
    state: OptimizerState,
    params,
    grad,
) -> Tuple[RealVector, OptimizerState, StepReport]:
    """Advance a copy of *state*; the inputs are left untouched."""
    if state.kind is not config.kind:
        raise KindMismatch(
            f"state was built for {state.kind.value}, "
            f"config is {config.kind.value}"
        )
    new_state = state.copy()
    new_params, report = STEPPERS[config.kind](new_state, params, grad, config)
    return new_params, new_state, report


def run_steps(
    config: OptimizerConfig,
    params,
    grad_fn: Callable[[RealVector, int], RealVector],
    steps: int,
) -> np.ndarray:
    """Iterate *steps* times from *params*; return every iterate.

    ``grad_fn(theta, t)`` supplies the gradient at step ``t`` (1-based).
    Row 0 of the result is the starting point.
    """
    theta = as_vector(params)
    state = init_state(config, len(theta))
    stepper = STEPPERS[config.kind]
    trajectory = np.empty((steps + 1, len(theta)), dtype=np.float64)
    trajectory[0] = theta
    for t in range(1, steps + 1):
        theta, _ = stepper(state, theta, grad_fn(theta, t), config)
        trajectory[t] = theta
    return trajectory
