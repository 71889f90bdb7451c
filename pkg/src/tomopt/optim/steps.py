"""One update of each optimizer.

Each ``*_step`` advances ``state`` in place and returns the new parameter
vector with a StepReport; ``params`` and ``grad`` are never modified.
Epsilon sits where each method's own rule puts it: inside the square root
for AdaGrad and RMSProp, outside it for Adam, AMSGrad and Tom.

SGD-M keeps the sign convention m = beta*m - alpha*g, theta = theta + m.

Tom is Adam with a Holt-style trend on the gradients::

    level  = beta1 * (level + trend) + (1 - beta1) * g
    trend  = beta2 * trend + (1 - beta2) * (g - g_prev)
    v      = beta3 * v + (1 - beta3) * g**2
    f      = level + trend
    theta -= alpha * f_hat / (sqrt(v_hat) + eps)

with f_hat = f / (1 - (beta1*beta2)**t) and v_hat = v / (1 - beta3**t).
The trend differences raw gradients, not successive levels, and the
first step sees g_prev = 0.
"""

from __future__ import annotations

from typing import Tuple

import numpy as np

from ..core.errors import KindMismatch
from ..core.vector import RealVector, check_lengths
from .config import OptimizerConfig, OptimizerKind
from .state import OptimizerState, StepReport

__all__ = [
    "sgd_step",
    "sgdm_step",
    "adagrad_step",
    "rmsprop_step",
    "adam_step",
    "amsgrad_step",
    "tom_step",
]

StepResult = Tuple[RealVector, StepReport]


def _prepare(
    state: OptimizerState, params, grad
) -> Tuple[RealVector, RealVector]:
    params = np.asarray(params, dtype=np.float64)
    grad = np.asarray(grad, dtype=np.float64)
    check_lengths(params, grad, state.level)
    state.t += 1
    return params, grad


def _check_kind(state: OptimizerState, cfg: OptimizerConfig,
                kind: OptimizerKind) -> None:
    if state.kind is not kind or cfg.kind is not kind:
        raise KindMismatch(
            f"{kind.value} step given state={state.kind.value}, "
            f"config={cfg.kind.value}"
        )


def sgd_step(state: OptimizerState, params, grad,
             cfg: OptimizerConfig) -> StepResult:
    _check_kind(state, cfg, OptimizerKind.SGD)
    params, grad = _prepare(state, params, grad)
    update = -cfg.alpha * grad
    return params + update, StepReport(update=update)


def sgdm_step(state: OptimizerState, params, grad,
              cfg: OptimizerConfig) -> StepResult:
    _check_kind(state, cfg, OptimizerKind.SGDM)
    params, grad = _prepare(state, params, grad)
    state.momentum = cfg.momentum_beta * state.momentum - cfg.alpha * grad
    update = state.momentum.copy()
    return params + update, StepReport(update=update)


def adagrad_step(state: OptimizerState, params, grad,
                 cfg: OptimizerConfig) -> StepResult:
    _check_kind(state, cfg, OptimizerKind.ADAGRAD)
    params, grad = _prepare(state, params, grad)
    state.second = state.second + grad * grad
    update = -cfg.alpha * grad / np.sqrt(state.second + cfg.epsilon)
    return params + update, StepReport(
        update=update, corrected_second=state.second.copy()
    )


def rmsprop_step(state: OptimizerState, params, grad,
                 cfg: OptimizerConfig) -> StepResult:
    _check_kind(state, cfg, OptimizerKind.RMSPROP)
    params, grad = _prepare(state, params, grad)
    beta = cfg.beta2
    state.second = beta * state.second + (1 - beta) * grad * grad
    update = -cfg.alpha * grad / np.sqrt(state.second + cfg.epsilon)
    return params + update, StepReport(
        update=update, corrected_second=state.second.copy()
    )


def _first_moment(state: OptimizerState, grad: RealVector,
                  cfg: OptimizerConfig) -> RealVector:
    """Advance m and return it bias-corrected (when configured)."""
    b1 = cfg.beta1
    state.momentum = b1 * state.momentum + (1 - b1) * grad
    if cfg.bias_correction:
        return state.momentum / (1 - b1 ** state.t)
    return state.momentum.copy()


def _second_moment(state: OptimizerState, grad: RealVector,
                   decay: float) -> None:
    state.second = decay * state.second + (1 - decay) * grad * grad


def adam_step(state: OptimizerState, params, grad,
              cfg: OptimizerConfig) -> StepResult:
    _check_kind(state, cfg, OptimizerKind.ADAM)
    params, grad = _prepare(state, params, grad)
    m_hat = _first_moment(state, grad, cfg)
    _second_moment(state, grad, cfg.beta2)
    if cfg.bias_correction:
        v_hat = state.second / (1 - cfg.beta2 ** state.t)
    else:
        v_hat = state.second.copy()
    update = -cfg.alpha * m_hat / (np.sqrt(v_hat) + cfg.epsilon)
    return params + update, StepReport(
        update=update, corrected_second=v_hat, corrected_first=m_hat
    )


def amsgrad_step(state: OptimizerState, params, grad,
                 cfg: OptimizerConfig) -> StepResult:
    _check_kind(state, cfg, OptimizerKind.AMSGRAD)
    params, grad = _prepare(state, params, grad)
    m_hat = _first_moment(state, grad, cfg)
    _second_moment(state, grad, cfg.beta2)
    # no bias correction on the running max
    state.second_max = np.maximum(state.second_max, state.second)
    v_hat = state.second_max.copy()
    update = -cfg.alpha * m_hat / (np.sqrt(v_hat) + cfg.epsilon)
    return params + update, StepReport(
        update=update, corrected_second=v_hat, corrected_first=m_hat
    )


def tom_step(state: OptimizerState, params, grad,
             cfg: OptimizerConfig) -> StepResult:
    _check_kind(state, cfg, OptimizerKind.TOM)
    params, grad = _prepare(state, params, grad)
    b1, b2, b3 = cfg.beta1, cfg.beta2, cfg.beta3

    state.level = b1 * (state.level + state.trend) + (1 - b1) * grad
    state.trend = b2 * state.trend + (1 - b2) * (grad - state.prev_grad)
    _second_moment(state, grad, b3)
    forecast = state.level + state.trend

    if cfg.forecast_bias_correction:
        f_hat = forecast / (1 - (b1 * b2) ** state.t)
    else:
        f_hat = forecast
    if cfg.bias_correction:
        v_hat = state.second / (1 - b3 ** state.t)
    else:
        v_hat = state.second.copy()

    update = -cfg.alpha * f_hat / (np.sqrt(v_hat) + cfg.epsilon)
    state.prev_grad = grad.copy()
    return params + update, StepReport(
        update=update, corrected_second=v_hat, corrected_forecast=f_hat
    )
