"""SGD, SGD-M, AdaGrad, RMSProp, Adam, AMSGrad and Tom."""

from .config import (
    OptimizerConfig,
    OptimizerKind,
    make_optimizer_config,
    optimizer_config_from_mapping,
)
from .dispatch import STEPPERS, run_steps, step
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

__all__ = [
    "OptimizerConfig",
    "OptimizerKind",
    "make_optimizer_config",
    "optimizer_config_from_mapping",
    "OptimizerState",
    "StepReport",
    "init_state",
    "step",
    "run_steps",
    "STEPPERS",
    "sgd_step",
    "sgdm_step",
    "adagrad_step",
    "rmsprop_step",
    "adam_step",
    "amsgrad_step",
    "tom_step",
]
