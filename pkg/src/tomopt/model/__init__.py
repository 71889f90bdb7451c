"""Dense network, losses, backpropagation and gradient checking."""

from .gradcheck import (
    GradCheckResult,
    central_difference,
    finite_diff,
    finite_diff_with_kinks,
    gradient_check,
    gradient_check_suite,
    scaled_errors,
)
from .network import (
    Batch,
    Gradients,
    LossKind,
    Model,
    accuracy,
    backward,
    flatten,
    forward,
    init_model,
    loss,
    param_count,
    unflatten,
)

__all__ = [
    "GradCheckResult",
    "central_difference",
    "finite_diff",
    "finite_diff_with_kinks",
    "gradient_check",
    "gradient_check_suite",
    "scaled_errors",
    "Batch",
    "Gradients",
    "LossKind",
    "Model",
    "accuracy",
    "backward",
    "forward",
    "init_model",
    "loss",
    "param_count",
    "flatten",
    "unflatten",
]
