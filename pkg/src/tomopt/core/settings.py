"""Global constants for the tomopt package, read from defaults.yaml."""

import numpy as np

from .config import get_constant

DTYPE = np.float64

DEFAULT_ALPHA = float(get_constant("optimizer.alpha", 0.001))
DEFAULT_BETA1 = float(get_constant("optimizer.beta1", 0.9))
DEFAULT_BETA2_TOM = float(get_constant("optimizer.beta2_tom", 0.99))
DEFAULT_BETA2_ADAM = float(get_constant("optimizer.beta2_adam", 0.999))
DEFAULT_BETA3 = float(get_constant("optimizer.beta3", 0.999))
DEFAULT_EPSILON = float(get_constant("optimizer.epsilon", 1e-8))
DEFAULT_MOMENTUM_BETA = float(get_constant("optimizer.momentum_beta", 0.9))
DEFAULT_RMSPROP_BETA = float(get_constant("optimizer.rmsprop_beta", 0.9))
DEFAULT_INITIAL_ACCUMULATOR = float(
    get_constant("optimizer.initial_accumulator", 0.1)
)

DEFAULT_SPLIT_RATIO = float(get_constant("data.split_ratio", 0.8))

METRIC_DIGITS = int(get_constant("harness.metric_digits", 17))
REGRESSION_EPOCHS = tuple(
    get_constant("harness.epochs_of_interest.regression", [50, 100, 150, 200])
)
CLASSIFICATION_EPOCHS = tuple(
    get_constant(
        "harness.epochs_of_interest.classification", [10, 30, 75, 100]
    )
)

REPORT_STEPS = tuple(get_constant("verify.report_steps", [1, 5, 10, 50, 100]))
MONTE_CARLO_CHUNK = int(get_constant("verify.monte_carlo_chunk", 10000))

GRADCHECK_STEP = float(get_constant("gradcheck.step", 1e-6))
GRADCHECK_REL_TOL = float(get_constant("gradcheck.rel_tol", 1e-5))
GRADCHECK_ABS_TOL = float(get_constant("gradcheck.abs_tol", 1e-8))
