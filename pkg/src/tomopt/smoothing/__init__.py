"""Exponential smoothing forecasters."""

from .methods import (
    HoltResult,
    HoltWintersResult,
    SmoothingParams,
    as_series,
    default_holt_init,
    default_holt_winters_init,
    holt,
    holt_winters_additive,
    one_step_errors,
    ses_error_form,
    ses_levels,
)

__all__ = [
    "HoltResult",
    "HoltWintersResult",
    "SmoothingParams",
    "as_series",
    "default_holt_init",
    "default_holt_winters_init",
    "holt",
    "holt_winters_additive",
    "one_step_errors",
    "ses_error_form",
    "ses_levels",
]
