"""Executable checks of Tom's bias-correction algebra."""

from .bias import (
    BiasFactors,
    approx_factor,
    approximation_gap_table,
    bias_factors,
    constant_gradient_unroll,
    forecast_factor,
    level_bias_factor,
    series_ab_bruteforce,
    telescoping_closed,
    telescoping_sum,
    trend_bias_factor,
)
from .montecarlo import forecast_samples, monte_carlo_forecast_bias
from .report import render_report

__all__ = [
    "BiasFactors",
    "approx_factor",
    "approximation_gap_table",
    "bias_factors",
    "constant_gradient_unroll",
    "forecast_factor",
    "level_bias_factor",
    "series_ab_bruteforce",
    "telescoping_closed",
    "telescoping_sum",
    "trend_bias_factor",
    "forecast_samples",
    "monte_carlo_forecast_bias",
    "render_report",
]
