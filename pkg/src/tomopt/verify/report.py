"""Plain-text bias-correction report."""

from __future__ import annotations

from typing import Iterable, Optional

import pandas as pd

from .bias import approximation_gap_table
from .montecarlo import monte_carlo_forecast_bias

__all__ = ["render_report"]


def render_report(
    beta1: float,
    beta2: float,
    steps: Iterable[int],
    monte_carlo: Optional[dict] = None,
) -> str:
    """Factor table per step, optionally followed by a Monte Carlo line.

    ``monte_carlo`` holds the keyword arguments of
    ``monte_carlo_forecast_bias`` other than the betas.
    """
    table = approximation_gap_table(beta1, beta2, steps)
    with pd.option_context("display.float_format", "{:.12g}".format):
        body = table.to_string()
    lines = [
        f"Forecast bias factors (beta1={beta1}, beta2={beta2})",
        body,
    ]
    if monte_carlo:
        ratio, se = monte_carlo_forecast_bias(beta1, beta2, **monte_carlo)
        lines.append(
            "Monte Carlo mean(f_t)/(forecast_factor*E(g)) at "
            f"t={monte_carlo['t']}: {ratio:.6f} +/- {se:.2e} "
            f"({abs(ratio - 1) / se if se else 0.0:.2f} standard errors "
            "from 1)"
        )
    return "\n".join(lines) + "\n"
