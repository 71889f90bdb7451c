"""Closed forms for the initialization bias of Tom's level and trend.

With gradients of constant expectation E(g) and zero-initialized buffers
(including g_0 = 0), the trend and level recurrences have expectations

    E(b_t) = (1 - beta2) * beta2**(t-1) * E(g)
    E(l_t) = [beta1 * (1 - beta2) * (beta2**(t-1) - beta1**(t-1))
              / (beta2 - beta1) + (1 - beta1**t)] * E(g)

The level expression is the sum of two unrolled series: the trend terms
fed back through beta1 (series A, closed by the telescoping identity)
and the ordinary exponential average of the gradients (series B).
The optimizer divides the forecast by 1 - (beta1*beta2)**t, which only
approximates the exact factor; ``approximation_gap_table`` measures how
far off it is.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Iterable, Tuple

import numpy as np
import pandas as pd

from ..core.errors import DegenerateBetas, InvalidParam

__all__ = [
    "BiasFactors",
    "trend_bias_factor",
    "level_bias_factor",
    "forecast_factor",
    "approx_factor",
    "bias_factors",
    "approximation_gap_table",
    "constant_gradient_unroll",
    "series_ab_bruteforce",
    "telescoping_sum",
    "telescoping_closed",
]


def _check_step(t: int) -> None:
    if int(t) != t or t < 1:
        raise InvalidParam(f"t must be an integer >= 1, got {t}")


def _check_open_unit(name: str, value: float) -> None:
    if not 0 < value < 1:
        raise InvalidParam(f"{name} must lie in (0, 1), got {value}")


@dataclass(frozen=True)
class BiasFactors:
    t: int
    trend_factor: float
    level_factor: float
    forecast_factor: float
    approx_factor: float

    @property
    def relative_gap(self) -> float:
        """(exact - approx) / approx."""
        return (self.forecast_factor - self.approx_factor) / self.approx_factor


def trend_bias_factor(beta2: float, t: int) -> float:
    """E(b_t) / E(g)."""
    _check_step(t)
    _check_open_unit("beta2", beta2)
    return (1 - beta2) * beta2 ** (t - 1)


def _telescoped(beta1: float, beta2: float, n: int, strict: bool) -> float:
    """(beta2**n - beta1**n) / (beta2 - beta1), or its limit n*beta**(n-1)."""
    if beta1 == beta2:
        if strict:
            raise DegenerateBetas(
                "beta1 == beta2: use the limit form n * beta**(n - 1)"
            )
        return n * beta1 ** (n - 1) if n > 0 else 0.0
    return (beta2 ** n - beta1 ** n) / (beta2 - beta1)


def level_bias_factor(
    beta1: float, beta2: float, t: int, strict: bool = False
) -> float:
    """E(l_t) / E(g).

    For beta1 == beta2 the telescoped fraction is 0/0; it is replaced by
    its limit (t-1) * beta**(t-2) unless ``strict`` asks for an error.
    """
    _check_step(t)
    _check_open_unit("beta1", beta1)
    _check_open_unit("beta2", beta2)
    series_a = beta1 * (1 - beta2) * _telescoped(beta1, beta2, t - 1, strict)
    series_b = 1 - beta1 ** t
    return series_a + series_b


def forecast_factor(beta1: float, beta2: float, t: int) -> float:
    """E(l_t + b_t) / E(g)."""
    return level_bias_factor(beta1, beta2, t) + trend_bias_factor(beta2, t)


def approx_factor(beta1: float, beta2: float, t: int) -> float:
    """The divisor Tom actually uses: 1 - (beta1*beta2)**t."""
    _check_step(t)
    product = beta1 * beta2
    if not 0 < product < 1:
        raise InvalidParam(f"beta1*beta2 must lie in (0, 1), got {product}")
    return 1 - product ** t


def bias_factors(beta1: float, beta2: float, t: int) -> BiasFactors:
    trend = trend_bias_factor(beta2, t)
    level = level_bias_factor(beta1, beta2, t)
    return BiasFactors(
        t=t,
        trend_factor=trend,
        level_factor=level,
        forecast_factor=level + trend,
        approx_factor=approx_factor(beta1, beta2, t),
    )


def approximation_gap_table(
    beta1: float, beta2: float, steps: Iterable[int]
) -> pd.DataFrame:
    """One row of factors per step, with the relative approximation gap."""
    rows = []
    for t in steps:
        factors = bias_factors(beta1, beta2, int(t))
        row = asdict(factors)
        row["relative_gap"] = factors.relative_gap
        rows.append(row)
    return pd.DataFrame(rows).set_index("t")


def constant_gradient_unroll(
    beta1: float, beta2: float, c: float, T: int
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Scalar level/trend recurrences for g_t = c (g_0 = 0), t = 1..T."""
    _check_step(T)
    levels = np.empty(T)
    trends = np.empty(T)
    level = trend = prev = 0.0
    for i in range(T):
        level = beta1 * (level + trend) + (1 - beta1) * c
        trend = beta2 * trend + (1 - beta2) * (c - prev)
        prev = c
        levels[i] = level
        trends[i] = trend
    return levels, trends, levels + trends


def series_ab_bruteforce(beta1: float, beta2: float, t: int) -> float:
    """E(l_t) for E(g) = 1 summed term by term, without telescoping."""
    _check_step(t)
    series_a = sum(
        beta1 ** k * trend_bias_factor(beta2, t - k) for k in range(1, t)
    )
    series_b = (1 - beta1) * sum(beta1 ** k for k in range(t))
    return series_a + series_b


def telescoping_sum(x: float, y: float, n: int) -> float:
    """sum_{k=1}^{n} x**(n-k) * y**(k-1)."""
    return sum(x ** (n - k) * y ** (k - 1) for k in range(1, n + 1))


def telescoping_closed(x: float, y: float, n: int) -> float:
    """(x**n - y**n) / (x - y) for x != y."""
    if x == y:
        raise DegenerateBetas("telescoping identity needs x != y")
    return (x ** n - y ** n) / (x - y)
