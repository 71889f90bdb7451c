"""Single, double (Holt) and additive triple (Holt-Winters) smoothing.

The smoothing constant multiplies the *previous* estimate and its
complement the new observation::

    level_t = alpha * level_{t-1} + (1 - alpha) * y_t

This mirrors the more common textbook form, where alpha weights y_t;
alpha here corresponds to 1 - alpha there.

Holt's trend smooths differences of successive levels. Tom's trend, in
``tomopt.optim``, smooths differences of successive raw gradients
instead; the two only coincide when the level tracks the input exactly.

All forecasts are one step ahead. Arrays are 0-based: index ``t - 1``
holds the value for time ``t``, and ``forecasts[t - 1]`` is f_{t+1}.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from ..core.errors import EmptySeries, InvalidParam, SeriesTooShort

logger = logging.getLogger(__name__)

__all__ = [
    "SmoothingParams",
    "HoltResult",
    "HoltWintersResult",
    "as_series",
    "ses_levels",
    "ses_error_form",
    "holt",
    "holt_winters_additive",
    "default_holt_init",
    "default_holt_winters_init",
    "one_step_errors",
]


def as_series(values) -> np.ndarray:
    """Validate *values* as a finite, non-empty series."""
    series = np.asarray(values, dtype=np.float64).reshape(-1)
    if series.size == 0:
        raise EmptySeries("Series must contain at least one value")
    if not np.all(np.isfinite(series)):
        raise InvalidParam("Series contains non-finite values")
    return series


def _check_constant(name: str, value: float) -> None:
    if not 0 < value < 1:
        raise InvalidParam(f"{name} must lie strictly in (0, 1), got {value}")


@dataclass(frozen=True)
class SmoothingParams:
    """Holt-Winters constants. Unset l0/b0/s0 use the default init."""

    alpha: float
    beta: float
    gamma: float
    cycle: int
    l0: Optional[float] = None
    b0: Optional[float] = None
    s0: Optional[Sequence[float]] = None

    def __post_init__(self):
        _check_constant("alpha", self.alpha)
        _check_constant("beta", self.beta)
        _check_constant("gamma", self.gamma)
        if self.cycle < 2:
            raise InvalidParam(f"cycle must be >= 2, got {self.cycle}")
        if self.s0 is not None and len(self.s0) != self.cycle:
            raise InvalidParam(
                f"s0 needs {self.cycle} values, got {len(self.s0)}"
            )


@dataclass
class HoltResult:
    levels: np.ndarray
    trends: np.ndarray
    forecasts: np.ndarray


@dataclass
class HoltWintersResult:
    levels: np.ndarray
    trends: np.ndarray
    seasonals: np.ndarray
    forecasts: np.ndarray


def ses_levels(series, alpha: float, l0: float) -> np.ndarray:
    """Levels of single exponential smoothing; f_{t+1} = level_t."""
    y = as_series(series)
    _check_constant("alpha", alpha)
    levels = np.empty_like(y)
    level = float(l0)
    for t, obs in enumerate(y):
        level = alpha * level + (1 - alpha) * obs
        levels[t] = level
    return levels


def ses_error_form(series, alpha: float, f1: float) -> np.ndarray:
    """Forecasts f_2..f_{n+1} from the error-correction recurrence.

    f_{t+1} = f_t + (1 - alpha) * (y_t - f_t). Started from f1 = l0 it
    reproduces ``ses_levels``.
    """
    y = as_series(series)
    _check_constant("alpha", alpha)
    forecasts = np.empty_like(y)
    forecast = float(f1)
    for t, obs in enumerate(y):
        error = obs - forecast
        forecast = forecast + (1 - alpha) * error
        forecasts[t] = forecast
    return forecasts


def default_holt_init(series) -> Tuple[float, float]:
    """l0 = y_1 and b0 = y_2 - y_1 (0 for a single point)."""
    y = as_series(series)
    b0 = float(y[1] - y[0]) if y.size > 1 else 0.0
    return float(y[0]), b0


def holt(
    series,
    alpha: float,
    beta: float,
    l0: Optional[float] = None,
    b0: Optional[float] = None,
) -> HoltResult:
    """Holt's linear trend method."""
    y = as_series(series)
    _check_constant("alpha", alpha)
    _check_constant("beta", beta)
    default_l0, default_b0 = default_holt_init(y)
    level = default_l0 if l0 is None else float(l0)
    trend = default_b0 if b0 is None else float(b0)

    levels = np.empty_like(y)
    trends = np.empty_like(y)
    for t, obs in enumerate(y):
        prev_level = level
        level = alpha * (prev_level + trend) + (1 - alpha) * obs
        trend = beta * trend + (1 - beta) * (level - prev_level)
        levels[t] = level
        trends[t] = trend
    return HoltResult(levels=levels, trends=trends, forecasts=levels + trends)


def default_holt_winters_init(
    series, cycle: int
) -> Tuple[float, float, np.ndarray]:
    """Initial level, trend and seasonal indices from the first two cycles.

    l0 is the first cycle's mean, b0 the change in cycle means divided by
    the cycle length, and s0_i = y_i - mean(first cycle).
    """
    y = as_series(series)
    if y.size < 2 * cycle:
        raise SeriesTooShort(
            f"Need at least {2 * cycle} values for cycle={cycle}, "
            f"got {y.size}"
        )
    first = y[:cycle].mean()
    second = y[cycle:2 * cycle].mean()
    return float(first), float((second - first) / cycle), y[:cycle] - first


def holt_winters_additive(
    series, params: SmoothingParams
) -> HoltWintersResult:
    """Triple exponential smoothing with additive seasonality."""
    y = as_series(series)
    c = params.cycle
    if y.size < 2 * c:
        raise SeriesTooShort(
            f"Need at least {2 * c} values for cycle={c}, got {y.size}"
        )
    l_init, b_init, s_init = default_holt_winters_init(y, c)
    level = l_init if params.l0 is None else float(params.l0)
    trend = b_init if params.b0 is None else float(params.b0)
    s0 = s_init if params.s0 is None else np.asarray(params.s0, dtype=float)

    alpha, beta, gamma = params.alpha, params.beta, params.gamma
    n = y.size
    # season[j] holds s_{j - c + 1}; s0 fills s_{1-c}..s_0
    season = np.empty(n + c, dtype=np.float64)
    season[:c] = s0
    levels = np.empty(n, dtype=np.float64)
    trends = np.empty(n, dtype=np.float64)
    forecasts = np.empty(n, dtype=np.float64)

    for i, obs in enumerate(y):
        t = i + 1
        prev_level, prev_trend = level, trend
        s_back = season[t - 1]  # s_{t-c}
        level = (
            alpha * (prev_level + prev_trend) + (1 - alpha) * (obs - s_back)
        )
        trend = beta * prev_trend + (1 - beta) * (level - prev_level)
        season[t - 1 + c] = (
            gamma * s_back + (1 - gamma) * (obs - prev_level - prev_trend)
        )
        levels[i] = level
        trends[i] = trend
        forecasts[i] = level + trend + season[t]  # s_{t-c+1}

    logger.debug("Holt-Winters over %d points, cycle %d", n, c)
    return HoltWintersResult(
        levels=levels,
        trends=trends,
        seasonals=season[c:].copy(),
        forecasts=forecasts,
    )


def one_step_errors(series, forecasts) -> np.ndarray:
    """y_{t+1} - f_{t+1} for t = 1..n-1."""
    y = as_series(series)
    f = np.asarray(forecasts, dtype=np.float64)
    return y[1:] - f[:-1]
