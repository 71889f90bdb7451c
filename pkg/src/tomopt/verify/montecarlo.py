"""Monte Carlo check of the forecast bias under i.i.d. gradients.

Gradients are drawn from Normal(mean, stddev**2). Trials are processed in
chunks of ``MONTE_CARLO_CHUNK`` streams; chunk ``i`` draws from child ``i``
of ``SeedSequence(seed)``, so results depend only on (seed, trials) and
chunks could be farmed out to workers without changing a bit.
"""

from __future__ import annotations

import logging
from typing import Tuple

import numpy as np

from ..core import settings
from ..core.errors import InvalidParam
from ..core.rng import spawn_rngs
from .bias import approx_factor, forecast_factor

logger = logging.getLogger(__name__)

__all__ = ["forecast_samples", "monte_carlo_forecast_bias"]

MIN_TRIALS = 1000


def _chunk_sizes(trials: int, chunk: int) -> list[int]:
    full, rest = divmod(trials, chunk)
    return [chunk] * full + ([rest] if rest else [])


def forecast_samples(
    beta1: float,
    beta2: float,
    mean: float,
    stddev: float,
    t: int,
    trials: int,
    seed: int,
    chunk: int | None = None,
) -> np.ndarray:
    """f_t = l_t + b_t for each of *trials* independent gradient streams."""
    chunk = chunk or settings.MONTE_CARLO_CHUNK
    sizes = _chunk_sizes(trials, chunk)
    out = np.empty(trials)
    start = 0
    for rng, size in zip(spawn_rngs(seed, len(sizes)), sizes):
        grads = rng.normal(mean, stddev, size=(size, t))
        level = np.zeros(size)
        trend = np.zeros(size)
        prev = np.zeros(size)
        for k in range(t):
            g = grads[:, k]
            level = beta1 * (level + trend) + (1 - beta1) * g
            trend = beta2 * trend + (1 - beta2) * (g - prev)
            prev = g
        out[start:start + size] = level + trend
        start += size
    return out


def monte_carlo_forecast_bias(
    beta1: float,
    beta2: float,
    mean: float,
    stddev: float,
    t: int,
    trials: int,
    seed: int,
    use_approx: bool = False,
) -> Tuple[float, float]:
    """Return mean(f_t) / (factor * mean) and its standard error.

    ``factor`` is the exact forecast factor, or 1 - (beta1*beta2)**t when
    ``use_approx`` is set.
    """
    if trials < MIN_TRIALS:
        raise InvalidParam(f"trials must be >= {MIN_TRIALS}, got {trials}")
    if stddev < 0:
        raise InvalidParam(f"stddev must be >= 0, got {stddev}")
    if mean == 0:
        raise InvalidParam("mean must be nonzero")
    factor = (approx_factor if use_approx else forecast_factor)(
        beta1, beta2, t
    )
    samples = forecast_samples(beta1, beta2, mean, stddev, t, trials, seed)
    scale = factor * mean
    ratio = float(samples.mean() / scale)
    std_error = float(samples.std(ddof=1) / np.sqrt(trials) / abs(scale))
    logger.info(
        "Monte Carlo t=%d trials=%d: ratio=%.6f (se %.2e)",
        t, trials, ratio, std_error,
    )
    return ratio, std_error
