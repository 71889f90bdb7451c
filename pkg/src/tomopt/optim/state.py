"""Per-parameter optimizer buffers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..core.errors import InvalidConfig
from ..core.vector import RealVector, zeros
from .config import OptimizerConfig, OptimizerKind

__all__ = ["OptimizerState", "StepReport", "init_state"]


@dataclass
class OptimizerState:
    """Buffers one optimizer carries between steps.

    Every buffer has the parameter vector's length. Only the buffers the
    kind uses ever change; the rest stay zero. ``second`` holds v for
    Adam, AMSGrad and Tom, and G for AdaGrad and RMSProp.
    """

    kind: OptimizerKind
    t: int
    level: RealVector
    trend: RealVector
    second: RealVector
    momentum: RealVector
    second_max: RealVector
    prev_grad: RealVector

    @property
    def dim(self) -> int:
        return len(self.level)

    def copy(self) -> "OptimizerState":
        return OptimizerState(
            kind=self.kind,
            t=self.t,
            level=self.level.copy(),
            trend=self.trend.copy(),
            second=self.second.copy(),
            momentum=self.momentum.copy(),
            second_max=self.second_max.copy(),
            prev_grad=self.prev_grad.copy(),
        )

    def permuted(self, order: np.ndarray) -> "OptimizerState":
        """Return a copy with every buffer's coordinates reordered."""
        out = self.copy()
        for name in ("level", "trend", "second", "momentum",
                     "second_max", "prev_grad"):
            setattr(out, name, getattr(out, name)[order])
        return out


@dataclass
class StepReport:
    """What one step applied.

    ``corrected_forecast`` is Tom's f-hat, ``corrected_first`` the
    bias-corrected first moment of Adam and AMSGrad, and
    ``corrected_second`` the quantity under the square root.
    """

    update: RealVector
    corrected_second: Optional[RealVector] = None
    corrected_forecast: Optional[RealVector] = None
    corrected_first: Optional[RealVector] = None


def init_state(config: OptimizerConfig, dim: int) -> OptimizerState:
    """Zeroed buffers for *dim* parameters; AdaGrad's G starts at G0."""
    config.validate()
    if dim < 1:
        raise InvalidConfig(f"dim must be >= 1, got {dim}")
    second = zeros(dim)
    if config.kind is OptimizerKind.ADAGRAD:
        second += config.initial_accumulator
    return OptimizerState(
        kind=config.kind,
        t=0,
        level=zeros(dim),
        trend=zeros(dim),
        second=second,
        momentum=zeros(dim),
        second_max=zeros(dim),
        prev_grad=zeros(dim),
    )
