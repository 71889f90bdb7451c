"""Optimizer hyperparameters."""

from __future__ import annotations

from dataclasses import asdict, dataclass, fields, replace
from enum import Enum
from typing import Any, Dict, Mapping, Optional

from ..core import settings
from ..core.errors import InvalidConfig

__all__ = [
    "OptimizerKind",
    "OptimizerConfig",
    "make_optimizer_config",
    "optimizer_config_from_mapping",
]


class OptimizerKind(str, Enum):
    SGD = "SGD"
    SGDM = "SGDM"
    ADAGRAD = "AdaGrad"
    RMSPROP = "RMSProp"
    ADAM = "Adam"
    AMSGRAD = "AMSGrad"
    TOM = "Tom"

    @classmethod
    def parse(cls, value: "str | OptimizerKind") -> "OptimizerKind":
        """Accept the canonical name in any letter case."""
        if isinstance(value, cls):
            return value
        lowered = str(value).strip().lower().replace("-", "")
        for kind in cls:
            if kind.value.lower() == lowered:
                return kind
        raise InvalidConfig(f"Unknown optimizer kind: {value!r}")


_REAL_FIELDS = (
    "alpha",
    "beta1",
    "beta2",
    "beta3",
    "epsilon",
    "momentum_beta",
    "initial_accumulator",
)


def _default_beta2(kind: OptimizerKind) -> float:
    """beta2 is Tom's trend decay and the second-moment decay elsewhere."""
    if kind is OptimizerKind.TOM:
        return settings.DEFAULT_BETA2_TOM
    if kind is OptimizerKind.RMSPROP:
        return settings.DEFAULT_RMSPROP_BETA
    return settings.DEFAULT_BETA2_ADAM


@dataclass(frozen=True)
class OptimizerConfig:
    """Hyperparameters for one optimizer.

    ``beta2`` is overloaded the way the update rules overload it: the
    trend decay for Tom, the second-moment decay for Adam and AMSGrad and
    the squared-gradient decay for RMSProp. Left as None it takes the
    kind's default. ``forecast_bias_correction`` left as None follows
    ``bias_correction``.
    """

    kind: OptimizerKind
    alpha: float = settings.DEFAULT_ALPHA
    beta1: float = settings.DEFAULT_BETA1
    beta2: Optional[float] = None
    beta3: float = settings.DEFAULT_BETA3
    epsilon: float = settings.DEFAULT_EPSILON
    momentum_beta: float = settings.DEFAULT_MOMENTUM_BETA
    initial_accumulator: float = settings.DEFAULT_INITIAL_ACCUMULATOR
    bias_correction: bool = True
    forecast_bias_correction: Optional[bool] = None

    def __post_init__(self):
        object.__setattr__(self, "kind", OptimizerKind.parse(self.kind))
        if self.beta2 is None:
            object.__setattr__(self, "beta2", _default_beta2(self.kind))
        # YAML 1.1 reads "1e-8" as a string
        for name in _REAL_FIELDS:
            try:
                object.__setattr__(self, name, float(getattr(self, name)))
            except (TypeError, ValueError) as err:
                raise InvalidConfig(f"{name} must be a real number") from err
        if self.forecast_bias_correction is None:
            object.__setattr__(
                self, "forecast_bias_correction", self.bias_correction
            )
        self.validate()

    def validate(self) -> None:
        """Raise InvalidConfig when a hyperparameter is out of range."""
        if not self.alpha > 0:
            raise InvalidConfig(f"alpha must be > 0, got {self.alpha}")
        if not self.epsilon > 0:
            raise InvalidConfig(f"epsilon must be > 0, got {self.epsilon}")
        if not self.initial_accumulator >= 0:
            raise InvalidConfig(
                "initial_accumulator must be >= 0, "
                f"got {self.initial_accumulator}"
            )
        for name in ("beta1", "beta3", "momentum_beta"):
            value = getattr(self, name)
            if not 0 <= value < 1:
                raise InvalidConfig(f"{name} must be in [0, 1), got {value}")
        # beta2 = 1 freezes Tom's trend at zero, which turns Tom into Adam
        upper_ok = self.beta2 <= 1 if self.kind is OptimizerKind.TOM \
            else self.beta2 < 1
        if not (0 <= self.beta2 and upper_ok):
            raise InvalidConfig(
                f"beta2={self.beta2} out of range for {self.kind.value}"
            )

    def as_dict(self) -> Dict[str, Any]:
        """Plain mapping with the kind as its string name."""
        data = asdict(self)
        data["kind"] = self.kind.value
        return data

    def with_overrides(self, **changes: Any) -> "OptimizerConfig":
        return replace(self, **changes)


FIELD_NAMES = frozenset(f.name for f in fields(OptimizerConfig))


def make_optimizer_config(
    kind: "str | OptimizerKind", **overrides: Any
) -> OptimizerConfig:
    """Build a validated config with the kind's defaults."""
    unknown = set(overrides) - FIELD_NAMES
    if unknown:
        raise InvalidConfig(f"Unknown optimizer keys: {sorted(unknown)}")
    return OptimizerConfig(kind=OptimizerKind.parse(kind), **overrides)


def optimizer_config_from_mapping(
    mapping: Mapping[str, Any]
) -> OptimizerConfig:
    """Build a config from a YAML mapping; unknown keys are errors."""
    if not isinstance(mapping, Mapping):
        raise InvalidConfig("optimizer section must be a mapping")
    if "kind" not in mapping:
        raise InvalidConfig("optimizer section needs a 'kind'")
    data = dict(mapping)
    kind = data.pop("kind")
    try:
        return make_optimizer_config(kind, **data)
    except TypeError as err:
        raise InvalidConfig(str(err)) from err
