"""Experiment files and run records.

An experiment file is YAML with exactly these top-level keys::

    name: diabetes_tom           # optional, prefixes run ids
    dataset: diabetes            # bundled name or CSV path ...
    target_column: Y             # ... with its target (paths only)
    problem: {kind: quadratic, dim: 10, condition_number: 100, seed: 0}
    model: {hidden: [8, 10], activation: relu}
    loss: mse
    optimizer: {kind: Tom, alpha: 0.001}
    epochs: 200
    batch_size: full
    seeds: [0, 1, 2, 3, 4]
    split_ratio: 0.8
    output_dir: runs/diabetes_tom

Exactly one of ``dataset``/``problem`` is given. A suite file swaps
``dataset``/``problem``/``optimizer`` for the lists ``problems`` and
``optimizers``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..core import settings
from ..core.config import read_yaml, get_setting
from ..core.errors import InvalidConfig
from ..model.network import LossKind
from ..optim.config import (
    OptimizerConfig,
    make_optimizer_config,
    optimizer_config_from_mapping,
)
from ..record.csv import MetricRow

__all__ = [
    "ModelSpec",
    "ExperimentConfig",
    "SuiteConfig",
    "RunRecord",
    "optimizer_label",
    "parse_batch_size",
    "experiment_config_from_mapping",
    "load_experiment_config",
    "load_suite_config",
    "select_metric",
]

_EXPERIMENT_KEYS = frozenset({
    "name", "dataset", "target_column", "problem", "model", "loss",
    "optimizer", "epochs", "batch_size", "seeds", "split_ratio",
    "output_dir",
})
_SUITE_KEYS = (_EXPERIMENT_KEYS - {"dataset", "problem", "optimizer"}) | {
    "problems", "optimizers",
}
_MODEL_KEYS = frozenset({"hidden", "layer_sizes", "activation"})


def _reject_unknown(mapping: Mapping[str, Any], allowed, where: str) -> None:
    unknown = set(mapping) - set(allowed)
    if unknown:
        raise InvalidConfig(f"Unknown {where} keys: {sorted(unknown)}")


@dataclass(frozen=True)
class ModelSpec:
    """Hidden layer widths, or the full layer list checked against data."""

    hidden: Tuple[int, ...] = (8, 10)
    layer_sizes: Optional[Tuple[int, ...]] = None
    activation: str = "relu"

    def __post_init__(self):
        if self.activation != "relu":
            raise InvalidConfig(
                f"Only relu hidden layers are supported, got "
                f"{self.activation!r}"
            )

    @classmethod
    def from_mapping(cls, mapping: Optional[Mapping[str, Any]]) -> "ModelSpec":
        if mapping is None:
            return cls()
        if not isinstance(mapping, Mapping):
            raise InvalidConfig("model section must be a mapping")
        _reject_unknown(mapping, _MODEL_KEYS, "model")
        if "hidden" in mapping and "layer_sizes" in mapping:
            raise InvalidConfig("Give model.hidden or model.layer_sizes")
        layers = mapping.get("layer_sizes")
        return cls(
            hidden=tuple(int(h) for h in mapping.get("hidden", (8, 10))),
            layer_sizes=tuple(int(s) for s in layers) if layers else None,
            activation=str(mapping.get("activation", "relu")),
        )

    def resolve(self, n_in: int, n_out: int) -> Tuple[int, ...]:
        if self.layer_sizes is None:
            return (n_in, *self.hidden, n_out)
        if self.layer_sizes[0] != n_in or self.layer_sizes[-1] != n_out:
            raise InvalidConfig(
                f"model.layer_sizes {list(self.layer_sizes)} do not fit "
                f"{n_in} inputs and {n_out} outputs"
            )
        return self.layer_sizes

    def as_dict(self) -> Dict[str, Any]:
        if self.layer_sizes is not None:
            return {"layer_sizes": list(self.layer_sizes),
                    "activation": self.activation}
        return {"hidden": list(self.hidden), "activation": self.activation}


def parse_batch_size(value: Any) -> Optional[int]:
    """``full``/null means one step per epoch over the whole train split."""
    if value is None or str(value).strip().lower() == "full":
        return None
    try:
        size = int(value)
    except (TypeError, ValueError) as err:
        raise InvalidConfig(f"batch_size must be 'full' or int: {value!r}") \
            from err
    if size < 1:
        raise InvalidConfig(f"batch_size must be >= 1, got {size}")
    return size


def _parse_seeds(value: Any) -> Tuple[int, ...]:
    if isinstance(value, int):
        value = [value]
    if not value:
        raise InvalidConfig("seeds must be a nonempty list of integers")
    try:
        return tuple(int(s) for s in value)
    except (TypeError, ValueError) as err:
        raise InvalidConfig(f"seeds must be integers: {value!r}") from err


def _parse_loss(value: Any) -> Optional[LossKind]:
    return None if value is None else LossKind.parse(value)


def _default_output_dir() -> Path:
    return Path(get_setting("harness.output_dir", "runs"))


@dataclass(frozen=True)
class ExperimentConfig:
    optimizer: OptimizerConfig
    dataset: Optional[str] = None
    problem: Optional[Dict[str, Any]] = None
    target_column: Optional[str] = None
    model: ModelSpec = field(default_factory=ModelSpec)
    loss: Optional[LossKind] = None
    epochs: int = 200
    batch_size: Optional[int] = None
    seeds: Tuple[int, ...] = (0,)
    split_ratio: float = settings.DEFAULT_SPLIT_RATIO
    output_dir: Path = field(default_factory=_default_output_dir)
    name: Optional[str] = None

    def __post_init__(self):
        if (self.dataset is None) == (self.problem is None):
            raise InvalidConfig("Give exactly one of dataset or problem")
        if int(self.epochs) < 1:
            raise InvalidConfig(f"epochs must be >= 1, got {self.epochs}")
        object.__setattr__(self, "epochs", int(self.epochs))
        object.__setattr__(self, "seeds", _parse_seeds(self.seeds))
        object.__setattr__(self, "split_ratio", float(self.split_ratio))
        if not 0 < self.split_ratio < 1:
            raise InvalidConfig(
                f"split_ratio must lie in (0, 1), got {self.split_ratio}"
            )
        object.__setattr__(self, "output_dir", Path(self.output_dir))

    @property
    def label(self) -> str:
        """Name used in run ids and the ``dataset`` metrics column."""
        if self.dataset is not None:
            return Path(str(self.dataset)).stem
        kind = str(self.problem.get("kind", "problem")).lower()
        dim = self.problem.get("dim")
        return f"{kind}{dim}" if dim is not None else kind

    def as_dict(self) -> Dict[str, Any]:
        """The experiment as it would be written back to YAML."""
        data: Dict[str, Any] = {}
        if self.name is not None:
            data["name"] = self.name
        if self.dataset is not None:
            data["dataset"] = str(self.dataset)
            if self.target_column is not None:
                data["target_column"] = self.target_column
        else:
            data["problem"] = dict(self.problem)
        data["model"] = self.model.as_dict()
        if self.loss is not None:
            data["loss"] = self.loss.value
        data["optimizer"] = self.optimizer.as_dict()
        data["epochs"] = self.epochs
        data["batch_size"] = (
            "full" if self.batch_size is None else self.batch_size
        )
        data["seeds"] = list(self.seeds)
        data["split_ratio"] = self.split_ratio
        data["output_dir"] = str(self.output_dir)
        return data


def _common_fields(mapping: Mapping[str, Any]) -> Dict[str, Any]:
    out: Dict[str, Any] = {
        "model": ModelSpec.from_mapping(mapping.get("model")),
        "loss": _parse_loss(mapping.get("loss")),
        "batch_size": parse_batch_size(mapping.get("batch_size")),
    }
    for key in ("name", "target_column", "epochs", "seeds", "split_ratio",
                "output_dir"):
        if mapping.get(key) is not None:
            out[key] = mapping[key]
    return out


def experiment_config_from_mapping(
    mapping: Mapping[str, Any]
) -> ExperimentConfig:
    if not isinstance(mapping, Mapping):
        raise InvalidConfig("An experiment file must hold a mapping")
    _reject_unknown(mapping, _EXPERIMENT_KEYS, "experiment")
    if "optimizer" not in mapping:
        raise InvalidConfig("experiment needs an optimizer section")
    problem = mapping.get("problem")
    if problem is not None and not isinstance(problem, Mapping):
        raise InvalidConfig("problem section must be a mapping")
    return ExperimentConfig(
        optimizer=optimizer_config_from_mapping(mapping["optimizer"]),
        dataset=mapping.get("dataset"),
        problem=dict(problem) if problem is not None else None,
        **_common_fields(mapping),
    )


def load_experiment_config(path: Path) -> ExperimentConfig:
    """Read and validate one experiment YAML file."""
    path = Path(path)
    if not path.exists():
        raise InvalidConfig(f"No such experiment file: {path}")
    return experiment_config_from_mapping(read_yaml(path))


@dataclass(frozen=True)
class SuiteConfig:
    """Problems x optimizers x seeds, sharing every other setting."""

    problems: Tuple[Any, ...]
    optimizers: Tuple[OptimizerConfig, ...]
    template: Dict[str, Any]

    def experiments(self) -> List[ExperimentConfig]:
        out = []
        for problem in self.problems:
            for optimizer in self.optimizers:
                target = (
                    {"problem": dict(problem)} if isinstance(problem, Mapping)
                    else {"dataset": str(problem)}
                )
                out.append(ExperimentConfig(
                    optimizer=optimizer, **target, **self.template
                ))
        return out


def load_suite_config(path: Path) -> SuiteConfig:
    path = Path(path)
    if not path.exists():
        raise InvalidConfig(f"No such suite file: {path}")
    mapping = read_yaml(path)
    _reject_unknown(mapping, _SUITE_KEYS, "suite")
    problems = mapping.get("problems") or []
    optimizers = mapping.get("optimizers") or []
    if not problems or not optimizers:
        raise InvalidConfig("A suite needs nonempty problems and optimizers")
    return SuiteConfig(
        problems=tuple(problems),
        optimizers=tuple(optimizer_config_from_mapping(o) for o in optimizers),
        template=_common_fields(mapping),
    )


def optimizer_label(config: OptimizerConfig) -> str:
    """Kind name, plus any hyperparameters that differ from its defaults.

    ``Tom`` for a default Tom, ``Tom[beta2=1]`` for the Adam-equivalent one.
    """
    baseline = make_optimizer_config(config.kind).as_dict()
    changed = [
        f"{key}={value:g}" if isinstance(value, float) else f"{key}={value}"
        for key, value in config.as_dict().items()
        if key != "kind" and value != baseline[key]
    ]
    if not changed:
        return config.kind.value
    return f"{config.kind.value}[{','.join(changed)}]"


@dataclass
class RunRecord:
    """Every metric row of one (experiment, seed) run."""

    run_id: str
    seed: int
    optimizer: str
    dataset: str
    rows: List[MetricRow] = field(default_factory=list)
    diverged: bool = False
    diverged_epoch: Optional[int] = None
    metadata: Dict[str, Any] = field(default_factory=dict)

    def add(self, epoch: int, split: str, metric: str, value: float) -> None:
        self.rows.append(MetricRow(
            self.run_id, self.optimizer, self.dataset, self.seed,
            epoch, split, metric, float(value),
        ))

    @property
    def metrics(self) -> Tuple[str, ...]:
        return tuple(dict.fromkeys(r.metric for r in self.rows))

    @property
    def epochs(self) -> int:
        return max((r.epoch for r in self.rows), default=0)

    def series(self, metric: str, split: str = "test") -> np.ndarray:
        """Values of one metric/split in epoch order."""
        return np.array([
            r.value for r in self.rows
            if r.metric == metric and r.split == split
        ])

    def value_at(
        self, epoch: int, metric: str, split: str = "test"
    ) -> Optional[float]:
        for r in self.rows:
            if r.epoch == epoch and r.metric == metric and r.split == split:
                return r.value
        return None

    def final(self, metric: str, split: str = "test") -> float:
        values = self.series(metric, split)
        return float(values[-1]) if values.size else float("nan")


def select_metric(records: Sequence[RunRecord]) -> str:
    """Headline metric: mse for regression, loss otherwise."""
    names = {m for r in records for m in r.metrics}
    return "mse" if "mse" in names else "loss"
