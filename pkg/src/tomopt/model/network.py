"""Dense feed-forward network with hand-written backpropagation.

Parameters live in one flat float64 vector so any optimizer can drive
them. Layer ``i`` occupies a weight block (fan_out x fan_in, row-major)
followed by its fan_out biases. Hidden layers use ReLU with derivative 0
at 0; the output layer is affine. Cross-entropy applies the softmax
inside the loss.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Sequence, Tuple, Union

import numpy as np

from ..core.errors import InvalidConfig, InvalidShape, ShapeMismatch
from ..core.rng import make_rng

__all__ = [
    "LossKind",
    "Model",
    "Batch",
    "Gradients",
    "init_model",
    "forward",
    "loss",
    "backward",
    "accuracy",
    "param_count",
    "flatten",
    "unflatten",
]


class LossKind(str, Enum):
    MSE = "mse"
    CROSS_ENTROPY = "cross_entropy"

    @classmethod
    def parse(cls, value: "str | LossKind") -> "LossKind":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace("-", "_")
        if key in ("ce", "crossentropy"):
            key = "cross_entropy"
        try:
            return cls(key)
        except ValueError as err:
            raise InvalidConfig(f"Unknown loss kind: {value!r}") from err


def _layer_slices(layer_sizes: Sequence[int]) -> List[Tuple[slice, slice]]:
    slices = []
    offset = 0
    for fan_in, fan_out in zip(layer_sizes[:-1], layer_sizes[1:]):
        w = slice(offset, offset + fan_out * fan_in)
        offset = w.stop
        b = slice(offset, offset + fan_out)
        offset = b.stop
        slices.append((w, b))
    return slices


def param_count(layer_sizes: Sequence[int]) -> int:
    return sum(
        fo * fi + fo for fi, fo in zip(layer_sizes[:-1], layer_sizes[1:])
    )


def _check_sizes(layer_sizes: Sequence[int]) -> Tuple[int, ...]:
    sizes = tuple(int(s) for s in layer_sizes)
    if len(sizes) < 2:
        raise InvalidShape("A model needs at least input and output layers")
    if any(s < 1 for s in sizes):
        raise InvalidShape(f"Layer sizes must be >= 1, got {sizes}")
    return sizes


class _Blocks:
    """Per-layer weight/bias views into a flat vector."""

    layer_sizes: Tuple[int, ...]
    flat: np.ndarray

    def weight(self, i: int) -> np.ndarray:
        w, _ = _layer_slices(self.layer_sizes)[i]
        fan_in, fan_out = self.layer_sizes[i], self.layer_sizes[i + 1]
        return self.flat[w].reshape(fan_out, fan_in)

    def bias(self, i: int) -> np.ndarray:
        _, b = _layer_slices(self.layer_sizes)[i]
        return self.flat[b]

    @property
    def n_layers(self) -> int:
        return len(self.layer_sizes) - 1


@dataclass
class Model(_Blocks):
    layer_sizes: Tuple[int, ...]
    flat: np.ndarray
    activation: str = "relu"
    output_activation: str = "linear"

    def __post_init__(self):
        self.layer_sizes = _check_sizes(self.layer_sizes)
        self.flat = np.asarray(self.flat, dtype=np.float64)
        if self.flat.shape != (param_count(self.layer_sizes),):
            raise InvalidShape(
                f"Expected {param_count(self.layer_sizes)} parameters, "
                f"got {self.flat.shape}"
            )
        if self.activation != "relu":
            raise InvalidShape(f"Unsupported activation {self.activation!r}")

    @property
    def params(self) -> np.ndarray:
        return self.flat

    def with_params(self, flat: np.ndarray) -> "Model":
        return Model(
            layer_sizes=self.layer_sizes,
            flat=np.array(flat, dtype=np.float64),
            activation=self.activation,
            output_activation=self.output_activation,
        )


@dataclass
class Gradients(_Blocks):
    layer_sizes: Tuple[int, ...]
    flat: np.ndarray


@dataclass
class Batch:
    """Rows of inputs with MSE targets (n x out) or class labels (n,)."""

    inputs: np.ndarray
    targets: np.ndarray

    def __post_init__(self):
        self.inputs = np.atleast_2d(np.asarray(self.inputs, dtype=np.float64))
        targets = np.asarray(self.targets)
        if targets.ndim == 0:
            targets = targets.reshape(1)
        self.targets = targets
        if len(self.targets) != len(self.inputs):
            raise ShapeMismatch(
                f"{len(self.inputs)} input rows but "
                f"{len(self.targets)} targets"
            )

    def __len__(self) -> int:
        return len(self.inputs)

    def subset(self, index: np.ndarray) -> "Batch":
        return Batch(self.inputs[index], self.targets[index])


def init_model(layer_sizes: Sequence[int], seed: int) -> Model:
    """Glorot-uniform weights, zero biases."""
    sizes = _check_sizes(layer_sizes)
    rng = make_rng(seed)
    flat = np.zeros(param_count(sizes), dtype=np.float64)
    for (w, _), fan_in, fan_out in zip(
        _layer_slices(sizes), sizes[:-1], sizes[1:]
    ):
        limit = np.sqrt(6.0 / (fan_in + fan_out))
        flat[w] = rng.uniform(-limit, limit, size=fan_out * fan_in)
    return Model(layer_sizes=sizes, flat=flat)


def _inputs_of(model: Model, data: Union[Batch, np.ndarray]) -> np.ndarray:
    x = data.inputs if isinstance(data, Batch) else np.atleast_2d(
        np.asarray(data, dtype=np.float64)
    )
    if x.shape[1] != model.layer_sizes[0]:
        raise ShapeMismatch(
            f"Model expects {model.layer_sizes[0]} features, got {x.shape[1]}"
        )
    return x


def _forward_cache(model: Model, x: np.ndarray):
    """Pre-activations and activations of every layer."""
    activations = [x]
    pre = []
    a = x
    last = model.n_layers - 1
    for i in range(model.n_layers):
        z = a @ model.weight(i).T + model.bias(i)
        pre.append(z)
        a = z if i == last else np.maximum(z, 0.0)
        activations.append(a)
    return pre, activations


def forward(model: Model, data: Union[Batch, np.ndarray]) -> np.ndarray:
    """Network outputs, one row per sample."""
    _, activations = _forward_cache(model, _inputs_of(model, data))
    return activations[-1]


def _log_softmax(logits: np.ndarray) -> np.ndarray:
    shifted = logits - logits.max(axis=1, keepdims=True)
    return shifted - np.log(np.exp(shifted).sum(axis=1, keepdims=True))


def _as_labels(targets: np.ndarray, n_classes: int) -> np.ndarray:
    labels = np.asarray(targets).reshape(-1)
    if not np.all(labels == np.round(labels)):
        raise ShapeMismatch("Cross-entropy targets must be class indices")
    labels = labels.astype(np.int64)
    if labels.size and (labels.min() < 0 or labels.max() >= n_classes):
        raise ShapeMismatch(
            f"Class index out of range for {n_classes} classes"
        )
    return labels


def _as_regression_targets(targets: np.ndarray, shape) -> np.ndarray:
    y = np.asarray(targets, dtype=np.float64)
    if y.ndim == 1 and len(shape) == 2 and shape[1] == 1:
        y = y.reshape(-1, 1)
    if y.shape != tuple(shape):
        raise ShapeMismatch(
            f"Predictions {tuple(shape)} vs targets {y.shape}"
        )
    return y


def _loss_and_delta(kind: LossKind, predictions: np.ndarray, targets):
    """Loss value and its gradient with respect to the predictions."""
    predictions = np.asarray(predictions, dtype=np.float64)
    if kind is LossKind.MSE:
        # a flat vector is one prediction per sample
        if predictions.ndim == 1:
            predictions = predictions.reshape(-1, 1)
        y = _as_regression_targets(targets, predictions.shape)
        diff = predictions - y
        return float(np.mean(diff * diff)), 2.0 * diff / diff.size
    predictions = np.atleast_2d(predictions)
    n = len(predictions)
    labels = _as_labels(targets, predictions.shape[1])
    if len(labels) != n:
        raise ShapeMismatch(f"{n} rows of logits but {len(labels)} labels")
    log_p = _log_softmax(predictions)
    rows = np.arange(n)
    value = float(-np.mean(log_p[rows, labels]))
    delta = np.exp(log_p)
    delta[rows, labels] -= 1.0
    return value, delta / n


def loss(kind: "str | LossKind", predictions, targets) -> float:
    """Mean squared error or mean softmax cross-entropy."""
    value, _ = _loss_and_delta(LossKind.parse(kind), predictions, targets)
    return value


def backward(
    model: Model, batch: Batch, loss_kind: "str | LossKind"
) -> Tuple[float, Gradients]:
    """Loss and analytic gradient of the mean loss over *batch*."""
    kind = LossKind.parse(loss_kind)
    pre, activations = _forward_cache(model, _inputs_of(model, batch))
    value, delta = _loss_and_delta(kind, activations[-1], batch.targets)

    grads = Gradients(model.layer_sizes, np.zeros_like(model.flat))
    for i in reversed(range(model.n_layers)):
        if i != model.n_layers - 1:
            delta = delta * (pre[i] > 0.0)
        grads.weight(i)[...] = delta.T @ activations[i]
        grads.bias(i)[...] = delta.sum(axis=0)
        if i:
            delta = delta @ model.weight(i)
    return value, grads


def accuracy(logits, labels) -> float:
    """Top-1 accuracy; argmax ties go to the lowest class index."""
    logits = np.atleast_2d(np.asarray(logits, dtype=np.float64))
    labels = _as_labels(labels, logits.shape[1])
    return float(np.mean(np.argmax(logits, axis=1) == labels))


def flatten(blocks: Union[Model, Gradients]) -> np.ndarray:
    """Copy of the flat parameter (or gradient) vector."""
    return np.array(blocks.flat, dtype=np.float64)


def unflatten(template: Model, flat) -> Model:
    """A model shaped like *template* holding the values in *flat*."""
    return template.with_params(flat)
