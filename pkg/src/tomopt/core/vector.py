"""Dense float64 vector kernel.

Every parameter, gradient and optimizer buffer is a 1-D ``numpy.ndarray``
of dtype float64. The helpers here add the length and domain checks the
optimizers rely on; all of them return new arrays.
"""

from __future__ import annotations

from typing import Callable, Dict, Union

import numpy as np

from .errors import DomainError, LengthMismatch
from .settings import DTYPE

__all__ = [
    "RealVector",
    "as_vector",
    "zeros",
    "elementwise",
    "dot",
    "check_lengths",
]

RealVector = np.ndarray
Operand = Union[RealVector, float, int, None]


def as_vector(values) -> RealVector:
    """Return *values* as a contiguous 1-D float64 array (copied)."""
    arr = np.array(values, dtype=DTYPE, copy=True).reshape(-1)
    return np.ascontiguousarray(arr)


def zeros(n: int) -> RealVector:
    return np.zeros(n, dtype=DTYPE)


def check_lengths(*vectors: RealVector) -> int:
    """Raise LengthMismatch unless all vectors share one length."""
    lengths = {len(v) for v in vectors}
    if len(lengths) > 1:
        raise LengthMismatch(f"Vector lengths differ: {sorted(lengths)}")
    return lengths.pop() if lengths else 0


def _binary(a: RealVector, b: Operand) -> RealVector:
    if np.ndim(b) == 0:
        return np.full(len(a), float(b), dtype=DTYPE)
    b = np.asarray(b, dtype=DTYPE)
    check_lengths(a, b)
    return b


def _div(a: RealVector, b: RealVector) -> RealVector:
    if np.any(b == 0.0):
        raise DomainError("Division by zero")
    return a / b


def _sqrt(a: RealVector, _b) -> RealVector:
    if np.any(a < 0.0):
        raise DomainError("Square root of a negative value")
    return np.sqrt(a)


_BINARY: Dict[str, Callable[[RealVector, RealVector], RealVector]] = {
    "add": np.add,
    "sub": np.subtract,
    "mul": np.multiply,
    "div": _div,
    "max": np.maximum,
}

_UNARY: Dict[str, Callable[[RealVector, Operand], RealVector]] = {
    "sqrt": _sqrt,
    # x * x so square and mul agree bit for bit
    "square": lambda a, _b: a * a,
}


def elementwise(op: str, a, b: Operand = None) -> RealVector:
    """Apply *op* coordinate by coordinate.

    ``op`` is one of add, sub, mul, div, max (``b`` a vector of the same
    length or a scalar), scale (``b`` a scalar), sqrt or square (``b``
    ignored).
    """
    a = np.asarray(a, dtype=DTYPE)
    if op == "scale":
        if np.ndim(b) != 0:
            raise LengthMismatch("scale takes a scalar factor")
        return a * float(b)
    if op in _UNARY:
        return _UNARY[op](a, b)
    if op in _BINARY:
        return _BINARY[op](a, _binary(a, b))
    raise ValueError(f"Unknown elementwise op: {op}")


def dot(a, b) -> float:
    a = np.asarray(a, dtype=DTYPE)
    b = np.asarray(b, dtype=DTYPE)
    check_lengths(a, b)
    return float(np.dot(a, b))
