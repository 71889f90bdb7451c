"""Exception types raised across tomopt."""

from __future__ import annotations

__all__ = [
    "TomoptError",
    "LengthMismatch",
    "DomainError",
    "InvalidConfig",
    "KindMismatch",
    "EmptySeries",
    "SeriesTooShort",
    "InvalidParam",
    "DegenerateBetas",
    "InvalidShape",
    "ShapeMismatch",
    "ParseError",
    "MissingColumn",
    "TooFewRows",
    "EmptyInput",
    "DivergenceDetected",
]


class TomoptError(Exception):
    """Base class for every error tomopt raises on purpose."""


class LengthMismatch(TomoptError, ValueError):
    pass


class DomainError(TomoptError, ValueError):
    pass


class InvalidConfig(TomoptError, ValueError):
    pass


class KindMismatch(TomoptError, ValueError):
    pass


class EmptySeries(TomoptError, ValueError):
    pass


class SeriesTooShort(TomoptError, ValueError):
    pass


class InvalidParam(TomoptError, ValueError):
    pass


class DegenerateBetas(InvalidParam):
    """beta1 == beta2 makes the telescoped fraction 0/0."""


class InvalidShape(TomoptError, ValueError):
    pass


class ShapeMismatch(TomoptError, ValueError):
    pass


class ParseError(TomoptError, ValueError):
    """A CSV cell that is not a number."""

    def __init__(self, row: int, col: str, value: object):
        self.row = row
        self.col = col
        self.value = value
        super().__init__(
            f"Cannot parse {value!r} at row {row}, column {col!r}"
        )


class MissingColumn(TomoptError, KeyError):
    pass


class TooFewRows(TomoptError, ValueError):
    pass


class EmptyInput(TomoptError, ValueError):
    pass


class DivergenceDetected(TomoptError, ArithmeticError):
    """A run produced a non-finite loss."""

    def __init__(self, run_id: str, epoch: int, value: float):
        self.run_id = run_id
        self.epoch = epoch
        self.value = value
        super().__init__(
            f"Run {run_id} diverged at epoch {epoch} (loss={value})"
        )
