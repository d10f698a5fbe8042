"""Exception types shared across the package."""
from .exactalg.poly import ContextError
from .exactalg.series import NonInvertibleError


class DomainError(ValueError):
    """Argument outside the operation's domain."""


class DegreeError(ValueError):
    """Degrees or weights do not match."""


class InternalConsistencyError(ArithmeticError):
    """A value that must be integral (or otherwise constrained) is not."""


class CalibrationError(RuntimeError):
    """No uniformizer convention reproduces the reference genus values."""


class StructuralDefect(RuntimeError):
    """A generator table violates its expected shape."""


class FlopDefect(AssertionError):
    """Elliptic genus does not vanish on a flop difference."""

    def __init__(self, difference):
        self.difference = difference
        super().__init__(f"genus of flop difference is nonzero: {difference}")


__all__ = [
    "ContextError", "NonInvertibleError", "DomainError", "DegreeError",
    "InternalConsistencyError", "CalibrationError", "StructuralDefect", "FlopDefect",
]
