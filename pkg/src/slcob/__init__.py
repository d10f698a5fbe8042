"""Exact computations around algebraic SL-cobordism.

Chern numbers of iterated projective bundles and hypersurfaces, the
four-parameter elliptic genus, flop differences, generator criteria for the
SL-cobordism ring, and Adams E2 bookkeeping.
"""
from . import adams, chern, flops, genus, lazard
from .errors import (CalibrationError, ContextError, DegreeError, DomainError, FlopDefect,
                     InternalConsistencyError, NonInvertibleError, StructuralDefect)

__version__ = "0.1.0"

__all__ = ["adams", "chern", "flops", "genus", "lazard", "CalibrationError", "ContextError",
           "DegreeError", "DomainError", "FlopDefect", "InternalConsistencyError",
           "NonInvertibleError", "StructuralDefect"]
