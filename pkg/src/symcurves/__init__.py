"""Divisor-class calculus on symmetric products of curves, linear series bounds,
and the explicit embedding of ``C(3)`` for plane curves."""

from symcurves.errors import (
    ConstructionError,
    DomainError,
    NonRationalSingularityError,
    ResourceGuardError,
    StageError,
    SymcurvesError,
)

__version__ = "0.1.0"

__all__ = [
    "ConstructionError",
    "DomainError",
    "NonRationalSingularityError",
    "ResourceGuardError",
    "StageError",
    "SymcurvesError",
]
