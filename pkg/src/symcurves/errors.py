"""Exception hierarchy shared by the library and the command line front end.

Every exception carries a stable ``code`` string; the CLI maps the class to
an exit status (domain errors exit 3, resource guards exit 4).
"""

from __future__ import annotations


class SymcurvesError(Exception):
    code = "error"


class DomainError(SymcurvesError, ValueError):
    """Inputs outside the mathematical domain of an operation."""

    code = "domain_error"


class ResourceGuardError(SymcurvesError, RuntimeError):
    """A computation refused because its cost guard would be exceeded."""

    code = "resource_guard"


class ConstructionError(SymcurvesError, RuntimeError):
    """An internal construction failed in a way the theory says it cannot."""

    code = "construction_error"


class NonRationalSingularityError(SymcurvesError, RuntimeError):
    """Singular points exist but are not defined over the rationals.

    ``minimal_polynomials`` holds the irreducible factors (as strings) whose
    roots carry the offending coordinates.
    """

    code = "non_rational_singularity"

    def __init__(self, message: str, minimal_polynomials: list[str]):
        super().__init__(message)
        self.minimal_polynomials = minimal_polynomials


class StageError(SymcurvesError, RuntimeError):
    """Failure inside a multi-stage pipeline, tagged with the stage name."""

    code = "stage_failed"

    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"stage {stage!r} failed: {cause}")
        self.stage = stage
        self.cause = cause
        if isinstance(cause, SymcurvesError):
            self.code = cause.code
