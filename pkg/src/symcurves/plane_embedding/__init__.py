"""Exact plane geometry: forms, points, the map C(3) -> P^9 and the quintic construction."""

from symcurves.plane_embedding.forms import HomogeneousForm, monomials
from symcurves.plane_embedding.points import Divisor3, ProjectivePoint
from symcurves.plane_embedding.quintic import (
    ConicParametrization,
    construct_quintic,
    verify_quintic_noncollinearity,
)
from symcurves.plane_embedding.sections import (
    alt_section_eval,
    separating_section,
    subordination_dimension,
    sym_section_eval,
)
from symcurves.plane_embedding.singular import singular_points_search, smooth_at
from symcurves.plane_embedding.veronese import collinear_p10, dual_line, phi3, veronese3

__all__ = [
    "ConicParametrization",
    "Divisor3",
    "HomogeneousForm",
    "ProjectivePoint",
    "alt_section_eval",
    "collinear_p10",
    "construct_quintic",
    "dual_line",
    "monomials",
    "phi3",
    "separating_section",
    "singular_points_search",
    "smooth_at",
    "subordination_dimension",
    "sym_section_eval",
    "verify_quintic_noncollinearity",
    "veronese3",
]
