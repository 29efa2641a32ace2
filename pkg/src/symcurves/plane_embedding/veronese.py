"""The map ``x1 + x2 + x3 -> gamma(x1) gamma(x2) gamma(x3)`` from triples of points of P^2 to P^9.

``gamma`` sends ``(a:b:c)`` to the line ``aX + bY + cZ``.  A product of three
such lines is a cubic form, read off in the lex-descending cubic monomial
basis ``X^3, X^2Y, X^2Z, XY^2, XYZ, XZ^2, Y^3, Y^2Z, YZ^2, Z^3``.  Any other
identification of P^2 with its dual changes the image by a projective
transformation of P^9, which leaves collinearity untouched.
"""

from __future__ import annotations

from typing import Sequence, Union

from symcurves.errors import DomainError
from symcurves.plane_embedding.forms import HomogeneousForm, monomials
from symcurves.plane_embedding.linalg import rank
from symcurves.plane_embedding.points import Divisor3, ProjectivePoint, Rational

CUBIC_BASIS = monomials(3, 3)


def _as_plane_point(x: Union[ProjectivePoint, Sequence[Rational]]) -> ProjectivePoint:
    p = x if isinstance(x, ProjectivePoint) else ProjectivePoint(x)
    if p.dim != 2:
        raise DomainError(f"expected a point of P^2, got {p}")
    return p


def dual_line(x: Union[ProjectivePoint, Sequence[Rational]]) -> HomogeneousForm:
    return HomogeneousForm.linear(_as_plane_point(x).coords)


def cubic_of(divisor: Divisor3) -> HomogeneousForm:
    a, b, c = (dual_line(p) for p in divisor.points)
    return a * b * c


def phi3(divisor: Divisor3) -> ProjectivePoint:
    return ProjectivePoint(cubic_of(divisor).to_vector())


def veronese3(x: Union[ProjectivePoint, Sequence[Rational]]) -> ProjectivePoint:
    return phi3(Divisor3.triple(_as_plane_point(x)))


def collinear_p10(p: ProjectivePoint, q: ProjectivePoint, r: ProjectivePoint) -> bool:
    """True when three points of P^9 span at most a line."""
    for pt in (p, q, r):
        if len(pt) != 10:
            raise DomainError(f"expected a point of P^9, got {pt}")
    return rank([p.coords, q.coords, r.coords]) <= 2
