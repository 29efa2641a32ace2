"""Evaluating symmetric and alternating products of sections on point tuples.

For sections ``s_1..s_n`` of a line bundle and points ``x_1..x_n`` the
evaluation matrix is ``M[i][j] = s_i(x_j)``.  The symmetric product
``s_1 (.) ... (.) s_n`` evaluates to ``perm(M)`` and the wedge product to
``det(M)``.  Values depend on the chosen affine representatives of the points
(by a nonzero factor); only vanishing is intrinsic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from symcurves.errors import DomainError
from symcurves.plane_embedding.forms import HomogeneousForm, monomials
from symcurves.plane_embedding.linalg import determinant, nullspace, permanent, rank
from symcurves.plane_embedding.points import Divisor3, ProjectivePoint, Rational, representative

PointLike = Union[ProjectivePoint, Sequence[Rational]]


def evaluation_matrix(sections: Sequence[HomogeneousForm], points: Sequence[PointLike]) -> list[list[Fraction]]:
    if len(sections) != len(points):
        raise DomainError(f"{len(sections)} sections but {len(points)} points")
    if not sections:
        raise DomainError("need at least one section")
    degrees = {s.degree for s in sections if not s.is_zero()}
    if len(degrees) > 1:
        raise DomainError(f"sections of different degrees {sorted(degrees)}")
    return [[s.evaluate(x) for x in points] for s in sections]


def sym_section_eval(sections: Sequence[HomogeneousForm], points: Sequence[PointLike]) -> Fraction:
    return Fraction(permanent(evaluation_matrix(sections, points)))


def alt_section_eval(sections: Sequence[HomogeneousForm], points: Sequence[PointLike]) -> Fraction:
    return Fraction(determinant(evaluation_matrix(sections, points)))


def subordination_dimension(sections: Sequence[HomogeneousForm], points: Sequence[PointLike]) -> int:
    """Dimension of the space of forms in ``span(sections)`` vanishing at every point.

    Worked out on coefficient vectors: the forms through the points are the
    kernel of the monomial evaluation matrix, and the answer is
    ``dim span + dim kernel - dim(span + kernel)``.  Positive exactly when
    the points are subordinated to a member of the linear system.
    """
    if not sections:
        raise DomainError("need at least one section")
    degree = sections[0].degree
    basis = monomials(degree, sections[0].nvars)
    span = [s.to_vector() for s in sections]
    through = nullspace([[_monomial_value(e, representative(x)) for e in basis] for x in points],
                        len(basis))
    return rank(span) + len(through) - rank(span + through)


def _monomial_value(exp, x) -> Fraction:
    v = Fraction(1)
    for xi, e in zip(x, exp):
        v *= xi ** e
    return v


@dataclass(frozen=True)
class SeparatingSection:
    """``sigma = s0^(p0) (.) s1^(n - p0)`` vanishing on one divisor but not the other."""

    p0: int
    s0: HomogeneousForm
    s1: HomogeneousForm
    n: int = 3

    @property
    def sections(self) -> list[HomogeneousForm]:
        return [self.s0] * self.p0 + [self.s1] * (self.n - self.p0)

    def evaluate(self, divisor: Divisor3) -> Fraction:
        return sym_section_eval(self.sections, list(divisor.points))


def _line_through_avoiding(x0: ProjectivePoint, avoid: Sequence[ProjectivePoint]) -> HomogeneousForm:
    u, v = (HomogeneousForm.linear(vec) for vec in nullspace([x0.coords], 3))
    k = 0
    while True:
        for line in (u + v * k, u * k + v) if k else (u, v):
            if all(line.evaluate(p) != 0 for p in avoid):
                return line
        k += 1


def separating_section(D: Divisor3, D_prime: Divisor3) -> SeparatingSection:
    """A section of the symmetrized bundle with ``sigma(D) != 0`` and ``sigma(D') = 0``.

    Picks a point ``x0`` occurring more often in ``D'`` than in ``D``, a line
    ``s1`` through ``x0`` missing the rest of both supports, and a coordinate
    line ``s0`` not through ``x0``.
    """
    if D == D_prime:
        raise DomainError("cannot separate a divisor from itself")
    mult, mult_prime = D.multiplicities(), D_prime.multiplicities()
    support = sorted(set(mult) | set(mult_prime))
    x0 = next(p for p in support if mult.get(p, 0) < mult_prime.get(p, 0))
    p0 = mult.get(x0, 0)
    s1 = _line_through_avoiding(x0, [p for p in support if p != x0])
    idx = next(i for i, c in enumerate(x0.coords) if c)
    s0 = HomogeneousForm.variable(idx)
    return SeparatingSection(p0, s0, s1, n=len(D.points))
