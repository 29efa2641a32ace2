"""A plane quintic meeting a conic in ``3(p1 + p2 + p3) + q``, and the check that
the three points ``phi(3 p_i)`` of P^9 are not collinear.

The conic ``C0`` is given by a parametrization ``P^1 -> P^2`` by three binary
quadrics.  Quintics are pulled back to binary forms of degree 10; asking the
pull-back to be a multiple of ``L_p1^3 L_p2^3 L_p3^3 L_q`` is 10 linear
conditions on the 21 quintic coefficients.  A member of the solution space is
chosen by a seeded random integer combination, rejecting members that contain
the conic or are singular at a marked point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

from symcurves.errors import ConstructionError, DomainError, StageError, SymcurvesError
from symcurves.ns_calculus import SymmetricProductSpace, sym_degree
from symcurves.plane_embedding.forms import (
    HomogeneousForm,
    binary_divide,
    binary_from_coefficients,
    linear_factor,
    monomials,
)
from symcurves.plane_embedding.linalg import nullspace, rank
from symcurves.plane_embedding.points import ProjectivePoint, Rational, format_rational
from symcurves.plane_embedding.singular import singular_points_search, smooth_at
from symcurves.plane_embedding.veronese import collinear_p10, veronese3

QUINTIC_MONOMIALS = monomials(5, 3)
DEFAULT_SEED = 1
MAX_ATTEMPTS = 50
COEFF_RANGE = 3

Param = tuple[Fraction, Fraction]


def _param(p: Sequence[Rational]) -> Param:
    a, b = (Fraction(v) for v in p)
    if a == 0 and b == 0:
        raise DomainError("(0:0) is not a point of P^1")
    return a, b


def _same_param(p: Param, q: Param) -> bool:
    return p[0] * q[1] == p[1] * q[0]


@dataclass(frozen=True)
class ConicParametrization:
    """Three binary quadrics ``(f0, f1, f2)`` mapping ``P^1`` onto a smooth conic."""

    forms: tuple[HomogeneousForm, HomogeneousForm, HomogeneousForm]

    def __post_init__(self):
        if len(self.forms) != 3 or any(f.nvars != 2 or f.degree != 2 for f in self.forms):
            raise DomainError("a conic parametrization is three binary quadratic forms")
        # independent quadrics <=> no base point and a smooth image
        if rank([f.to_vector() for f in self.forms]) != 3:
            raise DomainError("parametrizing quadrics are dependent: base point or degenerate image")

    @classmethod
    def standard(cls) -> "ConicParametrization":
        """``(s:t) -> (s^2 : st : t^2)``, image ``XZ - Y^2 = 0``."""
        return cls.from_coefficients([[1, 0, 0], [0, 1, 0], [0, 0, 1]])

    @classmethod
    def from_coefficients(cls, rows: Sequence[Sequence[Rational]]) -> "ConicParametrization":
        return cls(tuple(binary_from_coefficients(r) for r in rows))

    def point(self, param: Sequence[Rational]) -> ProjectivePoint:
        p = _param(param)
        return ProjectivePoint([f.evaluate(p) for f in self.forms])

    def pullback(self, form: HomogeneousForm) -> HomogeneousForm:
        return form.substitute(self.forms)

    def equation(self) -> HomogeneousForm:
        """The quadric vanishing on the image, unique up to scale."""
        quad = monomials(2, 3)
        cols = [self.pullback(HomogeneousForm(2, {e: 1})).to_vector() for e in quad]
        kernel = nullspace([list(r) for r in zip(*cols)], len(quad))
        if len(kernel) != 1:
            raise ConstructionError(f"expected a unique conic, kernel has dimension {len(kernel)}")
        return HomogeneousForm.from_vector(2, _integral(kernel[0]))

    def to_dict(self) -> dict:
        return {"forms": [[format_rational(c) for c in f.to_vector()] for f in self.forms]}


def _integral(vec: Sequence[Fraction]) -> list[Fraction]:
    den = lcm(*(v.denominator for v in vec))
    return [v * den for v in vec]


def _target_divisor(p1: Param, p2: Param, p3: Param, q: Param) -> HomogeneousForm:
    return (linear_factor(p1) ** 3) * (linear_factor(p2) ** 3) * (linear_factor(p3) ** 3) * linear_factor(q)


def quintic_condition_matrix(par: ConicParametrization, target: HomogeneousForm) -> list[list[Fraction]]:
    """Rows expressing ``pullback(F) = c * target`` as linear equations in F's coefficients."""
    cols = [par.pullback(HomogeneousForm(5, {e: 1})).to_vector() for e in QUINTIC_MONOMIALS]
    pull = [list(r) for r in zip(*cols)]          # 11 x 21
    t = target.to_vector()
    k = next(i for i, v in enumerate(t) if v)
    # pull_j * t_k - pull_k * t_j = 0 for every j != k
    return [[a * t[k] - b * t[j] for a, b in zip(pull[j], pull[k])] for j in range(len(t)) if j != k]


@dataclass
class QuinticConstruction:
    conic: ConicParametrization
    p: tuple[Param, Param, Param]
    q: Param
    quintic: HomogeneousForm
    nullity: int
    pullback_constant: Fraction
    seed: int
    attempt: int
    singular_points: Optional[list[ProjectivePoint]] = None

    @property
    def marked_points(self) -> list[ProjectivePoint]:
        return [self.conic.point(x) for x in self.p] + [self.conic.point(self.q)]

    def pullback_matches(self) -> bool:
        target = _target_divisor(*self.p, self.q)
        pulled = self.conic.pullback(self.quintic)
        return not pulled.is_zero() and pulled == target * self.pullback_constant

    def to_dict(self) -> dict:
        out = {
            "seed": self.seed,
            "attempt": self.attempt,
            "conic": self.conic.to_dict(),
            "conic_equation": self.conic.equation().to_dict(),
            "p": [[format_rational(c) for c in x] for x in self.p],
            "q": [format_rational(c) for c in self.q],
            "nullity": self.nullity,
            "pullback_constant": format_rational(self.pullback_constant),
            "pullback_matches": self.pullback_matches(),
            "marked_points": [pt.to_list() for pt in self.marked_points],
            "quintic": self.quintic.to_dict(),
        }
        if self.singular_points is not None:
            out["singular_points"] = [pt.to_list() for pt in self.singular_points]
        return out


DEFAULT_P = ((1, 0), (0, 1), (1, 1))
DEFAULT_Q = (1, 2)


def construct_quintic(par: Optional[ConicParametrization] = None,
                      p1: Sequence[Rational] = DEFAULT_P[0],
                      p2: Sequence[Rational] = DEFAULT_P[1],
                      p3: Sequence[Rational] = DEFAULT_P[2],
                      q: Sequence[Rational] = DEFAULT_Q,
                      seed: int = DEFAULT_SEED,
                      certify: bool = False) -> QuinticConstruction:
    """Pick a quintic cutting ``3(p1+p2+p3) + q`` on the conic.

    With ``certify`` the whole singular locus is computed by elimination and a
    member with singular points is rejected like one singular at a marked point.
    """
    par = par or ConicParametrization.standard()
    params = [_param(x) for x in (p1, p2, p3, q)]
    for i in range(4):
        for j in range(i + 1, 4):
            if _same_param(params[i], params[j]):
                raise DomainError(f"parameters {params[i]} and {params[j]} coincide")
    target = _target_divisor(*params)
    conditions = quintic_condition_matrix(par, target)
    basis = [_integral(v) for v in nullspace(conditions, len(QUINTIC_MONOMIALS))]
    nullity = len(basis)
    if nullity == 0:
        raise ConstructionError("no quintic satisfies the contact conditions")
    marked = [par.point(x) for x in params]

    for attempt in range(MAX_ATTEMPTS):
        rng = random.Random(seed + attempt)
        weights = [rng.randint(-COEFF_RANGE, COEFF_RANGE) for _ in basis]
        vec = [sum(w * b[k] for w, b in zip(weights, basis)) for k in range(len(QUINTIC_MONOMIALS))]
        if not any(vec):
            continue
        quintic = HomogeneousForm.from_vector(5, vec)
        pulled = par.pullback(quintic)
        if pulled.is_zero():
            continue  # contains the conic
        const, exact = binary_divide(pulled, target)
        if not exact or const.degree != 0:
            raise ConstructionError("solution does not pull back to a multiple of the target divisor")
        if not all(smooth_at(quintic, pt) for pt in marked):
            continue
        singular = None
        if certify:
            singular = singular_points_search(quintic, "eliminate")
            if singular:
                continue
        return QuinticConstruction(par, tuple(params[:3]), params[3], quintic, nullity,
                                   const.coefficient((0, 0)), seed, attempt, singular)
    raise ConstructionError(f"no admissible quintic found in {MAX_ATTEMPTS} attempts from seed {seed}")


@dataclass
class NoncollinearityReport:
    seed: int
    construction: QuinticConstruction
    stages: list[dict] = field(default_factory=list)
    veronese_points: list[ProjectivePoint] = field(default_factory=list)
    rank: int = 0
    collinear: bool = True
    target_degree: int = sym_degree(SymmetricProductSpace(6, 3), 5)

    @property
    def ok(self) -> bool:
        return all(s["passed"] for s in self.stages)

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "ok": self.ok,
            "stages": self.stages,
            "veronese_points": [p.to_list() for p in self.veronese_points],
            "rank": self.rank,
            "collinear": self.collinear,
            "target_degree": self.target_degree,
            "construction": self.construction.to_dict(),
        }


def verify_quintic_noncollinearity(seed: int = DEFAULT_SEED,
                                   par: Optional[ConicParametrization] = None,
                                   p: Sequence[Sequence[Rational]] = DEFAULT_P,
                                   q: Sequence[Rational] = DEFAULT_Q,
                                   certify: bool = False) -> NoncollinearityReport:
    """Build the quintic and check that ``phi(3 p_i)``, i = 1, 2, 3, span a plane in P^9.

    Raises :class:`StageError` naming the first stage that fails.
    """
    def stage(name, fn):
        try:
            return fn()
        except SymcurvesError as exc:
            raise StageError(name, exc) from exc

    stages: list[dict] = []
    con = stage("construct", lambda: construct_quintic(par, *p, q, seed=seed, certify=certify))
    stages.append({"stage": "construct", "passed": con.nullity >= 11, "nullity": con.nullity})
    stages.append({"stage": "pullback", "passed": con.pullback_matches(),
                   "constant": format_rational(con.pullback_constant)})

    marked = con.marked_points
    on_curve = [con.quintic.evaluate(pt) == 0 for pt in marked]
    stages.append({"stage": "incidence", "passed": all(on_curve), "on_curve": on_curve})
    smooth = stage("smoothness", lambda: [smooth_at(con.quintic, pt) for pt in marked])
    entry = {"stage": "smoothness", "passed": all(smooth), "smooth_at_marked": smooth}
    if certify:
        entry["singular_points"] = [pt.to_list() for pt in con.singular_points or []]
        entry["passed"] = entry["passed"] and not con.singular_points
    stages.append(entry)

    images = [veronese3(pt) for pt in marked[:3]]
    r = rank([pt.coords for pt in images])
    collinear = collinear_p10(*images)
    stages.append({"stage": "noncollinearity", "passed": not collinear, "rank": r})

    report = NoncollinearityReport(seed, con, stages, images, r, collinear)
    for s in stages:
        if not s["passed"]:
            raise StageError(s["stage"], ConstructionError(f"check failed: {s}"))
    return report
