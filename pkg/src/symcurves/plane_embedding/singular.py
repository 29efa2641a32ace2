"""Locating singular points of plane curves exactly.

``eliminate`` mode finds every common zero of the three partial derivatives.
On the chart ``Z = 1`` it takes pairwise resultants in ``Y``; any singular
point has its ``X`` coordinate among the roots of their gcd.  Rational roots
are followed up directly.  For an irreducible factor of higher degree the
three partials are reduced to a gcd over the number field it defines, which
decides whether a non-rational singular point sits above it.  The line
``Z = 0`` is handled by univariate gcds and the point ``(1:0:0)`` by direct
evaluation.  An empty result certifies smoothness.

``sample`` mode only checks a fixed grid of integer points plus any marked
points supplied by the caller.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

import sympy

from symcurves.errors import DomainError, NonRationalSingularityError, ResourceGuardError
from symcurves.plane_embedding.forms import HomogeneousForm
from symcurves.plane_embedding.points import ProjectivePoint

ELIMINATE_MAX_DEGREE = 6
SAMPLE_GRID_BOUND = 6

_X, _Y = sympy.symbols("x y")


def smooth_at(curve: HomogeneousForm, x: ProjectivePoint) -> bool:
    """Whether ``x`` is a smooth point of the curve ``curve = 0``."""
    if curve.evaluate(x) != 0:
        raise DomainError(f"{x} does not lie on the curve")
    return any(g.evaluate(x) != 0 for g in curve.gradient())


def sample_grid(bound: int = SAMPLE_GRID_BOUND) -> list[ProjectivePoint]:
    """Integer points with entries in ``[-bound, bound]``, one per projective class."""
    seen = set()
    for coords in product(range(-bound, bound + 1), repeat=3):
        if any(coords):
            seen.add(ProjectivePoint(coords))
    return sorted(seen)


def rational_points_on(curve: HomogeneousForm, bound: int = SAMPLE_GRID_BOUND) -> list[ProjectivePoint]:
    """Grid points (see :func:`sample_grid`) lying on the curve."""
    return [p for p in sample_grid(bound) if curve.evaluate(p) == 0]


def singular_points_search(curve: HomogeneousForm, mode: str = "eliminate",
                           marked: Iterable[ProjectivePoint] = (),
                           grid_bound: int = SAMPLE_GRID_BOUND) -> list[ProjectivePoint]:
    if curve.nvars != 3:
        raise DomainError("expected a ternary form")
    if curve.is_zero() or curve.degree == 0:
        raise DomainError("a curve needs a nonzero form of positive degree")
    if mode == "sample":
        candidates = set(sample_grid(grid_bound)) | set(marked)
        on_curve = [p for p in sorted(candidates) if curve.evaluate(p) == 0]
        return [p for p in on_curve if not smooth_at(curve, p)]
    if mode != "eliminate":
        raise DomainError(f"unknown mode {mode!r}; use 'sample' or 'eliminate'")
    if curve.degree > ELIMINATE_MAX_DEGREE:
        raise ResourceGuardError(
            f"eliminate mode is limited to degree <= {ELIMINATE_MAX_DEGREE}, got {curve.degree}")
    return _eliminate(curve)


def _chart_polys(curve: HomogeneousForm) -> list[sympy.Poly]:
    Z = sympy.Integer(1)
    return [sympy.Poly(g.to_sympy((_X, _Y, Z)), _X, _Y, domain="QQ") for g in curve.gradient()]


def _eliminate(curve: HomogeneousForm) -> list[ProjectivePoint]:
    found: set[ProjectivePoint] = set()
    non_rational: list[str] = []
    grads = curve.gradient()

    # chart Z = 1
    polys = [p for p in _chart_polys(curve) if not p.is_zero]
    if polys:
        xgcd = _x_eliminant(polys)
        if xgcd is None:
            raise DomainError("resultants vanish identically; the partials share curve components")
        for factor, _ in sympy.factor_list(xgcd.as_expr(), _X)[1]:
            fpoly = sympy.Poly(factor, _X, domain="QQ")
            if fpoly.degree() == 1:
                root = -fpoly.nth(0) / fpoly.nth(1)
                ypolys = [sympy.Poly(p.as_expr().subs(_X, root), _Y, domain="QQ") for p in polys]
                ygcd = _univariate_gcd(ypolys)
                if ygcd is None:
                    raise DomainError("singular locus contains a vertical line")
                for yfac, _ in sympy.factor_list(ygcd.as_expr(), _Y)[1]:
                    ypoly = sympy.Poly(yfac, _Y, domain="QQ")
                    if ypoly.degree() == 1:
                        yroot = -ypoly.nth(0) / ypoly.nth(1)
                        found.add(ProjectivePoint([Fraction(str(root)), Fraction(str(yroot)), 1]))
                    else:
                        non_rational.append(f"y: {ypoly.as_expr()} over x = {root}")
            elif _common_root_over_field(polys, fpoly):
                non_rational.append(f"x: {fpoly.as_expr()}")

    # line Z = 0, chart Y = 1
    line = [sympy.Poly(g.to_sympy((_X, sympy.Integer(1), sympy.Integer(0))), _X, domain="QQ")
            for g in grads]
    line = [p for p in line if not p.is_zero]
    if not line:
        raise DomainError("singular locus contains the line Z = 0")
    lgcd = _univariate_gcd(line)
    for factor, _ in sympy.factor_list(lgcd.as_expr(), _X)[1]:
        fpoly = sympy.Poly(factor, _X, domain="QQ")
        if fpoly.degree() == 1:
            root = -fpoly.nth(0) / fpoly.nth(1)
            found.add(ProjectivePoint([Fraction(str(root)), 1, 0]))
        else:
            non_rational.append(f"x (on Z=0): {fpoly.as_expr()}")

    corner = ProjectivePoint([1, 0, 0])
    if all(g.evaluate(corner) == 0 for g in grads):
        found.add(corner)

    if non_rational:
        raise NonRationalSingularityError(
            "curve has singular points not defined over Q", non_rational)
    return sorted(found)


def _univariate_gcd(polys: Sequence[sympy.Poly]) -> sympy.Poly | None:
    nonzero = [p for p in polys if not p.is_zero]
    if not nonzero:
        return None
    g = nonzero[0]
    for p in nonzero[1:]:
        g = g.gcd(p)
    return g


def _x_eliminant(polys: Sequence[sympy.Poly]) -> sympy.Poly | None:
    """gcd of the pairwise ``Y``-resultants; every singular point's ``x`` is a root.

    Returns None when no pair has a nonzero resultant (a shared curve component).
    """
    if len(polys) == 1:
        # a single surviving partial: its zero set is a curve unless it is constant
        return sympy.Poly(1, _X, domain="QQ") if polys[0].total_degree() == 0 else None
    resultants = []
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            a, b = polys[i], polys[j]
            if a.degree(_Y) == 0 and b.degree(_Y) == 0:
                r = sympy.Poly(a.as_expr(), _X, domain="QQ").gcd(sympy.Poly(b.as_expr(), _X, domain="QQ"))
            else:
                r = sympy.Poly(sympy.resultant(a.as_expr(), b.as_expr(), _Y), _X, domain="QQ")
            if not r.is_zero:
                resultants.append(r)
    if not resultants:
        return None
    return _univariate_gcd(resultants)


def _common_root_over_field(polys: Sequence[sympy.Poly], minpoly: sympy.Poly) -> bool:
    """Do the polynomials share a root ``(a, y)`` with ``minpoly(a) = 0``?

    Euclid's algorithm in ``K[y]`` with ``K = Q[x]/(minpoly)``; coefficients
    are kept reduced modulo ``minpoly``.
    """

    def to_k_coeffs(p: sympy.Poly) -> list[sympy.Poly]:
        # coefficients in y, highest degree first, each a polynomial in x mod minpoly
        as_y = sympy.Poly(p.as_expr(), _Y)
        out = [sympy.Poly(c, _X, domain="QQ").rem(minpoly) for c in as_y.all_coeffs()]
        return _strip(out)

    def _strip(coeffs: list[sympy.Poly]) -> list[sympy.Poly]:
        while coeffs and coeffs[0].is_zero:
            coeffs = coeffs[1:]
        return coeffs

    def rem(a: list[sympy.Poly], b: list[sympy.Poly]) -> list[sympy.Poly]:
        inv_lead = b[0].invert(minpoly)
        a = list(a)
        while len(a) >= len(b) and a:
            f = (a[0] * inv_lead).rem(minpoly)
            for k in range(len(b)):
                a[k] = (a[k] - f * b[k]).rem(minpoly)
            a = _strip(a)
        return a

    seqs = [to_k_coeffs(p) for p in polys]
    seqs = [s for s in seqs if s]
    if not seqs:
        return True
    g = seqs[0]
    for other in seqs[1:]:
        a, b = g, other
        while b:
            a, b = b, rem(a, b)
        g = a
        if len(g) == 1:
            return False
    return len(g) > 1
