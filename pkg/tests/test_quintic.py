import json
import random
from fractions import Fraction
from pathlib import Path

import pytest

from symcurves.errors import ConstructionError, DomainError, StageError
from symcurves.plane_embedding.forms import HomogeneousForm, binary_divide, linear_factor, vanishing_order
from symcurves.plane_embedding.points import Divisor3, ProjectivePoint
from symcurves.plane_embedding.quintic import (
    ConicParametrization,
    construct_quintic,
    verify_quintic_noncollinearity,
)
from symcurves.plane_embedding.singular import rational_points_on, smooth_at
from symcurves.plane_embedding.veronese import phi3

FIXTURE = Path(__file__).parent / "fixtures" / "default_quintic_certificate.json"
X, Y, Z = (HomogeneousForm.variable(i) for i in range(3))


def test_conic_parametrization():
    par = ConicParametrization.standard()
    eq = par.equation()
    assert eq == X * Z - Y * Y or eq == Y * Y - X * Z
    assert par.point((1, 2)) == ProjectivePoint([1, 2, 4])
    other = ConicParametrization.from_coefficients([[1, 0, 1], [0, 2, 0], [1, 0, -1]])
    assert other.pullback(other.equation()).is_zero()
    with pytest.raises(DomainError):
        # image is the line X + Y = Z
        ConicParametrization.from_coefficients([[1, 0, 0], [0, 0, 1], [1, 0, 1]])
    with pytest.raises(DomainError):
        # common base point (0:1): every form divisible by s
        ConicParametrization.from_coefficients([[1, 0, 0], [0, 1, 0], [1, 1, 0]])


def test_default_construction(default_construction):
    con = default_construction
    assert con.nullity == 11
    assert con.pullback_constant != 0
    assert con.pullback_matches()
    pulled = con.conic.pullback(con.quintic)
    for p in con.p:
        assert vanishing_order(pulled, p) == 3
    assert vanishing_order(pulled, con.q) == 1
    assert pulled.degree == 10 == 3 * 3 + 1


def test_pullback_divisibility(default_construction):
    con = default_construction
    pulled = con.conic.pullback(con.quintic)
    cube = linear_factor(con.p[0]) ** 3 * linear_factor(con.p[1]) ** 3 * linear_factor(con.p[2]) ** 3
    quotient, exact = binary_divide(pulled, cube)
    assert exact
    residual, exact = binary_divide(quotient, linear_factor(con.q))
    assert exact and residual.degree == 0 and not residual.is_zero()


def test_marked_points_on_curve_and_smooth(default_construction):
    con = default_construction
    for pt in con.marked_points:
        assert con.quintic.evaluate(pt) == 0
        assert smooth_at(con.quintic, pt)
    assert con.conic.equation().evaluate(con.marked_points[3]) == 0


def test_certificate_fixture(default_construction):
    stored = json.loads(FIXTURE.read_text())
    assert default_construction.to_dict() == stored
    assert stored["singular_points"] == []


def test_coincident_parameters_rejected():
    with pytest.raises(DomainError):
        construct_quintic(p1=(1, 0), p2=(2, 0), p3=(1, 1), q=(1, 2))
    with pytest.raises(DomainError):
        construct_quintic(p1=(1, 0), p2=(0, 1), p3=(1, 1), q=(3, 3))


def test_nullity_for_other_inputs():
    rng = random.Random(5)
    for _ in range(6):
        while True:
            rows = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
            try:
                par = ConicParametrization.from_coefficients(rows)
                break
            except DomainError:
                continue
        params = set()
        while len(params) < 4:
            a, b = Fraction(rng.randint(-5, 5)), Fraction(rng.randint(1, 4))
            params.add(a / b)
        p1, p2, p3, q = [(v, 1) for v in sorted(params)]
        con = construct_quintic(par, p1, p2, p3, q, seed=rng.randint(0, 1000))
        assert con.nullity >= 11
        assert con.pullback_matches()


def test_seed_determinism():
    a = construct_quintic(seed=17)
    b = construct_quintic(seed=17)
    assert a.quintic == b.quintic and a.attempt == b.attempt


def test_verify_default():
    report = verify_quintic_noncollinearity()
    assert report.ok and report.rank == 3 and not report.collinear
    assert report.target_degree == 125
    assert [s["stage"] for s in report.stages] == ["construct", "pullback", "incidence",
                                                   "smoothness", "noncollinearity"]
    data = report.to_dict()
    assert data["rank"] == 3 and data["construction"]["nullity"] == 11


def test_verify_rejects_degenerate_override():
    with pytest.raises(StageError) as err:
        verify_quintic_noncollinearity(p=((1, 1), (1, 1), (1, 1)))
    assert err.value.stage == "construct"
    assert isinstance(err.value.cause, DomainError)


def test_phi3_injective_on_curve_divisors(default_construction):
    pts = rational_points_on(default_construction.quintic, 12)
    assert len(pts) >= 4
    divisors = sorted({Divisor3([a, b, c]) for a in pts for b in pts for c in pts}, key=repr)
    images = {}
    for D in divisors:
        assert images.setdefault(phi3(D), D) == D
    assert len(images) == len(divisors)
