import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from symcurves.errors import DomainError
from symcurves.plane_embedding.forms import HomogeneousForm, monomials
from symcurves.plane_embedding.points import Divisor3, ProjectivePoint
from symcurves.plane_embedding.veronese import CUBIC_BASIS, collinear_p10, dual_line, phi3, veronese3

X, Y, Z = (HomogeneousForm.variable(i) for i in range(3))
small = st.integers(-6, 6)
plane_points = st.tuples(small, small, small).filter(any)


def product_oracle(points):
    """Coefficients of the product of the three dual lines, expanded by sympy."""
    x, y, z = sympy.symbols("x y z")
    expr = sympy.Integer(1)
    for a, b, c in points:
        expr *= a * x + b * y + c * z
    poly = sympy.Poly(sympy.expand(expr), x, y, z)
    return ProjectivePoint([Fraction(int(poly.coeff_monomial(x ** i * y ** j * z ** k)))
                            for i, j, k in monomials(3)])


def test_dual_line():
    assert dual_line([1, 0, 0]) == X
    assert dual_line([1, 1, 1]) == X + Y + Z
    assert dual_line([2, -3, 5]) == X * 2 - Y * 3 + Z * 5


def test_phi3_examples():
    e = [0] * 10
    assert phi3(Divisor3.triple([1, 0, 0])) == ProjectivePoint([1] + e[1:])
    xyz = [1 if m == (1, 1, 1) else 0 for m in CUBIC_BASIS]
    assert phi3(Divisor3([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == ProjectivePoint(xyz)
    assert veronese3([1, 1, 0]).coords == (1, 3, 0, 3, 0, 0, 1, 0, 0, 0)
    assert veronese3([1, 1, 0]) == product_oracle([(1, 1, 0)] * 3)
    with pytest.raises(DomainError):
        veronese3([1, 0, 0, 0])


@given(st.lists(plane_points, min_size=3, max_size=3), st.data())
def test_phi3_well_defined(points, data):
    base = phi3(Divisor3(points))
    assert base == product_oracle(points)
    factors = data.draw(st.lists(st.sampled_from([-3, -1, Fraction(1, 2), 2, 5]), min_size=3, max_size=3))
    scaled = [[c * k for c in p] for p, k in zip(points, factors)]
    assert phi3(Divisor3(data.draw(st.permutations(scaled)))) == base


def test_diagonal_is_veronese():
    rng = random.Random(7)
    for _ in range(500):
        p = [Fraction(rng.randint(-30, 30), rng.randint(1, 9)) for _ in range(3)]
        if not any(p):
            continue
        assert phi3(Divisor3.triple(p)) == veronese3(p)


def test_veronese_injective_on_samples():
    rng = random.Random(11)
    seen = {}
    for _ in range(400):
        coords = [rng.randint(-5, 5) for _ in range(3)]
        if not any(coords):
            continue
        p = ProjectivePoint(coords)
        img = veronese3(p)
        assert seen.setdefault(img, p) == p


def test_collinear_p10():
    p = veronese3([1, 0, 0])
    q = veronese3([0, 1, 0])
    assert collinear_p10(p, p, q)
    r = ProjectivePoint([a + 2 * b for a, b in zip(p.coords, q.coords)])
    assert collinear_p10(p, q, r)
    assert not collinear_p10(p, q, veronese3([0, 0, 1]))
    with pytest.raises(DomainError):
        collinear_p10(p, q, ProjectivePoint([1, 0, 0]))


@given(st.lists(plane_points, min_size=3, max_size=3),
       st.lists(st.sampled_from([-7, -1, Fraction(2, 3), 4]), min_size=3, max_size=3))
def test_collinearity_scale_invariant(points, scales):
    imgs = [veronese3(p) for p in points]
    rescaled = [ProjectivePoint([c * k for c in img.coords]) for img, k in zip(imgs, scales)]
    assert collinear_p10(*imgs) == collinear_p10(*rescaled)
    # the cubic Veronese surface has no trisecant lines
    if len({ProjectivePoint(p) for p in points}) == 3:
        assert not collinear_p10(*imgs)
