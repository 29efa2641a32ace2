"""Sparse homogeneous polynomials with exact rational coefficients.

Ternary forms (the default) model plane curves and their sections; binary
forms (``nvars=2``) model pull-backs to a parametrized conic.  Monomials are
exponent tuples and are always listed in descending lexicographic order, so
the degree-3 ternary basis is ``(3,0,0), (2,1,0), (2,0,1), (1,2,0), ...``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence, Union

from symcurves.errors import DomainError
from symcurves.plane_embedding.points import (
    ProjectivePoint,
    Rational,
    format_rational,
    parse_rational,
    representative,
)

Exponent = tuple[int, ...]
VARIABLE_NAMES = {2: ("s", "t"), 3: ("X", "Y", "Z")}


@lru_cache(maxsize=None)
def monomials(degree: int, nvars: int = 3) -> tuple[Exponent, ...]:
    """All exponent tuples of the given total degree, lex-descending."""
    if nvars == 1:
        return ((degree,),)
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials(degree - first, nvars - 1):
            out.append((first,) + rest)
    return tuple(out)


class HomogeneousForm:
    """A homogeneous polynomial ``sum c_e x^e`` with Fraction coefficients."""

    __slots__ = ("degree", "nvars", "_terms")

    def __init__(self, degree: int, terms: Mapping[Exponent, Rational] | None = None, nvars: int = 3):
        if degree < 0:
            raise DomainError(f"form degree must be >= 0, got {degree}")
        self.degree = degree
        self.nvars = nvars
        clean: dict[Exponent, Fraction] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise DomainError(f"bad exponent {exp} for {nvars} variables")
            if sum(exp) != degree:
                raise DomainError(f"exponent {exp} does not have degree {degree}")
            c = Fraction(c)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if not clean[exp]:
                    del clean[exp]
        self._terms = clean

    # construction -----------------------------------------------------

    @classmethod
    def zero(cls, degree: int, nvars: int = 3) -> "HomogeneousForm":
        return cls(degree, {}, nvars)

    @classmethod
    def variable(cls, i: int, nvars: int = 3) -> "HomogeneousForm":
        exp = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(1, {exp: 1}, nvars)

    @classmethod
    def constant(cls, c: Rational, nvars: int = 3) -> "HomogeneousForm":
        return cls(0, {(0,) * nvars: c}, nvars)

    @classmethod
    def linear(cls, coeffs: Sequence[Rational]) -> "HomogeneousForm":
        n = len(coeffs)
        return cls(1, {tuple(1 if j == i else 0 for j in range(n)): c for i, c in enumerate(coeffs)}, n)

    @classmethod
    def from_vector(cls, degree: int, vector: Sequence[Rational], nvars: int = 3) -> "HomogeneousForm":
        basis = monomials(degree, nvars)
        if len(vector) != len(basis):
            raise DomainError(f"expected {len(basis)} coefficients, got {len(vector)}")
        return cls(degree, dict(zip(basis, vector)), nvars)

    # access -----------------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def coefficient(self, exp: Exponent) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def to_vector(self) -> list[Fraction]:
        return [self.coefficient(e) for e in monomials(self.degree, self.nvars)]

    def is_zero(self) -> bool:
        return not self._terms

    # arithmetic -------------------------------------------------------

    def _compatible(self, other: "HomogeneousForm") -> None:
        if self.nvars != other.nvars:
            raise DomainError("forms in different numbers of variables")

    def __add__(self, other: "HomogeneousForm") -> "HomogeneousForm":
        self._compatible(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.degree != other.degree:
            raise DomainError(f"cannot add forms of degree {self.degree} and {other.degree}")
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return HomogeneousForm(self.degree, terms, self.nvars)

    def __neg__(self) -> "HomogeneousForm":
        return HomogeneousForm(self.degree, {e: -c for e, c in self._terms.items()}, self.nvars)

    def __sub__(self, other: "HomogeneousForm") -> "HomogeneousForm":
        return self + (-other)

    def __mul__(self, other: Union["HomogeneousForm", Rational]) -> "HomogeneousForm":
        if isinstance(other, (int, Fraction)):
            return HomogeneousForm(self.degree, {e: c * other for e, c in self._terms.items()}, self.nvars)
        if not isinstance(other, HomogeneousForm):
            return NotImplemented
        self._compatible(other)
        terms: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return HomogeneousForm(self.degree + other.degree, terms, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "HomogeneousForm":
        if k < 0:
            raise DomainError("negative power of a form")
        out = HomogeneousForm.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomogeneousForm):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return self.nvars == other.nvars
        return (self.degree, self.nvars, self._terms) == (other.degree, other.nvars, other._terms)

    def __hash__(self) -> int:
        return hash((self.degree, self.nvars, tuple(sorted(self._terms.items()))))

    # calculus and evaluation -----------------------------------------

    def __call__(self, point: Union[ProjectivePoint, Sequence[Rational]]) -> Fraction:
        return self.evaluate(point)

    def evaluate(self, point: Union[ProjectivePoint, Sequence[Rational]]) -> Fraction:
        """Value at a fixed representative; only its vanishing is projective."""
        x = representative(point)
        if len(x) != self.nvars:
            raise DomainError(f"point has {len(x)} coordinates, form has {self.nvars} variables")
        total = Fraction(0)
        for exp, c in self._terms.items():
            term = c
            for xi, e in zip(x, exp):
                if e:
                    term *= xi ** e
            total += term
        return total

    def partial(self, i: int) -> "HomogeneousForm":
        if self.degree == 0:
            return HomogeneousForm.zero(0, self.nvars)
        terms = {}
        for exp, c in self._terms.items():
            if exp[i]:
                new = list(exp)
                new[i] -= 1
                terms[tuple(new)] = c * exp[i]
        return HomogeneousForm(self.degree - 1, terms, self.nvars)

    def gradient(self) -> list["HomogeneousForm"]:
        return [self.partial(i) for i in range(self.nvars)]

    def substitute(self, images: Sequence["HomogeneousForm"]) -> "HomogeneousForm":
        """Compose with a map given by forms of a common degree (pull-back)."""
        if len(images) != self.nvars:
            raise DomainError(f"need {self.nvars} image forms, got {len(images)}")
        nv = images[0].nvars
        k = max(f.degree for f in images)
        result = HomogeneousForm.zero(self.degree * k, nv)
        powers: dict[tuple[int, int], HomogeneousForm] = {}
        for exp, c in self._terms.items():
            term = HomogeneousForm.constant(c, nv)
            for i, e in enumerate(exp):
                if e:
                    if (i, e) not in powers:
                        powers[(i, e)] = images[i] ** e
                    term = term * powers[(i, e)]
            result = result + term
        return result

    # presentation -----------------------------------------------------

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        names = VARIABLE_NAMES.get(self.nvars) or tuple(f"x{i}" for i in range(self.nvars))
        parts = []
        for exp in monomials(self.degree, self.nvars):
            c = self._terms.get(exp)
            if c is None:
                continue
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, exp) if e)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [list(exp) + [format_rational(self._terms[exp])]
                      for exp in sorted(self._terms)],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "HomogeneousForm":
        try:
            degree = int(data["degree"])
            rows = data["terms"]
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed form object: {exc}") from exc
        terms: dict[Exponent, Fraction] = {}
        nvars = None
        for row in rows:
            exp, c = tuple(int(e) for e in row[:-1]), parse_rational(str(row[-1]))
            if nvars is None:
                nvars = len(exp)
            terms[exp] = terms.get(exp, Fraction(0)) + c
        return cls(degree, terms, nvars or 3)

    def to_sympy(self, symbols):
        import sympy

        return sympy.Add(*[sympy.Rational(c.numerator, c.denominator) *
                           sympy.Mul(*[s ** e for s, e in zip(symbols, exp)])
                           for exp, c in self._terms.items()])


# binary forms ---------------------------------------------------------


def binary_coefficients(form: HomogeneousForm) -> list[Fraction]:
    """Coefficients of ``s^d, s^(d-1) t, ..., t^d``."""
    if form.nvars != 2:
        raise DomainError("expected a binary form")
    return form.to_vector()


def binary_from_coefficients(coeffs: Sequence[Rational]) -> HomogeneousForm:
    return HomogeneousForm.from_vector(len(coeffs) - 1, list(coeffs), nvars=2)


def linear_factor(param: Sequence[Rational]) -> HomogeneousForm:
    """Binary linear form ``b*s - a*t`` vanishing at the parameter ``(a:b)``."""
    a, b = (Fraction(v) for v in param)
    if a == 0 and b == 0:
        raise DomainError("parameter (0:0) is not a point of P^1")
    return binary_from_coefficients([b, -a])


def _div_coeffs(num: list[Fraction], den: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    # leading (s-power) coefficient of den must be nonzero
    num = list(num)
    q = []
    k = len(den) - 1
    for i in range(len(num) - k):
        f = num[i] / den[0]
        q.append(f)
        if f:
            for j in range(k + 1):
                num[i + j] -= f * den[j]
    return q, num[len(num) - k:] if k else []


def binary_divide(num: HomogeneousForm, den: HomogeneousForm) -> tuple[HomogeneousForm, bool]:
    """Quotient of binary forms and whether the division is exact."""
    a, b = binary_coefficients(num), binary_coefficients(den)
    if not any(b):
        raise DomainError("division by the zero form")
    if len(b) > len(a):
        return HomogeneousForm.zero(0, 2), not any(a)
    # strip powers of t from the divisor: t | den  <=>  coefficient of s^k is 0
    while b[0] == 0:
        if a[0] != 0:
            return HomogeneousForm.zero(0, 2), False
        a, b = a[1:], b[1:]
    q, r = _div_coeffs(a, b)
    return binary_from_coefficients(q), not any(r)


def vanishing_order(form: HomogeneousForm, param: Sequence[Rational]) -> int:
    """Multiplicity of the parameter ``(a:b)`` as a root of a nonzero binary form."""
    if form.is_zero():
        raise DomainError("vanishing order of the zero form is undefined")
    lin = linear_factor(param)
    order = 0
    while form.degree > 0:
        q, exact = binary_divide(form, lin)
        if not exact:
            break
        form, order = q, order + 1
    return order
