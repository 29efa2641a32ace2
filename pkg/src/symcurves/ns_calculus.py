"""Intersection numbers on symmetric products of a curve.

Classes live in the rank-two lattice spanned by ``xi`` (the class of the
divisor of all ``D`` containing a fixed point) and ``theta`` (pull-back of the
theta divisor of the Jacobian).  The pairing on ``C(n)`` for a genus ``g``
curve is determined by

    xi^i . theta^(n-i) = g! / (g - n + i)!

with the value zero once the theta power exceeds ``g``.  Everything here is
plain ``int`` arithmetic.

When ``End(J(C))`` is bigger than ``Z`` the Neron-Severi group can contain
classes outside this lattice; they are simply not representable here.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Sequence

from symcurves.errors import DomainError


@dataclass(frozen=True)
class SymmetricProductSpace:
    """The n-th symmetric product of a genus g curve."""

    g: int
    n: int

    def __post_init__(self):
        if self.g < 1 or self.n < 1:
            raise DomainError(f"need g >= 1 and n >= 1, got g={self.g}, n={self.n}")


@dataclass(frozen=True)
class DivisorClass:
    """The class ``xi_coeff * xi + theta_coeff * theta`` on ``space``."""

    space: SymmetricProductSpace
    xi_coeff: int
    theta_coeff: int

    def _check(self, other: "DivisorClass") -> None:
        if not isinstance(other, DivisorClass):
            raise TypeError(f"cannot combine DivisorClass with {type(other).__name__}")
        if other.space != self.space:
            raise DomainError(f"classes live on different spaces: {self.space} vs {other.space}")

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(self.space, self.xi_coeff + other.xi_coeff,
                            self.theta_coeff + other.theta_coeff)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(self.space, self.xi_coeff - other.xi_coeff,
                            self.theta_coeff - other.theta_coeff)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.space, -self.xi_coeff, -self.theta_coeff)

    def __mul__(self, k: int) -> "DivisorClass":
        if not isinstance(k, int):
            return NotImplemented
        return DivisorClass(self.space, k * self.xi_coeff, k * self.theta_coeff)

    __rmul__ = __mul__

    def self_intersection(self) -> int:
        return top_intersection([self] * self.space.n)

    def to_dict(self) -> dict:
        return {"g": self.space.g, "n": self.space.n,
                "xi": self.xi_coeff, "theta": self.theta_coeff}

    @classmethod
    def from_dict(cls, data: dict) -> "DivisorClass":
        return cls(SymmetricProductSpace(int(data["g"]), int(data["n"])),
                   int(data["xi"]), int(data["theta"]))


def monomial_intersection(space: SymmetricProductSpace, i: int) -> int:
    """Return ``xi^i . theta^(n-i)`` on ``space``."""
    g, n = space.g, space.n
    if not 0 <= i <= n:
        raise DomainError(f"xi exponent must lie in [0, {n}], got {i}")
    if g - n + i < 0:
        return 0
    return factorial(g) // factorial(g - n + i)


def top_intersection(classes: Sequence[DivisorClass]) -> int:
    """Intersection number of ``n`` divisor classes on ``C(n)``.

    Multiplies the classes as polynomials in ``xi`` (tracking only the xi
    exponent; theta fills the rest) and pairs each coefficient with the
    matching monomial intersection.
    """
    classes = list(classes)
    if not classes:
        raise DomainError("top_intersection needs at least one class")
    space = classes[0].space
    for c in classes[1:]:
        if c.space != space:
            raise DomainError(f"classes live on different spaces: {space} vs {c.space}")
    if len(classes) != space.n:
        raise DomainError(f"expected {space.n} classes on C({space.n}), got {len(classes)}")

    # coeffs[i] = coefficient of xi^i theta^(k-i) after k factors
    coeffs = [1]
    for c in classes:
        nxt = [0] * (len(coeffs) + 1)
        for i, v in enumerate(coeffs):
            nxt[i] += v * c.theta_coeff
            nxt[i + 1] += v * c.xi_coeff
        coeffs = nxt
    return sum(v * monomial_intersection(space, i) for i, v in enumerate(coeffs))


def xi_class(space: SymmetricProductSpace) -> DivisorClass:
    return DivisorClass(space, 1, 0)


def theta_class(space: SymmetricProductSpace) -> DivisorClass:
    return DivisorClass(space, 0, 1)


def delta_class(space: SymmetricProductSpace) -> DivisorClass:
    """Half the diagonal: ``(n + g - 1) xi - theta``."""
    return DivisorClass(space, space.n + space.g - 1, -1)


def sym_class(space: SymmetricProductSpace, d: int) -> DivisorClass:
    """Class of the symmetrized bundle L(n)^s for ``deg L = d``."""
    return DivisorClass(space, d, 0)


def alt_class(space: SymmetricProductSpace, d: int) -> DivisorClass:
    """Class of the antisymmetrized bundle L(n)^a for ``deg L = d``."""
    return DivisorClass(space, d - space.g - space.n + 1, 1)


def canonical_class(space: SymmetricProductSpace) -> DivisorClass:
    """Canonical class of ``C(n)``, i.e. the antisymmetrization of K_C."""
    return alt_class(space, 2 * space.g - 2)


def sym_degree(space: SymmetricProductSpace, d: int) -> int:
    return d ** space.n


def alt_degree(space: SymmetricProductSpace, d: int) -> int:
    """Top self-intersection of L(n)^a.

    Can be zero or negative for small ``d``; such a class is not ample, but
    the number is still returned.
    """
    g, n = space.g, space.n
    e = d - g - n + 1
    return sum(comb(n, i) * monomial_intersection(space, i) * e ** i for i in range(n + 1))


def alt_degree_n3(g: int, d: int) -> int:
    """``(L(3)^a)^3`` written out as a cubic in ``e = d - g - 2``."""
    if g < 3:
        return alt_degree(SymmetricProductSpace(g, 3), d)
    e = d - g - 2
    return g * (g - 1) * (g - 2) + 3 * g * (g - 1) * e + 3 * g * e * e + e ** 3
