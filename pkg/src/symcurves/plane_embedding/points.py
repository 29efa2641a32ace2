"""Exact projective points and unordered point triples."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Union

from symcurves.errors import DomainError

Rational = Union[int, Fraction]


def parse_rational(text: Union[str, int, Fraction]) -> Fraction:
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not an exact rational: {text!r}") from exc


def format_rational(q: Rational) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def canonical_coords(coords: Iterable[Rational]) -> tuple[int, ...]:
    """Clear denominators, divide by the content, make the first nonzero entry positive."""
    fr = [Fraction(c) for c in coords]
    if not any(fr):
        raise DomainError("projective point with all coordinates zero")
    den = lcm(*(c.denominator for c in fr))
    ints = [int(c * den) for c in fr]
    content = 0
    for v in ints:
        content = gcd(content, v)
    ints = [v // content for v in ints]
    first = next(v for v in ints if v)
    if first < 0:
        ints = [-v for v in ints]
    return tuple(ints)


@dataclass(frozen=True, order=True)
class ProjectivePoint:
    """A point of P^k stored in canonical integer form.

    Two points compare equal exactly when they are the same projective point.
    """

    coords: tuple[int, ...]

    def __init__(self, coords: Iterable[Rational]):
        object.__setattr__(self, "coords", canonical_coords(coords))

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __repr__(self) -> str:
        return "(" + ":".join(str(c) for c in self.coords) + ")"

    def to_list(self) -> list:
        return [json_int(c) for c in self.coords]

    @classmethod
    def parse(cls, text: str) -> "ProjectivePoint":
        """Read ``"1,0,-2/3"`` (or with ``:`` separators)."""
        parts = text.replace(":", ",").split(",")
        return cls(parse_rational(p) for p in parts if p.strip())


def json_int(n: int) -> Union[int, str]:
    """Integers beyond 53 bits travel as decimal strings."""
    return n if abs(n) < 2 ** 53 else str(n)


def representative(x: Union[ProjectivePoint, Sequence[Rational]]) -> tuple[Fraction, ...]:
    """Affine representative used for evaluation: canonical ints for points, as-is for tuples."""
    if isinstance(x, ProjectivePoint):
        return tuple(Fraction(c) for c in x.coords)
    return tuple(Fraction(c) for c in x)


@dataclass(frozen=True)
class Divisor3:
    """Unordered triple ``x1 + x2 + x3`` of points of P^2 (repetition allowed)."""

    points: tuple[ProjectivePoint, ...]

    def __init__(self, points: Iterable[Union[ProjectivePoint, Sequence[Rational]]]):
        pts = tuple(p if isinstance(p, ProjectivePoint) else ProjectivePoint(p) for p in points)
        if len(pts) != 3:
            raise DomainError(f"a Divisor3 has exactly 3 points, got {len(pts)}")
        if any(p.dim != 2 for p in pts):
            raise DomainError("Divisor3 points must lie in P^2")
        object.__setattr__(self, "points", tuple(sorted(pts)))

    @classmethod
    def triple(cls, x: Union[ProjectivePoint, Sequence[Rational]]) -> "Divisor3":
        return cls([x, x, x])

    def multiplicities(self) -> dict[ProjectivePoint, int]:
        out: dict[ProjectivePoint, int] = {}
        for p in self.points:
            out[p] = out.get(p, 0) + 1
        return out

    def support(self) -> list[ProjectivePoint]:
        return sorted(set(self.points))

    def __iter__(self):
        return iter(self.points)

    def __repr__(self) -> str:
        return " + ".join(repr(p) for p in self.points)

    def to_list(self) -> list:
        return [p.to_list() for p in self.points]

    @classmethod
    def parse(cls, text: str) -> "Divisor3":
        """Read ``"1,0,0; 0,1,0; 0,0,1"``."""
        return cls(ProjectivePoint.parse(chunk) for chunk in text.split(";") if chunk.strip())
