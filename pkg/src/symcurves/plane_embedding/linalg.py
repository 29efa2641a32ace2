"""Exact linear algebra over the rationals.

Small dense matrices only (tens of rows); everything is Gaussian elimination
on :class:`fractions.Fraction` with no pivot tolerance.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Any, Sequence

from symcurves.errors import DomainError, ResourceGuardError

PERMANENT_MAX_N = 8


def _as_fraction_rows(rows: Sequence[Sequence[Any]]) -> list[list[Fraction]]:
    return [[Fraction(v) for v in row] for row in rows]


def rref(rows: Sequence[Sequence[Any]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = _as_fraction_rows(rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence[Any]]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[Any]], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of ``{v : M v = 0}``, one vector per free column."""
    if ncols is None:
        if not rows:
            raise DomainError("nullspace of an empty matrix needs ncols")
        ncols = len(rows[0])
    reduced, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def determinant(matrix: Sequence[Sequence[Any]]) -> Any:
    """Determinant by elimination.  Entries may be any field elements (Fraction by default)."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise DomainError("determinant needs a square matrix")
    if n == 0:
        return Fraction(1)
    m = [[v if not isinstance(v, int) else Fraction(v) for v in row] for row in matrix]
    det = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def permanent(matrix: Sequence[Sequence[Any]]) -> Any:
    """Permanent by Ryser's inclusion-exclusion formula.

    Works for any commutative ring elements supporting ``+``, ``-`` and
    ``*`` (Fractions, ints, sympy expressions).
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise DomainError("permanent needs a square matrix")
    if n > PERMANENT_MAX_N:
        raise ResourceGuardError(f"permanent of a {n}x{n} matrix exceeds the n <= {PERMANENT_MAX_N} guard")
    if n == 0:
        return 1
    total = 0
    cols = range(n)
    for k in range(1, n + 1):
        sign = (-1) ** (n - k)
        for subset in combinations(cols, k):
            prod = 1
            for row in matrix:
                s = 0
                for j in subset:
                    s = s + row[j]
                prod = prod * s
            total = total + sign * prod
    return total
