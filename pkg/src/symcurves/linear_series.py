"""Dimension bounds for linear series on curves and the alt-degree search.

The functions here answer "can a curve of genus g carry a g^r_d?" using only
Riemann-Roch, Clifford's theorem and Castelnuovo's genus bound.  The search
at the bottom combines them with :func:`alt_degree_n3` to rule out
antisymmetric embeddings of ``C(3)`` of degree at most 125.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Optional

from symcurves.errors import DomainError
from symcurves.ns_calculus import SymmetricProductSpace, alt_degree_n3, sym_degree

WORKERS_ENV = "SYMCURVES_WORKERS"
# degree of C(3) in P^9 for a plane quintic
DEFAULT_THRESHOLD = sym_degree(SymmetricProductSpace(6, 3), 5)


@dataclass(frozen=True)
class CurveClass:
    g: int
    is_hyperelliptic: bool = False
    is_trigonal: bool = False

    def __post_init__(self):
        if self.g < 0:
            raise DomainError(f"genus must be >= 0, got {self.g}")
        if self.g >= 3 and self.is_hyperelliptic and self.is_trigonal:
            raise DomainError("a curve of genus >= 3 cannot be both hyperelliptic and trigonal")

    @property
    def has_low_gonality(self) -> bool:
        return self.is_hyperelliptic or self.is_trigonal


@dataclass(frozen=True)
class SeriesSpec:
    d: int
    r: int

    def __post_init__(self):
        if self.d < 0 or self.r < 0:
            raise DomainError(f"need d >= 0 and r >= 0, got d={self.d}, r={self.r}")


def h0_nonspecial(g: int, d: int) -> int:
    """``h^0(D) = d - g + 1`` for a nonspecial divisor of degree ``d``."""
    if d < 0:
        raise DomainError(f"degree must be >= 0, got {d}")
    return d - g + 1


def riemann_roch_residual(g: int, d: int, r: int) -> int:
    """``h^0(K - D)`` for a complete ``g^r_d``; negative means no such series."""
    return r - d + g


def clifford_max_r(d: int, strict: bool = False) -> int:
    """Largest ``r`` allowed by Clifford for a special ``g^r_d``.

    ``strict=True`` is the non-hyperelliptic, non-canonical form ``r < d/2``.
    """
    if d < 0:
        raise DomainError(f"degree must be >= 0, got {d}")
    return (d - 1) // 2 if strict else d // 2


def castelnuovo_genus_bound(d: int, r: int) -> int:
    """Maximal genus of an irreducible non-degenerate degree ``d`` curve in ``P^r``."""
    if r < 2 or d < r:
        raise DomainError(f"Castelnuovo bound needs r >= 2 and d >= r, got d={d}, r={r}")
    m, eps = divmod(d - 1, r - 1)
    return comb(m, 2) * (r - 1) + m * eps


def _forced_birational(d: int, r: int) -> bool:
    # a map of degree k > 1 lands on a non-degenerate curve of degree d/k >= r
    return not any(d % k == 0 and d // k >= r for k in range(2, d + 1))


def series_obstruction(curve: CurveClass, d: int, r: int) -> Optional[str]:
    """Why ``curve`` cannot carry a complete ``g^r_d``, or None if nothing rules it out.

    Only the arguments available from Riemann-Roch, Clifford (including the
    base-point reduction), Castelnuovo and the gonality flags are tried.
    """
    g = curve.g
    residual = riemann_roch_residual(g, d, r)
    if residual < 0:
        return f"Riemann-Roch: h0(K-D) = {residual} < 0"
    if residual == 0:
        return None
    # special from here on
    if d > 2 * g - 2:
        return f"special series needs d <= 2g-2 = {2 * g - 2}"
    if d == 2 * g - 2:
        return None if r == g - 1 else f"degree 2g-2 series is canonical (r = {g - 1}) or nonspecial"
    if r > clifford_max_r(d):
        return f"Clifford: r <= {clifford_max_r(d)}"
    if curve.is_hyperelliptic or r == 0:
        return None
    if r > clifford_max_r(d, strict=True):
        return f"strict Clifford (non-hyperelliptic): r <= {clifford_max_r(d, strict=True)}"
    if d == 3 and not curve.is_trigonal:
        return f"a g^{r}_3 makes the curve trigonal"

    # a base point would leave a special g^r_{d-1}; strict Clifford decides
    base_point_free = r > clifford_max_r(d - 1, strict=True)
    if base_point_free and r >= 2 and _forced_birational(d, r):
        bound = castelnuovo_genus_bound(d, r)
        if g > bound:
            return f"Castelnuovo: base point free birational g^{r}_{d} forces g <= {bound}"
    residual_degree = 2 * g - 2 - d
    residual_dim = residual - 1
    if residual_dim >= 1 and residual_degree == 2 and not curve.is_hyperelliptic:
        return f"residual |K-D| is a g^{residual_dim}_2 (hyperelliptic)"
    if residual_dim >= 1 and residual_degree == 3 and not curve.is_trigonal:
        return f"residual |K-D| is a g^{residual_dim}_3 (trigonal)"
    return None


def max_series_dimension(curve: CurveClass, d: int) -> int:
    """Largest ``r`` for which no obstruction to a ``g^r_d`` is found (-1 if none)."""
    top = max(d - curve.g, clifford_max_r(d)) if d >= 0 else -1
    for r in range(top, -1, -1):
        if series_obstruction(curve, d, r) is None:
            return r
    return -1


def max_r_degree9(curve: CurveClass) -> int:
    """Maximal dimension of a ``g^r_9`` on a curve of genus at least 5."""
    if curve.g < 5:
        raise DomainError(f"degree-9 bound needs g >= 5, got g={curve.g}")
    return max_series_dimension(curve, 9)


@dataclass(frozen=True)
class Candidate:
    g: int
    d: int
    alt_degree: int
    exclusion_reason: Optional[str]

    def to_dict(self) -> dict:
        return {"g": self.g, "d": self.d, "alt_degree": self.alt_degree,
                "exclusion_reason": self.exclusion_reason}


@dataclass
class SearchReport:
    g_min: int
    g_max: int
    d_max: int
    threshold: int
    candidates: list[Candidate] = field(default_factory=list)

    @property
    def surviving(self) -> list[tuple[int, int]]:
        return [(c.g, c.d) for c in self.candidates if c.exclusion_reason is None]

    @property
    def min_degree_conclusion(self) -> Optional[int]:
        """Smallest alt-degree among survivors; None when every pair exceeds the threshold."""
        values = [c.alt_degree for c in self.candidates if c.exclusion_reason is None]
        return min(values) if values else None

    @property
    def conclusion(self) -> str:
        low = self.min_degree_conclusion
        if low is None:
            return f"all admissible degrees exceed {self.threshold}"
        return f"admissible degree {low} <= {self.threshold} not excluded"

    def to_dict(self) -> dict:
        return {
            "g_min": self.g_min,
            "g_max": self.g_max,
            "d_max": self.d_max,
            "threshold": self.threshold,
            "candidates": [c.to_dict() for c in self.candidates],
            "surviving": [list(p) for p in self.surviving],
            "min_degree_conclusion": self.min_degree_conclusion,
            "conclusion": self.conclusion,
        }


def _required_dimension_reason(g: int, d: int, required_r: int) -> Optional[str]:
    if d > 2 * g - 2:
        r = d - g
        if r >= required_r:
            return None
        return f"nonspecial: dim|L| = d-g = {r} < {required_r}"
    if d == 2 * g - 2 and g - 1 >= required_r:
        # the canonical series is the only special one reaching r = g-1
        return None
    curve = CurveClass(g)
    best = max_series_dimension(curve, d)
    if best >= required_r:
        return None
    kind = "nonspecial or special non-canonical" if d - g >= 0 else "special non-canonical"
    return f"{kind}: dim|L| <= {best} < {required_r} ({series_obstruction(curve, d, best + 1)})"


def _scan_genus(args: tuple[int, int, int, int]) -> list[Candidate]:
    g, d_max, threshold, required_r = args
    out = []
    for d in range(0, d_max + 1):
        value = alt_degree_n3(g, d)
        if value > threshold:
            continue
        out.append(Candidate(g, d, value, _required_dimension_reason(g, d, required_r)))
    return out


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def min_alt_embedding_degree_search(g_min: int, g_max: int, d_max: Optional[int] = None, *,
                                    threshold: int = DEFAULT_THRESHOLD,
                                    required_r: int = 4,
                                    workers: Optional[int] = None) -> SearchReport:
    """Scan ``(g, d)`` for antisymmetric embeddings of ``C(3)`` of small degree.

    Curves are taken neither hyperelliptic nor trigonal.  A pair is a
    candidate when ``(L(3)^a)^3 <= threshold``; it survives when some series
    of degree ``d`` can have dimension ``>= required_r`` (a necessary
    condition for 3-very ampleness).
    """
    if d_max is None:
        d_max = g_max + 10
    if not 5 <= g_min <= g_max:
        raise DomainError(f"need 5 <= g_min <= g_max, got g_min={g_min}, g_max={g_max}")
    if d_max < g_max + 3:
        raise DomainError(f"need d_max >= g_max + 3 = {g_max + 3}, got {d_max}")
    workers = default_workers() if workers is None else max(1, workers)

    jobs = [(g, d_max, threshold, required_r) for g in range(g_min, g_max + 1)]
    if workers == 1 or len(jobs) == 1:
        chunks = [_scan_genus(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_scan_genus, jobs))
    candidates = sorted((c for chunk in chunks for c in chunk), key=lambda c: (c.g, c.d))
    return SearchReport(g_min, g_max, d_max, threshold, candidates)
