"""Slice simplices of leafed-cycle cones and their Ehrhart data.

Cutting the cone {x : Lx >= 0} at first coordinate n and dropping that
constant coordinate leaves a full-dimensional lattice simplex on n
vertices.  This module builds those simplices, counts lattice points of
their dilates exactly, extracts h*-vectors by finite differences, and
tests reflexivity two independent ways: a halfspace certificate at one
fixed translation, and the interior-count identity L_interior(t+1) =
L(t).  A small sumset probe for normality rounds it out.

Counting goes through the digit-vector statistics of the cone whenever
the simplex remembers which n it came from; a plain box scan with exact
barycentric membership covers arbitrary simplices and doubles as an
independent cross-check.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product
from typing import NamedTuple, Optional, Sequence

from .cone_engine import DEFAULT_BUDGET, BudgetExceededError
from .cycle_families import phi_histogram_dp, phi_zero_histogram_dp
from .exact_linalg import IntegerMatrix, adjugate_pair, determinant
from .graph_core import laplacian_minor, leafed_cycle_graph

__all__ = [
    "LatticeSimplex",
    "HStarData",
    "HalfspaceReport",
    "NormalityReport",
    "build_slice_simplex",
    "interior_point",
    "reflexivity_by_halfspaces",
    "dilate_points",
    "dilate_count",
    "interior_count",
    "h_star",
    "reflexivity_by_interior_counts",
    "normality_probe",
]


class LatticeSimplex:
    """A full-dimensional lattice simplex, given by its vertices.

    `source_n` and `slice_height` record, when applicable, that the
    simplex is the height-n slice of a leafed n-cycle cone; counting
    routines use that to switch to the digit-vector formulas.
    """

    __slots__ = ("_dimension", "_vertices", "_source_n", "_slice_height")

    def __init__(self, dimension, vertices, source_n=None, slice_height=None):
        vertices = tuple(tuple(v) for v in vertices)
        if dimension < 1:
            raise ValueError("dimension must be at least 1")
        if len(vertices) != dimension + 1:
            raise ValueError(
                f"need {dimension + 1} vertices in dimension {dimension}, "
                f"got {len(vertices)}"
            )
        for v in vertices:
            if len(v) != dimension:
                raise ValueError("vertex length does not match the dimension")
            if not all(isinstance(e, int) and not isinstance(e, bool) for e in v):
                raise ValueError("vertices must have integer entries")
        self._dimension = dimension
        self._vertices = vertices
        self._source_n = source_n
        self._slice_height = slice_height
        if determinant(self.edge_matrix()) == 0:
            raise ValueError("vertices are affinely dependent")

    @property
    def dimension(self) -> int:
        return self._dimension

    @property
    def vertices(self) -> tuple[tuple[int, ...], ...]:
        return self._vertices

    @property
    def source_n(self) -> Optional[int]:
        return self._source_n

    @property
    def slice_height(self) -> Optional[int]:
        return self._slice_height

    def edge_matrix(self) -> IntegerMatrix:
        """Columns are the edge vectors from vertex 0 to the others."""
        v0 = self._vertices[0]
        return IntegerMatrix(
            [
                [self._vertices[j][i] - v0[i] for j in range(1, len(self._vertices))]
                for i in range(self._dimension)
            ]
        )

    def normalized_volume(self) -> int:
        """dimension! times the euclidean volume."""
        return abs(determinant(self.edge_matrix()))

    def __repr__(self) -> str:
        tag = f", source_n={self._source_n}" if self._source_n is not None else ""
        return f"LatticeSimplex(dim={self._dimension}, vertices={self._vertices}{tag})"


def _leafed_minor_pair(n: int):
    """Minor matrix L and scaled inverse R = n * L^-1 of the leafed n-cycle."""
    if n < 3:
        raise ValueError("leafed cycles need n >= 3")
    minor = laplacian_minor(leafed_cycle_graph(n), n)
    d, r = adjugate_pair(minor.matrix)
    if d != n:
        raise ArithmeticError(f"leafed {n}-cycle minor determinant {d} != {n}")
    return minor.matrix, r


def build_slice_simplex(n: int) -> LatticeSimplex:
    """The slice of the leafed n-cycle cone at first coordinate n.

    Its vertices are the columns of n * L^-1, which are integral because
    the minor determinant is n; every column has first coordinate n, so
    that coordinate is dropped.
    """
    _, r = _leafed_minor_pair(n)
    if any(r[0, j] != n for j in range(n)):
        raise ArithmeticError("top row of the scaled inverse is not constant n")
    vertices = tuple(tuple(r[i, j] for i in range(1, n)) for j in range(n))
    return LatticeSimplex(n - 1, vertices, source_n=n, slice_height=n)


def interior_point(n: int):
    """Row sums of L^-1: the canonical interior point of the slice.

    The first coordinate is always n.  The point is integral exactly when
    n is odd; for even n the fractional entries are returned as-is, and
    the halfspace reflexivity test reports a refutation.
    """
    _, r = _leafed_minor_pair(n)
    sums = [Fraction(sum(r.row(i)), n) for i in range(n)]
    if all(f.denominator == 1 for f in sums):
        return tuple(int(f) for f in sums)
    return tuple(sums)


class HalfspaceReport(NamedTuple):
    """Outcome of the translated halfspace description test."""

    n: int
    reflexive: bool
    reason: str
    translation: Optional[tuple[int, ...]]
    reduced_matrix: Optional[IntegerMatrix]
    rhs: Optional[tuple[int, ...]]
    translated_vertices: Optional[tuple[tuple[int, ...], ...]]

    def to_json_dict(self) -> dict:
        return {
            "n": str(self.n),
            "reflexive": self.reflexive,
            "reason": self.reason,
            "translation": (
                None if self.translation is None
                else [str(e) for e in self.translation]
            ),
            "reduced_matrix": (
                None if self.reduced_matrix is None
                else [[str(e) for e in row] for row in self.reduced_matrix.to_lists()]
            ),
            "rhs": None if self.rhs is None else [str(e) for e in self.rhs],
            "translated_vertices": (
                None if self.translated_vertices is None
                else [[str(e) for e in v] for v in self.translated_vertices]
            ),
        }


def reflexivity_by_halfspaces(n: int) -> HalfspaceReport:
    """Translate the slice simplex by its canonical interior point and test
    whether the facet description becomes {z : Bz >= -1} with integral B.

    B is the minor matrix with its first column dropped: for x in the
    slice, Lx >= 0 rewrites to L(x - u) >= -Lu = -1, and x - u has first
    coordinate 0.  A non-integral translation point is a refutation, as is
    any facet row not supported at exactly -1.
    """
    l, _ = _leafed_minor_pair(n)
    u = interior_point(n)
    if any(not isinstance(e, int) for e in u):
        return HalfspaceReport(
            n, False, "canonical interior point is not integral",
            None, None, None, None,
        )
    ones = l.apply(u)
    if any(e != 1 for e in ones):
        raise ArithmeticError("minor times its inverse row sums is not all-ones")
    drop = u[1:]
    simplex = build_slice_simplex(n)
    translated = tuple(
        tuple(a - b for a, b in zip(v, drop)) for v in simplex.vertices
    )
    reduced = IntegerMatrix([[l[i, j] for j in range(1, n)] for i in range(n)])
    values = [reduced.apply(z) for z in translated]
    for i in range(n):
        row_vals = [values[j][i] for j in range(n)]
        if any(e < -1 for e in row_vals) or row_vals.count(-1) != n - 1:
            return HalfspaceReport(
                n, False, f"facet row {i} is not supported at -1",
                drop, reduced, None, translated,
            )
    return HalfspaceReport(
        n, True, "certified", drop, reduced, (-1,) * n, translated,
    )


def _barycentric_transform(s: LatticeSimplex):
    """Integer data (d, rows of d * E^-1, v0) for membership tests.

    With y = x - t*v0 and s = (d * E^-1) y, the barycentric coordinates
    of x are s/d together with t - sum(s)/d, so sign tests against 0 and
    t*d settle membership without any rational arithmetic.
    """
    d, r = adjugate_pair(s.edge_matrix())
    return d, [r.row(i) for i in range(r.rows)], s.vertices[0]


def dilate_points(s: LatticeSimplex, t: int, budget: Optional[int] = None
                  ) -> list[tuple[int, ...]]:
    """All lattice points of t*s, by box scan with exact membership.

    A point x lies in t*s iff the barycentric solve of x - t*v0 against
    the edge matrix is componentwise >= 0 with coordinate sum <= t.
    """
    if t < 0:
        raise ValueError("dilation factor must be nonnegative")
    if t == 0:
        return [(0,) * s.dimension]
    cap = DEFAULT_BUDGET if budget is None else budget
    lows = [min(t * v[i] for v in s.vertices) for i in range(s.dimension)]
    highs = [max(t * v[i] for v in s.vertices) for i in range(s.dimension)]
    size = math.prod(h - l + 1 for l, h in zip(lows, highs))
    if size > cap:
        raise BudgetExceededError(
            f"box scan needs {size} candidates, budget is {cap}",
            required=size,
        )
    d, rows, v0 = _barycentric_transform(s)
    cap_sum = t * d
    points = []
    for x in product(*(range(l, h + 1) for l, h in zip(lows, highs))):
        y = tuple(a - t * b for a, b in zip(x, v0))
        total = 0
        for row in rows:
            c = sum(a * b for a, b in zip(row, y))
            if c < 0:
                break
            total += c
        else:
            if total <= cap_sum:
                points.append(x)
    return points


def dilate_count(s: LatticeSimplex, t: int, budget: Optional[int] = None) -> int:
    """|Z^D intersect t*s|, exactly.

    Slices of leafed cycles are counted through the digit-sum histogram:
    a cone point at first coordinate n*t is a parallelepiped point with
    digit sum phi plus a nonnegative ray combination summing to
    t - phi/n, so each stratum with n | phi contributes a binomial.
    """
    if t < 0:
        raise ValueError("dilation factor must be nonnegative")
    if t == 0:
        return 1
    n = s.source_n
    if n is None:
        return len(dilate_points(s, t, budget=budget))
    total = 0
    for phi, count in enumerate(phi_histogram_dp(n)):
        if count and phi % n == 0:
            top = t - phi // n + n - 1
            if top >= n - 1:
                total += count * math.comb(top, n - 1)
    return total


def interior_count(s: LatticeSimplex, t: int, budget: Optional[int] = None) -> int:
    """Number of lattice points strictly inside t*s.

    For leafed slices: a cone point is interior iff every constraint
    value is positive, which forces a strictly positive ray coefficient
    wherever the parallelepiped point's digit is zero.  Each (phi, z)
    stratum with n | phi therefore contributes C(t - phi/n - z + n - 1,
    n - 1) points at height n*t.
    """
    if t < 0:
        raise ValueError("dilation factor must be nonnegative")
    if t == 0:
        return 0
    n = s.source_n
    if n is None:
        d, rows, v0 = _barycentric_transform(s)
        count = 0
        for x in dilate_points(s, t, budget=budget):
            y = tuple(a - t * b for a, b in zip(x, v0))
            scaled = [sum(a * b for a, b in zip(row, y)) for row in rows]
            if all(c > 0 for c in scaled) and sum(scaled) < t * d:
                count += 1
        return count
    total = 0
    for (phi, zeros), count in phi_zero_histogram_dp(n).items():
        if phi % n == 0:
            top = t - phi // n - zeros + n - 1
            if top >= n - 1:
                total += count * math.comb(top, n - 1)
    return total


class HStarData(NamedTuple):
    """h*-vector of a lattice simplex with the dilate counts behind it."""

    h_star: tuple[int, ...]
    dilate_counts: tuple[int, ...]
    palindromic: bool
    unimodal: bool
    reflexive_certificate: Optional[bool]

    def to_json_dict(self) -> dict:
        return {
            "h_star": [str(e) for e in self.h_star],
            "dilate_counts": [str(e) for e in self.dilate_counts],
            "palindromic": self.palindromic,
            "unimodal": self.unimodal,
            "reflexive_certificate": self.reflexive_certificate,
        }


def _is_unimodal(seq: Sequence[int]) -> bool:
    falling = False
    for a, b in zip(seq, seq[1:]):
        if b < a:
            falling = True
        elif b > a and falling:
            return False
    return True


def h_star(s: LatticeSimplex, budget: Optional[int] = None) -> HStarData:
    """h*-vector by finite differences of the first D+1 dilate counts:
    h*_j = sum_i (-1)^i C(D+1, i) L(j-i).

    Nonnegativity of every entry is a theorem for lattice polytopes, so a
    negative entry here means inconsistent counts and raises.
    """
    dim = s.dimension
    counts = tuple(dilate_count(s, t, budget=budget) for t in range(dim + 1))
    h = [
        sum((-1) ** i * math.comb(dim + 1, i) * counts[j - i] for i in range(j + 1))
        for j in range(dim + 1)
    ]
    if h[0] != 1 or any(e < 0 for e in h):
        raise ArithmeticError(f"inconsistent dilate counts: h* = {h}")
    cert = None
    if s.source_n is not None:
        cert = reflexivity_by_halfspaces(s.source_n).reflexive
    return HStarData(tuple(h), counts, h == h[::-1], _is_unimodal(h), cert)


def reflexivity_by_interior_counts(s: LatticeSimplex, t_max: int,
                                   budget: Optional[int] = None) -> bool:
    """Check L_interior(t+1) = L(t) for all t <= t_max.

    The identity characterizes reflexive polytopes (with t ranging over
    everything; checking the first D values already settles it, both
    sides being polynomials of degree D).  Independent of the halfspace
    certificate route.
    """
    if t_max < 1:
        raise ValueError("t_max must be at least 1")
    return all(
        interior_count(s, t + 1, budget=budget) == dilate_count(s, t, budget=budget)
        for t in range(t_max + 1)
    )


class NormalityReport(NamedTuple):
    """Sumset evidence for normality up to a dilation bound."""

    m_max: int
    results: tuple[bool, ...]
    normal_up_to: int
    counterexample: Optional[tuple[int, tuple[int, ...]]]

    def to_json_dict(self) -> dict:
        return {
            "m_max": str(self.m_max),
            "results": list(self.results),
            "normal_up_to": str(self.normal_up_to),
            "counterexample": (
                None if self.counterexample is None
                else {
                    "m": str(self.counterexample[0]),
                    "point": [str(e) for e in self.counterexample[1]],
                }
            ),
        }


def normality_probe(s: LatticeSimplex, m_max: int = 2,
                    budget: Optional[int] = None) -> NormalityReport:
    """Verify, for each m <= m_max, that every lattice point of m*s is a
    sum of m lattice points of s.  Evidence only — stops at the first
    failing m and records one uncovered point.
    """
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    base = dilate_points(s, 1, budget=budget)
    reachable = set(base)
    results = [True]
    counterexample = None
    for m in range(2, m_max + 1):
        reachable = {
            tuple(a + b for a, b in zip(p, q)) for p in reachable for q in base
        }
        target = set(dilate_points(s, m, budget=budget))
        if not reachable <= target:
            raise ArithmeticError("sumset escaped the dilate; vertices corrupt")
        missing = target - reachable
        results.append(not missing)
        if missing:
            counterexample = (m, min(missing))
            break
    normal_up_to = 0
    for ok in results:
        if not ok:
            break
        normal_up_to += 1
    return NormalityReport(m_max, tuple(results), normal_up_to, counterexample)
