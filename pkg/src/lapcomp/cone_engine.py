"""Simplicial cones, fundamental parallelepipeds, and their transforms.

A cone is given by an invertible integer constraint matrix A as
C = {x : A x >= 0}.  With d = |det A| and R = d * A^{-1}, the columns of R
are integral ray generators, and the half-open parallelepiped they span
contains exactly d**(n-1) lattice points.  Those points form the numerator
of the integer point transform

    sigma_C(z) = (sum over parallelepiped points w of z^w)
                 / prod over ray columns v of (1 - z^v),

which can be specialized to a univariate rational generating function by
sending every variable to q ("total") or only the first one ("first
coordinate").
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Literal, Optional, Sequence

from .exact_linalg import IntegerMatrix, adjugate_pair

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceededError",
    "SimplicialCone",
    "FppPointSet",
    "IntegerPointTransform",
    "UnivariateRationalGF",
    "cone_from_constraints",
    "fpp_points",
    "integer_point_transform",
    "specialize",
    "series_expand",
    "brute_force_count",
]

# Cap on enumeration work (number of parallelepiped candidates / box cells).
DEFAULT_BUDGET = 10**8


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed its configured budget."""

    def __init__(self, message: str, required: int):
        super().__init__(message)
        self.required = required


class SimplicialCone:
    """Constraint matrix A, determinant magnitude d, ray matrix R = d*A^{-1}."""

    __slots__ = ("A", "d", "R")

    def __init__(self, A: IntegerMatrix, d: int, R: IntegerMatrix):
        self.A = A
        self.d = d
        self.R = R

    @property
    def dimension(self) -> int:
        return self.A.rows

    def rays(self) -> list[tuple[int, ...]]:
        return [self.R.column(j) for j in range(self.R.cols)]

    def __repr__(self):
        return f"SimplicialCone(dim={self.dimension}, d={self.d})"


class FppPointSet:
    """Lattice points of the half-open fundamental parallelepiped.

    Each entry is a pair (c, lam): c = A*lam lies in {0..d-1}^n and
    lam = R*c/d is the lattice point itself.
    """

    __slots__ = ("points", "d")

    def __init__(self, points: Iterable[tuple[tuple[int, ...], tuple[int, ...]]],
                 d: int):
        self.points = tuple(points)
        self.d = d

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def lattice_points(self) -> list[tuple[int, ...]]:
        return [lam for _, lam in self.points]


class IntegerPointTransform:
    """Multivariate rational generating function of a simplicial cone.

    Stored as exponent vectors: `numerator` lists one vector per
    parallelepiped lattice point, `denominator` one vector per ray.  Both
    are kept sorted so that transforms produced by different pipelines
    compare equal.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Iterable[Sequence[int]],
                 denominator: Iterable[Sequence[int]]):
        self.numerator = tuple(sorted(tuple(v) for v in numerator))
        self.denominator = tuple(sorted(tuple(v) for v in denominator))
        if not self.numerator or not self.denominator:
            raise ValueError("transform needs a numerator and a denominator")

    def __eq__(self, other):
        if isinstance(other, IntegerPointTransform):
            return (self.numerator == other.numerator
                    and self.denominator == other.denominator)
        return NotImplemented

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __str__(self):
        num = " + ".join(_monomial(v) for v in self.numerator)
        den = "".join(f"(1 - {_monomial(v, force=True)})"
                      for v in self.denominator)
        return f"({num})/({den})"

    def to_json_dict(self) -> dict:
        ray_counts = Counter(self.denominator)
        return {
            "numerator": [[str(e) for e in v] for v in self.numerator],
            "denominator": [
                {"ray": [str(e) for e in ray], "mult": str(mult)}
                for ray, mult in sorted(ray_counts.items())
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "IntegerPointTransform":
        numerator = [tuple(int(e) for e in v) for v in data["numerator"]]
        denominator = []
        for entry in data["denominator"]:
            ray = tuple(int(e) for e in entry["ray"])
            denominator.extend([ray] * int(entry["mult"]))
        return cls(numerator, denominator)


class UnivariateRationalGF:
    """Rational generating function num(q) / prod (1 - q^e)^m.

    The numerator is a dense coefficient list (constant term first, trailing
    zeros trimmed); the denominator is a sorted tuple of (exponent,
    multiplicity) pairs with equal exponents merged.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Iterable[int],
                 denominator: Iterable[tuple[int, int]]):
        coeffs = list(numerator)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            raise ValueError("empty numerator")
        merged: Counter = Counter()
        for e, m in denominator:
            if e < 1 or m < 1:
                raise ValueError(f"invalid denominator factor (1 - q^{e})^{m}")
            merged[e] += m
        self.numerator = tuple(coeffs)
        self.denominator = tuple(sorted(merged.items()))

    def __eq__(self, other):
        if isinstance(other, UnivariateRationalGF):
            return (self.numerator == other.numerator
                    and self.denominator == other.denominator)
        return NotImplemented

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __str__(self):
        num = polynomial_string(self.numerator)
        if not self.denominator:
            return num
        den = "".join(
            f"(1 - q^{e})" + (f"^{m}" if m > 1 else "")
            for e, m in self.denominator
        )
        if len(self.numerator) > 1:
            num = f"({num})"
        return f"{num}/{den}"

    def to_json_dict(self) -> dict:
        return {
            "num": [str(c) for c in self.numerator],
            "den": [[str(e), str(m)] for e, m in self.denominator],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "UnivariateRationalGF":
        return cls(
            [int(c) for c in data["num"]],
            [(int(e), int(m)) for e, m in data["den"]],
        )


def _monomial(exponents: Sequence[int], force: bool = False) -> str:
    if not force and all(e == 0 for e in exponents):
        return "1"
    return "z^(" + ",".join(str(e) for e in exponents) + ")"


def polynomial_string(coeffs: Sequence[int], var: str = "q") -> str:
    """Human-readable form of a dense coefficient list."""
    terms = []
    for e, c in enumerate(coeffs):
        if c == 0:
            continue
        if e == 0:
            body = str(abs(c))
        else:
            power = var if e == 1 else f"{var}^{e}"
            body = power if abs(c) == 1 else f"{abs(c)}{power}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c > 0 else f"- {body}")
    if not terms:
        return "0"
    return " ".join(terms)


def cone_from_constraints(A: IntegerMatrix) -> SimplicialCone:
    """Cone {x : Ax >= 0} for invertible A."""
    if not A.is_square:
        raise ValueError("constraint matrix must be square")
    d, R = adjugate_pair(A)
    return SimplicialCone(A, d, R)


def _column_hermite(A: IntegerMatrix) -> list[list[int]]:
    """Lower-triangular basis (positive diagonal) of the column lattice of A.

    Uses gcd-style integer column operations only, so the column span over
    the integers is preserved exactly.
    """
    n = A.rows
    cols = [list(A.column(j)) for j in range(n)]
    for i in range(n):
        while True:
            nonzero = [j for j in range(i, n) if cols[j][i] != 0]
            if not nonzero:
                raise ValueError("matrix is singular")
            j_min = min(nonzero, key=lambda j: abs(cols[j][i]))
            cols[i], cols[j_min] = cols[j_min], cols[i]
            done = True
            pivot = cols[i][i]
            for j in range(i + 1, n):
                if cols[j][i] != 0:
                    q = cols[j][i] // pivot
                    cols[j] = [a - q * b for a, b in zip(cols[j], cols[i])]
                    if cols[j][i] != 0:
                        done = False
            if done:
                break
        if cols[i][i] < 0:
            cols[i] = [-a for a in cols[i]]
    # Rows of the returned basis: entry (r, c) = cols[c][r].
    return [[cols[c][r] for c in range(n)] for r in range(n)]


def fpp_points(cone: SimplicialCone, budget: Optional[int] = None) -> FppPointSet:
    """Enumerate the lattice points of the half-open parallelepiped.

    A point lam is in the parallelepiped iff c = A*lam has every coordinate
    in {0..d-1}; the set of valid c vectors is exactly the column lattice of
    A reduced mod d, which a triangular lattice basis lets us walk in
    d**(n-1) steps instead of d**n.
    """
    if budget is None:
        budget = DEFAULT_BUDGET
    n = cone.dimension
    d = cone.d
    if d == 1:
        zero = (0,) * n
        return FppPointSet([(zero, zero)], 1)
    required = d ** (n - 1)
    if required > budget:
        raise BudgetExceededError(
            f"parallelepiped has {required} lattice points; budget is {budget}",
            required=required,
        )
    h = _column_hermite(cone.A)
    ranges = []
    for i in range(n):
        if d % h[i][i] != 0:
            raise ArithmeticError("triangular basis does not divide d")
        ranges.append(d // h[i][i])
    rrows = [cone.R.row(i) for i in range(n)]
    points = []
    offsets = [0] * n

    def walk(i: int):
        if i == n:
            c = tuple(v % d for v in offsets)
            lam = []
            for row in rrows:
                num = sum(a * b for a, b in zip(row, c))
                q, rem = divmod(num, d)
                if rem:
                    raise ArithmeticError("parallelepiped point not integral")
                lam.append(q)
            points.append((c, tuple(lam)))
            return
        col = [h[r][i] for r in range(i, n)]
        for x in range(ranges[i]):
            if x > 0:
                for k, r in enumerate(range(i, n)):
                    offsets[r] += col[k]
            walk(i + 1)
        for k, r in enumerate(range(i, n)):
            offsets[r] -= col[k] * (ranges[i] - 1)

    walk(0)
    points.sort()
    return FppPointSet(points, d)


def integer_point_transform(cone: SimplicialCone,
                            budget: Optional[int] = None) -> IntegerPointTransform:
    """The transform of the cone; unimodular cones skip enumeration."""
    n = cone.dimension
    if cone.d == 1:
        numerator = [(0,) * n]
    else:
        numerator = fpp_points(cone, budget).lattice_points()
    return IntegerPointTransform(numerator, cone.rays())


def specialize(ipt: IntegerPointTransform,
               mode: Literal["total", "first_coordinate"]) -> UnivariateRationalGF:
    """Collapse a transform to one variable.

    "total" sends every variable to q (exponent = coordinate sum);
    "first_coordinate" sends the first variable to q and the rest to 1.
    """
    if mode == "total":
        weight = sum
    elif mode == "first_coordinate":
        def weight(v):
            return v[0]
    else:
        raise ValueError(f"unknown specialization mode {mode!r}")
    exps = [weight(v) for v in ipt.numerator]
    if min(exps) < 0:
        raise ValueError("specialization produced a negative numerator exponent")
    coeffs = [0] * (max(exps) + 1)
    for e in exps:
        coeffs[e] += 1
    den = []
    for ray in ipt.denominator:
        e = weight(ray)
        if e <= 0:
            raise ValueError(
                "specialization sends a ray to a non-positive exponent"
            )
        den.append((e, 1))
    return UnivariateRationalGF(coeffs, den)


def series_expand(gf: UnivariateRationalGF, order: int) -> list[int]:
    """Exact coefficients of q^0..q^order of the rational function."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    coeffs = list(gf.numerator[: order + 1])
    coeffs += [0] * (order + 1 - len(coeffs))
    for e, mult in gf.denominator:
        for _ in range(mult):
            for i in range(e, order + 1):
                coeffs[i] += coeffs[i - e]
    return coeffs


def _first_coordinate_bounds(R: IntegerMatrix, value: int) -> list[int]:
    """Upper bounds on each coordinate over the slice first-coordinate = value."""
    n = R.rows
    top = R.row(0)
    if any(x <= 0 for x in top):
        raise ValueError(
            "first-coordinate slices of this cone are not bounded"
        )
    bounds = [value]
    for i in range(1, n):
        best = 0
        for rij, r0j in zip(R.row(i), top):
            if rij > 0:
                # lam_i <= max_j (R[i][j] / R[0][j]) * value over the slice.
                best = max(best, -(-rij * value // r0j))
        bounds.append(best)
    return bounds


def brute_force_count(A: IntegerMatrix,
                      statistic: Literal["total", "first_coordinate"],
                      value: int,
                      budget: Optional[int] = None) -> int:
    """Count lattice points of {x : Ax >= 0} with the given statistic value
    by explicit box enumeration.

    This is an oracle deliberately independent of the parallelepiped
    machinery: it needs the cone to sit inside the nonnegative orthant,
    which it checks by requiring the ray matrix to be entrywise >= 0.
    """
    if budget is None:
        budget = DEFAULT_BUDGET
    if value < 0:
        raise ValueError("statistic value must be nonnegative")
    n = A.rows
    _, R = adjugate_pair(A)
    if any(x < 0 for row in R for x in row):
        raise ValueError(
            "ray matrix has a negative entry; box oracle is inapplicable"
        )
    if statistic == "total":
        bounds = [value] * n
    elif statistic == "first_coordinate":
        bounds = _first_coordinate_bounds(R, value)
    else:
        raise ValueError(f"unknown statistic {statistic!r}")
    cells = 1
    for b in bounds:
        cells *= b + 1
        if cells > budget:
            raise BudgetExceededError(
                f"enumeration box exceeds budget {budget}", required=cells
            )
    rows = [A.row(i) for i in range(n)]
    nrows = len(rows)
    # max_tail[r][t] = largest possible remaining contribution to row r once
    # coordinates 0..t-1 are fixed; used to prune infeasible prefixes.
    max_tail = [
        [sum(max(row[i], 0) * bounds[i] for i in range(t, n))
         for t in range(n + 1)]
        for row in rows
    ]
    # sum_tail[t] = largest achievable sum of the undecided coordinates.
    sum_tail = [sum(bounds[t:]) for t in range(n + 1)]
    count = 0
    partial = [0] * nrows

    def walk(t: int, total_left: int):
        nonlocal count
        for r in range(nrows):
            if partial[r] + max_tail[r][t] < 0:
                return
        if statistic == "total" and total_left > sum_tail[t]:
            return
        if t == n:
            if statistic == "total" and total_left != 0:
                return
            count += 1
            return
        if statistic == "first_coordinate" and t == 0:
            lo, hi = value, value
        elif statistic == "total":
            if t == n - 1:
                # last coordinate is forced by the remaining total
                lo = hi = total_left
                if lo > bounds[t]:
                    return
            else:
                lo, hi = 0, min(bounds[t], total_left)
        else:
            lo, hi = 0, bounds[t]
        for x in range(lo, hi + 1):
            for r in range(nrows):
                partial[r] += rows[r][t] * x
            walk(t + 1, total_left - x)
            for r in range(nrows):
                partial[r] -= rows[r][t] * x

    walk(0, value)
    return count
