"""Exact dense linear algebra over the integers and rationals.

Determinants are computed with fraction-free (Bareiss) elimination, so every
intermediate value is an integer and no precision is ever lost; inverses use
Gauss-Jordan elimination over `fractions.Fraction`.  Nothing in this module
(or anywhere else in the package) touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "IntegerMatrix",
    "RationalMatrix",
    "SingularMatrixError",
    "determinant",
    "inverse",
    "adjugate_pair",
]


class SingularMatrixError(ValueError):
    """Raised when an operation needs an invertible matrix and det = 0."""


def _freeze(rows, convert):
    data = []
    width = None
    for row in rows:
        r = tuple(convert(x) for x in row)
        if width is None:
            width = len(r)
        elif len(r) != width:
            raise ValueError("matrix rows have unequal lengths")
        data.append(r)
    if not data or width == 0:
        raise ValueError("matrix must have at least one row and one column")
    return tuple(data)


def _check_int(x):
    if isinstance(x, int):
        return x
    raise TypeError(f"integer matrix entry {x!r} is not an int")


def _check_fraction(x):
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    raise TypeError(f"rational matrix entry {x!r} is not an int or Fraction")


class _MatrixBase:
    __slots__ = ("_data",)

    @property
    def rows(self) -> int:
        return len(self._data)

    @property
    def cols(self) -> int:
        return len(self._data[0])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, key):
        if isinstance(key, tuple):
            i, j = key
            return self._data[i][j]
        return self._data[key]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def to_lists(self) -> list[list]:
        return [list(r) for r in self._data]

    def __iter__(self):
        return iter(self._data)

    def __eq__(self, other):
        if isinstance(other, _MatrixBase):
            return self._data == other._data
        return NotImplemented

    def __hash__(self):
        return hash((type(self).__name__, self._data))

    def __repr__(self):
        body = ", ".join(repr(list(r)) for r in self._data)
        return f"{type(self).__name__}([{body}])"

    def transpose(self):
        return type(self)(zip(*self._data))

    def apply(self, vector: Sequence) -> tuple:
        """Matrix-vector product as a tuple."""
        if len(vector) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(
            sum(a * x for a, x in zip(row, vector)) for row in self._data
        )

    def __matmul__(self, other):
        if not isinstance(other, _MatrixBase):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("matrix dimensions do not match for product")
        cols = [other.column(j) for j in range(other.cols)]
        product = [
            [sum(a * b for a, b in zip(row, col)) for col in cols]
            for row in self._data
        ]
        if isinstance(self, RationalMatrix) or isinstance(other, RationalMatrix):
            return RationalMatrix(product)
        return IntegerMatrix(product)


class IntegerMatrix(_MatrixBase):
    """Immutable dense matrix with arbitrary-precision integer entries."""

    __slots__ = ()

    def __init__(self, rows: Iterable[Sequence[int]]):
        self._data = _freeze(rows, _check_int)

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls([[0] * cols for _ in range(rows)])

    def scale(self, k: int) -> "IntegerMatrix":
        return IntegerMatrix([[k * x for x in row] for row in self._data])


class RationalMatrix(_MatrixBase):
    """Immutable dense matrix of exact rationals (`fractions.Fraction`)."""

    __slots__ = ()

    def __init__(self, rows: Iterable[Sequence[Union[int, Fraction]]]):
        self._data = _freeze(rows, _check_fraction)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def from_integer(cls, m: IntegerMatrix) -> "RationalMatrix":
        return cls(m.to_lists())

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self._data for x in row)

    def to_integer_matrix(self) -> IntegerMatrix:
        if not self.is_integral():
            raise ValueError("matrix has non-integer entries")
        return IntegerMatrix([[int(x) for x in row] for row in self._data])

    def scale(self, k: Union[int, Fraction]) -> "RationalMatrix":
        return RationalMatrix([[k * x for x in row] for row in self._data])


def determinant(m: IntegerMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination.

    Every division below is exact, which keeps intermediate entries at the
    size of (n-1)x(n-1) minors instead of growing exponentially.
    """
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    a = m.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def inverse(m: IntegerMatrix) -> RationalMatrix:
    """Exact inverse of a square integer (or rational) matrix."""
    if not m.is_square:
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    aug = [
        [Fraction(x) for x in m.row(i)]
        + [Fraction(int(i == j)) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        pivot_row = next(
            (i for i in range(col, n) if aug[i][col] != 0), None
        )
        if pivot_row is None:
            raise SingularMatrixError("matrix is singular")
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pivot = aug[col][col]
        aug[col] = [x / pivot for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [x - factor * y for x, y in zip(aug[i], aug[col])]
    return RationalMatrix([row[n:] for row in aug])


def adjugate_pair(m: IntegerMatrix) -> tuple[int, IntegerMatrix]:
    """Return (d, R) with d = |det m| > 0 and R = d * m^{-1} integral.

    R satisfies m @ R = d * I exactly; its columns generate the ray lattice
    used throughout the cone machinery.
    """
    d = abs(determinant(m))
    if d == 0:
        raise SingularMatrixError("matrix is singular")
    inv = inverse(m)
    scaled = inv.scale(d)
    if not scaled.is_integral():
        # Cannot happen: d * m^{-1} is the (signed) adjugate, always integral.
        raise ArithmeticError("scaled inverse failed to be integral")
    return d, scaled.to_integer_matrix()
