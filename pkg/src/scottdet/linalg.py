"""Dense square matrices over a scalar field: determinant and permanent.

Entries may be ``Fraction``, ``ExactScalar``, ``RationalFunction`` (exact
path, Gaussian elimination) or ``complex`` (float path, LU with partial
pivoting via numpy).  Polynomial matrices go through ``bareiss_det``.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import UsageError
from .poly import MultiPoly

__all__ = ["ScalarMatrix", "field_det", "bareiss_det", "ryser_permanent", "ring_det"]


class ScalarMatrix:
    """Immutable n-by-n matrix stored as a tuple of row tuples."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(row) for row in rows)
        if any(len(row) != len(rows) for row in rows):
            raise UsageError("matrix must be square")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("ScalarMatrix is immutable")

    @classmethod
    def from_function(cls, n: int, entry) -> ScalarMatrix:
        """Matrix with (i, j) entry ``entry(i, j)``, 0-based indices."""
        return cls([[entry(i, j) for j in range(n)] for i in range(n)])

    @classmethod
    def identity(cls, n: int, one=Fraction(1), zero=Fraction(0)) -> ScalarMatrix:
        return cls.from_function(n, lambda i, j: one if i == j else zero)

    @property
    def order(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other):
        if not isinstance(other, ScalarMatrix):
            return NotImplemented
        return self.rows == other.rows

    __hash__ = None

    def tolist(self):
        return [list(row) for row in self.rows]

    def transpose(self) -> ScalarMatrix:
        return ScalarMatrix(zip(*self.rows))

    def swap_rows(self, a: int, b: int) -> ScalarMatrix:
        rows = list(self.rows)
        rows[a], rows[b] = rows[b], rows[a]
        return ScalarMatrix(rows)

    def permute(self, row_order=None, col_order=None) -> ScalarMatrix:
        n = self.order
        ro = range(n) if row_order is None else row_order
        co = range(n) if col_order is None else col_order
        return ScalarMatrix([[self.rows[i][j] for j in co] for i in ro])

    def map(self, f) -> ScalarMatrix:
        return ScalarMatrix([[f(a) for a in row] for row in self.rows])

    def __matmul__(self, other: ScalarMatrix) -> ScalarMatrix:
        n = self.order
        if other.order != n:
            raise UsageError("order mismatch in matrix product")
        cols = list(zip(*other.rows))
        return ScalarMatrix([[_dot(row, col) for col in cols] for row in self.rows])

    def det(self):
        return field_det(self)

    def permanent(self):
        return ryser_permanent(self)

    def __repr__(self):
        body = ",\n ".join("[" + ", ".join(str(a) for a in row) + "]" for row in self.rows)
        return f"ScalarMatrix([{body}])"


def _dot(u, v):
    total = 0
    for a, b in zip(u, v):
        total = total + a * b
    return total


def _rows(m):
    if isinstance(m, ScalarMatrix):
        return [list(row) for row in m.rows]
    rows = [list(row) for row in m]
    if any(len(row) != len(rows) for row in rows):
        raise UsageError("matrix must be square")
    return rows


def _is_float(a):
    return isinstance(a, (complex, float, np.floating, np.complexfloating))


def field_det(m):
    """Determinant over a field.

    Exact entries use Gaussian elimination with a search for any nonzero
    pivot; float entries use LU with partial pivoting by magnitude.
    A singular matrix gives zero.
    """
    rows = _rows(m)
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if all(_is_float(a) for row in rows for a in row):
        return complex(np.linalg.det(np.array(rows, dtype=complex)))
    sign = 1
    det = 1
    for col in range(n):
        pivot = next((i for i in range(col, n) if rows[i][col]), None)
        if pivot is None:
            return 0 * rows[0][0]
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            sign = -sign
        p = rows[col][col]
        det = det * p
        inv = 1 / p
        for i in range(col + 1, n):
            a = rows[i][col]
            if a:
                f = a * inv
                ri, rc = rows[i], rows[col]
                for j in range(col + 1, n):
                    ri[j] = ri[j] - f * rc[j]
    return det if sign > 0 else -det


def bareiss_det(m):
    """Fraction-free (Bareiss) determinant over an integral domain.

    Polynomial entries divide exactly via ``MultiPoly.exact_div``; field
    entries use ordinary division.
    """
    rows = _rows(m)
    n = len(rows)
    if n == 0:
        return Fraction(1)

    def div(a, b):
        if isinstance(a, MultiPoly):
            return a.exact_div(b)
        return a / b

    sign = 1
    prev = None
    for k in range(n - 1):
        if not rows[k][k]:
            swap = next((i for i in range(k + 1, n) if rows[i][k]), None)
            if swap is None:
                return 0 * rows[0][0]
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pk = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                v = rows[i][j] * pk - rows[i][k] * rows[k][j]
                rows[i][j] = v if prev is None else div(v, prev)
        prev = pk
    det = rows[n - 1][n - 1]
    return det if sign > 0 else -det


def ring_det(m):
    """``bareiss_det`` for polynomial entries, ``field_det`` otherwise."""
    rows = _rows(m)
    if any(isinstance(a, MultiPoly) for row in rows for a in row):
        return bareiss_det(rows)
    return field_det(rows)


def ryser_permanent(m):
    """Permanent by Ryser's inclusion-exclusion over column subsets.

    Subsets are visited in Gray-code order so each step updates the row
    sums by a single column.
    """
    rows = _rows(m)
    n = len(rows)
    if n == 0:
        return Fraction(1)
    row_sums = [0] * n
    in_set = [False] * n
    total = 0
    size = 0
    for k in range(1, 1 << n):
        j = (k & -k).bit_length() - 1
        if in_set[j]:
            row_sums = [s - row[j] for s, row in zip(row_sums, rows)]
            size -= 1
        else:
            row_sums = [s + row[j] for s, row in zip(row_sums, rows)]
            size += 1
        in_set[j] = not in_set[j]
        prod = row_sums[0]
        for s in row_sums[1:]:
            prod = prod * s
        total = total + prod if size % 2 == n % 2 else total - prod
    return total
