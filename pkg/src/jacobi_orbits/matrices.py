"""Small exact matrices over Q or Q(i).

Fixed-size square matrices with entries in whichever exact scalar ring the
caller supplies (``Rat`` or ``GaussRational``).  Only the operations the
orbit machinery needs are provided: products, powers, inverse, transpose,
entrywise conjugation, and rank by exact Gaussian elimination (the 6x6 rank
is what orbit dimensions are computed from).  This is deliberately not a
general linear-algebra layer.
"""

from __future__ import annotations

from typing import Sequence

from .errors import SingularMatrixError
from .scalars import GaussRational, Rat, rat


class Mat:
    """Immutable n x n matrix; entries are exact scalars of one ring."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Sequence[Sequence]):
        n = len(rows)
        rows = tuple(tuple(r) for r in rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, *_):
        raise AttributeError("Mat is immutable")

    # -- construction ----------------------------------------------------

    @classmethod
    def identity(cls, n: int, one=None) -> "Mat":
        one = Rat(1) if one is None else one
        zero = one - one
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n: int, zero=None) -> "Mat":
        zero = Rat(0) if zero is None else zero
        return cls([[zero] * n for _ in range(n)])

    # -- basics -----------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, Mat) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(e) for e in row) for row in self.rows)
        return f"Mat[{body}]"

    def _zero_entry(self):
        e = self.rows[0][0]
        return e - e

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "Mat") -> "Mat":
        return Mat([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other: "Mat") -> "Mat":
        return Mat([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self) -> "Mat":
        return Mat([[-a for a in row] for row in self.rows])

    def scale(self, c) -> "Mat":
        return Mat([[c * a for a in row] for row in self.rows])

    def __mul__(self, other: "Mat") -> "Mat":
        if not isinstance(other, Mat):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        cols = tuple(zip(*other.rows))
        return Mat(
            [
                [sum((a * b for a, b in zip(row, col)), self._zero_entry()) for col in cols]
                for row in self.rows
            ]
        )

    def __pow__(self, k: int) -> "Mat":
        if k < 0:
            return self.inverse() ** (-k)
        result = Mat.identity(self.n, one=self._zero_entry() + 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def transpose(self) -> "Mat":
        return Mat(list(zip(*self.rows)))

    def conjugate(self) -> "Mat":
        """Entrywise complex conjugation; identity on rational entries."""
        return Mat(
            [
                [e.conjugate() if isinstance(e, GaussRational) else e for e in row]
                for row in self.rows
            ]
        )

    def trace(self):
        return sum((self.rows[i][i] for i in range(self.n)), self._zero_entry())

    def is_zero(self) -> bool:
        return all(not e for row in self.rows for e in row)

    # -- elimination-based operations --------------------------------------

    def inverse(self) -> "Mat":
        """Exact inverse by Gauss-Jordan elimination.

        Raises SingularMatrixError when no inverse exists.
        """
        n = self.n
        zero = self._zero_entry()
        one = zero + 1
        aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(self.rows)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if aug[r][col]), None)
            if pivot is None:
                raise SingularMatrixError("matrix is singular")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv_p = one / aug[col][col]
            aug[col] = [e * inv_p for e in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    factor = aug[r][col]
                    aug[r] = [e - factor * p for e, p in zip(aug[r], aug[col])]
        return Mat([row[n:] for row in aug])

    def det(self):
        n = self.n
        zero = self._zero_entry()
        rows = [list(r) for r in self.rows]
        det = zero + 1
        for col in range(n):
            pivot = next((r for r in range(col, n) if rows[r][col]), None)
            if pivot is None:
                return zero
            if pivot != col:
                rows[col], rows[pivot] = rows[pivot], rows[col]
                det = -det
            det = det * rows[col][col]
            inv_p = (zero + 1) / rows[col][col]
            for r in range(col + 1, n):
                if rows[r][col]:
                    factor = rows[r][col] * inv_p
                    rows[r] = [e - factor * p for e, p in zip(rows[r], rows[col])]
        return det


def mat_rank(rows: Sequence[Sequence]) -> int:
    """Rank of an arbitrary (possibly rectangular) exact matrix over Q or Q(i)."""
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    col = 0
    while rank < len(rows) and col < ncols:
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pivot_val = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            if rows[r][col]:
                factor = rows[r][col] / pivot_val
                rows[r] = [e - factor * p for e, p in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def _entry(value):
    return value if isinstance(value, GaussRational) else rat(value)


def mat2(a, b, c, d) -> Mat:
    """2x2 matrix from entries (rationals or Gaussian rationals)."""
    return Mat([[_entry(a), _entry(b)], [_entry(c), _entry(d)]])
