"""Exact rational dense linear algebra.

Everything here works on :class:`fractions.Fraction` entries, so determinants,
ranks and minors are exact.  Column subsets are always reported as sorted,
1-based tuples to line up with the ``[2n]`` labelling used for positroids.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ContractError, DimensionError

Subset = tuple[int, ...]


def to_fraction(value) -> Fraction:
    """Coerce ints, Fractions, ``"p/q"`` strings and decimal floats exactly."""
    if isinstance(value, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(value, float):
        # repr keeps the shortest decimal form, so 0.5 -> 1/2 and 1.6 -> 8/5
        return Fraction(repr(value))
    return Fraction(value)


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionError(
                f"entries do not form a {self.rows}x{self.cols} array"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> RationalMatrix:
        data = tuple(tuple(to_fraction(x) for x in row) for row in rows)
        n_cols = len(data[0]) if data else 0
        return cls(len(data), n_cols, data)

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def ones(cls, n: int) -> RationalMatrix:
        return cls.from_rows([[1] * n for _ in range(n)])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self.entries[i][j]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> RationalMatrix:
        """Select rows and columns by 1-based index."""
        rows, cols = list(rows), list(cols)
        return RationalMatrix.from_rows(
            [[self.entries[i - 1][j - 1] for j in cols] for i in rows]
        )

    def columns(self, cols: Iterable[int]) -> RationalMatrix:
        return self.submatrix(range(1, self.rows + 1), cols)

    def hstack(self, other: RationalMatrix) -> RationalMatrix:
        if self.rows != other.rows:
            raise DimensionError("row counts differ")
        return RationalMatrix.from_rows(
            [a + b for a, b in zip(self.entries, other.entries)]
        )

    # -- serialisation -------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[_encode_entry(x) for x in row] for row in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> RationalMatrix:
        try:
            rows, cols, entries = data["rows"], data["cols"], data["entries"]
        except (KeyError, TypeError) as exc:
            raise ContractError(f"matrix JSON needs rows, cols, entries: {exc}") from None
        m = cls.from_rows(entries)
        if (m.rows, m.cols) != (rows, cols):
            raise DimensionError(
                f"declared shape {rows}x{cols} but entries are {m.rows}x{m.cols}"
            )
        return m

    @classmethod
    def from_json(cls, text: str) -> RationalMatrix:
        return cls.from_dict(json.loads(text))


def _encode_entry(x: Fraction):
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def det(m: RationalMatrix) -> Fraction:
    """Determinant by Bareiss fraction-free elimination.

    With integer input every intermediate value stays an integer; the
    divisions are exact by Sylvester's identity.
    """
    if not m.is_square:
        raise DimensionError(f"det needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    if n == 0:
        return Fraction(1)
    a = m.tolist()
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) / prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def rank(m: RationalMatrix) -> int:
    a = m.tolist()
    r = 0
    for c in range(m.cols):
        pivot = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        for i in range(r + 1, m.rows):
            f = a[i][c] / a[r][c]
            if f:
                for j in range(c, m.cols):
                    a[i][j] -= f * a[r][j]
        r += 1
        if r == m.rows:
            break
    return r


def maximal_minors(m: RationalMatrix) -> dict[Subset, Fraction]:
    """All ``rows x rows`` minors, keyed by sorted 1-based column subsets."""
    if m.rows > m.cols:
        raise DimensionError(f"{m.rows}x{m.cols} matrix has no maximal minors")
    return {
        cols: det(m.columns(cols))
        for cols in combinations(range(1, m.cols + 1), m.rows)
    }


def is_positroid_matrix(m: RationalMatrix) -> bool:
    """Full row rank with every maximal minor nonnegative."""
    minors = maximal_minors(m)
    return any(v != 0 for v in minors.values()) and all(v >= 0 for v in minors.values())


def psi(a: RationalMatrix) -> RationalMatrix:
    """Embed an ``n x n`` matrix as ``[I | R]`` with ``R`` the row-reversed, sign-alternated ``a``.

    Row ``i`` (1-based) of the right block is ``(-1)**(n-i)`` times row
    ``n+1-i`` of ``a``; the bottom row therefore carries ``a``'s first row
    unsigned.
    """
    if not a.is_square:
        raise DimensionError(f"psi needs a square matrix, got {a.rows}x{a.cols}")
    n = a.rows
    right = [
        [(-1) ** (n - i) * x for x in a.entries[n - i]]
        for i in range(1, n + 1)
    ]
    return RationalMatrix.identity(n).hstack(RationalMatrix.from_rows(right))


def k_set(i_set: Iterable[int], j_set: Iterable[int], n: int) -> Subset:
    """Columns of ``psi(A)`` whose maximal minor equals the ``(I, J)`` minor of ``A``."""
    i_set, j_set = set(i_set), set(j_set)
    if len(i_set) != len(j_set):
        raise ContractError(f"|I| = {len(i_set)} but |J| = {len(j_set)}")
    if not (i_set | j_set) <= set(range(1, n + 1)):
        raise ContractError(f"I and J must be subsets of [1, {n}]")
    left = {n + 1 - k for k in range(1, n + 1) if k not in i_set}
    return tuple(sorted(left | {n + j for j in j_set}))


def minor(m: RationalMatrix, rows: Iterable[int], cols: Iterable[int]) -> Fraction:
    """Determinant of the 1-based ``rows x cols`` submatrix (empty minor is 1)."""
    return det(m.submatrix(rows, cols))
