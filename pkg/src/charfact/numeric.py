"""Exact rational scalars, integer powers and determinants.

Scalars are :class:`fractions.Fraction`, which is always reduced with a
positive denominator, so equal values compare equal structurally.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Union

from .errors import DomainError, ShapeError

Rational = Fraction
Number = Union[int, Fraction]


def rat(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass an int, Fraction or 'p/q' string")
    return Fraction(value)


def rat_pow(base: Number, exp: int) -> Fraction:
    base = rat(base)
    if exp < 0 and base == 0:
        raise DomainError("zero cannot be raised to a negative power")
    return base ** exp


def rat_str(value: Number) -> str:
    """Canonical text form: ``"p/q"``, or ``"p"`` when the denominator is 1."""
    value = rat(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Number]]) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), ncols, tuple(rat(v) for r in rows for v in r))

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]


def _as_rows(m) -> list[list[Fraction]]:
    if isinstance(m, RationalMatrix):
        if m.rows != m.cols:
            raise ShapeError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
        return m.to_rows()
    rows = [[rat(v) for v in r] for r in m]
    if any(len(r) != len(rows) for r in rows):
        raise ShapeError("determinant of a non-square matrix")
    return rows


def bareiss(rows: list[list[int]]) -> int:
    """Fraction-free determinant of a square integer matrix (consumed in place)."""
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        rk = rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            a = ri[k]
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                ri[j] = (pivot * ri[j] - a * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


def det(m: Union[RationalMatrix, Iterable[Sequence[Number]]]) -> Fraction:
    """Exact determinant.

    Each row is scaled to integers by the lcm of its denominators, the integer
    determinant is taken by Bareiss elimination, and the scale is divided back out.
    """
    rows = _as_rows(m)
    scale = 1
    int_rows = []
    for r in rows:
        den = lcm(*(v.denominator for v in r)) if r else 1
        scale *= den
        int_rows.append([v.numerator * (den // v.denominator) for v in r])
    return Fraction(bareiss(int_rows), scale)
