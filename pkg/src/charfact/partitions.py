"""Partitions and half-partitions with doubled storage.

A :class:`ShiftedPartition` keeps ``2*lambda_i`` as integers, so integer and
half-integer tuples share one representation and every exponent computed from
them stays integral.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError, PartitionError


class Parity(enum.Enum):
    INTEGER = "integer"
    HALF = "half-integer"


@dataclass(frozen=True)
class ShiftedPartition:
    doubled: tuple[int, ...]
    parity: Parity

    def __post_init__(self):
        d = self.doubled
        for x, y in zip(d, d[1:]):
            if x < y:
                raise PartitionError(f"entries {self.entries} are not weakly decreasing")
        if any(v < 0 for v in d):
            raise PartitionError(f"negative entry in {self.entries}")
        odd = {v % 2 for v in d}
        if self.parity is Parity.INTEGER and odd - {0}:
            raise PartitionError(f"{self.entries} has half-integer entries")
        if self.parity is Parity.HALF and odd - {1}:
            raise PartitionError(f"{self.entries} mixes integers into a half-partition")

    def __len__(self):
        return len(self.doubled)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return ShiftedPartition(self.doubled[i], self.parity)
        return Fraction(self.doubled[i], 2)

    def __str__(self):
        return ",".join(_fmt(v) for v in self.entries)

    @property
    def entries(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, 2) for v in self.doubled)

    @property
    def is_integer(self) -> bool:
        return self.parity is Parity.INTEGER

    @property
    def size(self) -> Fraction:
        return Fraction(sum(self.doubled), 2)

    def as_ints(self) -> tuple[int, ...]:
        if not self.is_integer:
            raise PartitionError(f"{self} is a half-partition")
        return tuple(v // 2 for v in self.doubled)

    def shift(self, doubled_delta: int) -> "ShiftedPartition":
        """Add ``doubled_delta / 2`` to every entry."""
        return make([v + doubled_delta for v in self.doubled], empty_parity=_flip(self.parity, doubled_delta))


def _flip(parity: Parity, doubled_delta: int) -> Parity:
    if doubled_delta % 2 == 0:
        return parity
    return Parity.HALF if parity is Parity.INTEGER else Parity.INTEGER


def _fmt(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def make(doubled: Iterable[int], empty_parity: Parity = Parity.INTEGER) -> ShiftedPartition:
    """Validate a tuple of doubled entries.

    Parity is inferred from the entries; an empty tuple takes ``empty_parity``.
    A half-partition cannot contain 0 since all its doubled entries are odd.
    """
    d = tuple(int(v) for v in doubled)
    if not d:
        return ShiftedPartition((), empty_parity)
    if all(v % 2 == 0 for v in d):
        parity = Parity.INTEGER
    elif all(v % 2 == 1 for v in d):
        parity = Parity.HALF
    else:
        raise PartitionError(f"mixed parity in doubled entries {d}")
    return ShiftedPartition(d, parity)


def from_values(values: Iterable, empty_parity: Parity = Parity.INTEGER) -> ShiftedPartition:
    """Build from actual entries (ints, Fractions or strings like ``"3/2"``)."""
    doubled = []
    for v in values:
        two_v = 2 * Fraction(v)
        if two_v.denominator != 1:
            raise PartitionError(f"{v} is neither an integer nor a half-integer")
        doubled.append(two_v.numerator)
    return make(doubled, empty_parity)


def scalar(value) -> ShiftedPartition:
    """A single shifted value such as k, k1 or k2, as a length-1 partition."""
    return from_values([value])


def parse(text: str) -> ShiftedPartition:
    """Parse CLI syntax: comma-separated entries, half-integers as ``"3/2"``."""
    text = text.strip()
    if not text:
        return make(())
    try:
        values = [Fraction(part.strip()) for part in text.split(",")]
    except ValueError as exc:
        raise PartitionError(f"cannot parse partition {text!r}") from exc
    return from_values(values)


def rectangle(m_doubled: int, n: int) -> ShiftedPartition:
    """``(m^n)`` with ``m = m_doubled / 2``."""
    if m_doubled < 0 or n < 0:
        raise DomainError("rectangle needs m >= 0 and n >= 0")
    return make([m_doubled] * n, empty_parity=Parity.HALF if m_doubled % 2 else Parity.INTEGER)


def arithmetic_staircase(a_doubled: int, b: int, n: int) -> ShiftedPartition:
    """``(nb+a, ..., 2b+a, b+a, a)``: n+1 entries in arithmetic progression."""
    if a_doubled < 0 or b < 0 or n < 0:
        raise DomainError("arithmetic staircase needs a, b, n >= 0")
    return make([2 * b * r + a_doubled for r in range(n, -1, -1)])


def zigzag_staircase(a_doubled: int, b: int, n: int) -> ShiftedPartition:
    """n+1 entries read from the right as ``a, b-a, b+a, 2b-a, 2b+a, ...``.

    The leading entry is ``floor((n+1)/2) b + (-1)^n a``.
    """
    if a_doubled < 0 or n < 0:
        raise DomainError("zigzag staircase needs a >= 0 and n >= 0")
    if 2 * b < 2 * a_doubled:
        raise DomainError(f"zigzag staircase needs b >= 2a (b={b}, a={Fraction(a_doubled, 2)})")
    from_right = []
    for r in range(n + 1):
        if r == 0:
            from_right.append(a_doubled)
        elif r % 2:
            from_right.append((r + 1) * b - a_doubled)
        else:
            from_right.append(r * b + a_doubled)
    result = make(reversed(from_right))
    return result


def pairs_down(top: int, bottom: int) -> list[int]:
    """``top, top, top-1, top-1, ..., bottom, bottom`` as plain ints."""
    out = []
    for v in range(top, bottom - 1, -1):
        out += [v, v]
    return out


class DoubleStaircase(enum.Enum):
    QAST1 = "QAST1"
    QAST2 = "QAST2"
    AST1 = "AST1"
    AST2 = "AST2"
    DAS1 = "DAS1"
    DAS2 = "DAS2"


def double_staircase(variant: DoubleStaircase | str, n: int) -> ShiftedPartition:
    """The generating partition behind each double-staircase identity.

    QAST1 ``(n, n-1, n-1, ..., 1, 1, 0)`` (length 2n), QAST2
    ``(n, n-1, n-1, ..., 1, 1, 0, 0)`` (2n+1), AST1 ``(n, n, ..., 1, 1, 0)``
    (2n+1), AST2 ``(n-1, n-1, ..., 0, 0)`` (2n), DAS1/DAS2 the zigzag
    staircase with a=0, b=1 of length 2n+1 / 2n+2.
    """
    variant = DoubleStaircase(variant)
    if n < 0:
        raise DomainError("n must be nonnegative")
    if variant is DoubleStaircase.QAST1:
        vals = ([n] + pairs_down(n - 1, 1) + [0]) if n else []
    elif variant is DoubleStaircase.QAST2:
        vals = [n] + pairs_down(n - 1, 0)
    elif variant is DoubleStaircase.AST1:
        vals = pairs_down(n, 1) + [0]
    elif variant is DoubleStaircase.AST2:
        vals = pairs_down(n - 1, 0)
    elif variant is DoubleStaircase.DAS1:
        return zigzag_staircase(0, 1, 2 * n)
    else:
        return zigzag_staircase(0, 1, 2 * n + 1)
    return make([2 * v for v in vals])


class EmbedShape(enum.Enum):
    SYMMETRIC = "symmetric"
    TAIL_HEAD = "tail_head"
    INNER_FULL = "inner_full"
    TAIL_FULL = "tail_full"
    MIDDLE_PLUS = "middle_plus"
    MIDDLE_MINUS = "middle_minus"


def self_complementary_embed(lam: ShiftedPartition, k: ShiftedPartition | int | Fraction | str,
                             shape: EmbedShape | str = EmbedShape.SYMMETRIC) -> tuple[int, ...]:
    """Integer partition ``k +/- lambda_i`` indexing the Schur side of the factorizations.

    For ``symmetric`` ``lam`` is ``(lambda_1, ..., lambda_n)`` and the result is
    ``(k+l_1, ..., k+l_n, k-l_n, ..., k-l_1)``. For the other shapes ``lam``
    is ``(lambda_0, ..., lambda_n)``:

    * tail_head   ``(k+l_1..k+l_n, k-l_{n-1}..k-l_0)``
    * inner_full  ``(k+l_1..k+l_{n-1}, k-l_n..k-l_0)``
    * tail_full   ``(k+l_1..k+l_n, k-l_n..k-l_0)``
    * middle_plus / middle_minus ``(k+l_0..k+l_{n-1}, k+/-l_n, k-l_{n-1}..k-l_0)``
    """
    shape = EmbedShape(shape)
    if not isinstance(k, ShiftedPartition):
        k = scalar(k)
    if len(k) != 1:
        raise DomainError("k must be a single value")
    kd = k.doubled[0]
    d = list(lam.doubled)
    if not d:
        raise DomainError("empty partition")
    if lam.parity is not k.parity:
        raise PartitionError(f"k={k} and lambda=({lam}) must both be integers or both half-integers")
    if kd < d[0]:
        raise DomainError(f"k={k} is smaller than the largest part of ({lam})")

    if shape is EmbedShape.SYMMETRIC:
        plus, minus = d, d[::-1]
    elif shape is EmbedShape.TAIL_HEAD:
        plus, minus = d[1:], d[-2::-1]
    elif shape is EmbedShape.INNER_FULL:
        plus, minus = d[1:-1], d[::-1]
    elif shape is EmbedShape.TAIL_FULL:
        plus, minus = d[1:], d[::-1]
    else:
        if len(d) < 2:
            raise DomainError("middle shapes need lambda_0..lambda_n with n >= 1")
        plus, minus = d[:-1], d[-2::-1]
        middle = kd + d[-1] if shape is EmbedShape.MIDDLE_PLUS else kd - d[-1]
        doubled = [kd + v for v in plus] + [middle] + [kd - v for v in minus]
        return make(doubled).as_ints()
    doubled = [kd + v for v in plus] + [kd - v for v in minus]
    return make(doubled).as_ints()


def complement(lam: Sequence[int], a: int, b: int) -> tuple[int, ...]:
    """Complement ``(b - l_a, ..., b - l_1)`` of an a-part partition in an a x b box."""
    lam = tuple(lam)
    if len(lam) != a:
        raise DomainError(f"partition {lam} does not have {a} parts")
    if lam and (lam[0] > b or lam[-1] < 0):
        raise DomainError(f"partition {lam} does not fit in width {b}")
    return tuple(b - v for v in reversed(lam))


def is_self_complementary(lam: Sequence[int], a: int, b: int) -> bool:
    return complement(lam, a, b) == tuple(lam)
