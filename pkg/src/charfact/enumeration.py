"""Plane partition and alternating sign matrix counts.

Product formulas are evaluated as exact rationals and must come out integral.
Brute-force oracles enumerate the objects themselves at desk scale.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import factorial, prod
from typing import Iterator, Sequence

from .characters import CharacterFamily, Family, dim_character
from .errors import DomainError, UnsupportedError
from .partitions import make, pairs_down


class CountTag(enum.Enum):
    PP = "pp"
    TCPP = "tcpp"
    SPP = "spp"
    SPP_STAR = "spp_star"
    CSPP = "cspp"
    ASM = "asm"
    DASASM = "dasasm"
    TSPP = "tspp"
    R = "r"
    CSTCPP = "cstcpp"
    VSASM = "vsasm"


ARITY = {CountTag.PP: 3, CountTag.TCPP: 2, CountTag.SPP: 2, CountTag.SPP_STAR: 2}


@dataclass(frozen=True)
class CountFamily:
    """A counting family with its size arguments.

    PP takes ``(a, b, c)``. TCPP, SPP and SPP* take ``(a, b)`` for a
    ``(2a) x b x b`` box. The one-argument families take the size exactly as
    written in ``CSPP(m)``, ``ASM(m)``, ``DASASM(2m+1)``, ``TSPP(2m,2m,2m)``,
    ``R(2m)``, ``CSTCPP(2m,2m,2m)`` and ``VSASM(2m+1)``, so the even / odd
    families reject sizes of the wrong parity.
    """

    tag: CountTag
    params: tuple[int, ...]

    def __post_init__(self):
        want = ARITY.get(self.tag, 1)
        if len(self.params) != want:
            raise DomainError(f"{self.tag.value} takes {want} size argument(s), got {self.params}")
        if any(p < 0 for p in self.params):
            raise DomainError("sizes must be nonnegative")
        if self.tag is CountTag.SPP_STAR and self.params[1] < 1:
            raise DomainError("SPP*(2a,b,b) needs b >= 1")
        if self.tag in (CountTag.TSPP, CountTag.R, CountTag.CSTCPP) and self.params[0] % 2:
            raise DomainError(f"{self.tag.value} is defined for even sizes 2m")
        if self.tag in (CountTag.DASASM, CountTag.VSASM) and self.params[0] % 2 == 0:
            raise DomainError(f"{self.tag.value} is defined for odd sizes 2m+1")

    @classmethod
    def of(cls, name: str, *params: int) -> "CountFamily":
        key = name.strip().lower().replace("*", "_star")
        try:
            tag = CountTag(key)
        except ValueError:
            raise DomainError(f"unknown count family {name!r}") from None
        return cls(tag, tuple(int(p) for p in params))

    def __str__(self):
        return f"{self.tag.value.upper()}({','.join(map(str, self.params))})"


def _integral(value: Fraction, what) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{what} evaluated to non-integer {value}")
    return value.numerator


def _ratio_prod(terms) -> Fraction:
    return prod((Fraction(num, den) for num, den in terms), start=Fraction(1))


def count(family: CountFamily) -> int:
    """Product formula for the family."""
    tag, p = family.tag, family.params
    if tag is CountTag.PP:
        a, b, c = p
        value = _ratio_prod((i + j + k - 1, i + j + k - 2)
                            for i in range(1, a + 1) for j in range(1, b + 1) for k in range(1, c + 1))
    elif tag is CountTag.TCPP:
        a, b = p
        value = _ratio_prod((i + j + 2 * a - 1, i + j - 1)
                            for i in range(1, b + 1) for j in range(i + 1, b + 1))
    elif tag is CountTag.SPP:
        a, b = p
        value = _ratio_prod((i + j + 2 * a - 1, i + j - 1)
                            for i in range(1, b + 1) for j in range(i, b + 1))
    elif tag is CountTag.SPP_STAR:
        a, b = p
        value = 2 * _ratio_prod((i + j + 2 * a - 2, i + j - 2)
                                for i in range(1, b + 1) for j in range(i + 1, b + 1))
    elif tag is CountTag.CSPP:
        (m,) = p
        value = _ratio_prod(((3 * i + 2) * factorial(3 * i), factorial(m + i)) for i in range(m))
    elif tag is CountTag.ASM:
        (m,) = p
        value = _ratio_prod((factorial(3 * i + 1), factorial(m + i)) for i in range(m))
    elif tag is CountTag.DASASM:
        m = p[0] // 2
        value = _ratio_prod((factorial(3 * i), factorial(m + i)) for i in range(m + 1))
    elif tag is CountTag.TSPP:
        m = p[0] // 2
        value = _ratio_prod(((6 * i - 1) * factorial(6 * i - 3), (2 * i - 1) * factorial(2 * m + 2 * i - 1))
                            for i in range(1, m + 1))
    elif tag is CountTag.R:
        m = p[0] // 2
        value = _ratio_prod((factorial(6 * i + 1), factorial(2 * m + 2 * i - 1)) for i in range(m))
    elif tag is CountTag.CSTCPP:
        m = p[0] // 2
        value = _ratio_prod(((2 * i + 1) * factorial(6 * i + 2), (6 * i + 1) * factorial(2 * m + 2 * i))
                            for i in range(m))
    else:
        m = p[0] // 2
        value = _ratio_prod((factorial(6 * i - 2), factorial(2 * m + 2 * i)) for i in range(1, m + 1))
    return _integral(value, family)


# -- plane partitions --------------------------------------------------------

Heights = tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def _rows_under(upper: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Weakly decreasing rows r with r_j <= upper_j."""
    out = []

    def rec(prefix, cap):
        j = len(prefix)
        if j == len(upper):
            out.append(tuple(prefix))
            return
        for v in range(min(cap, upper[j]), -1, -1):
            prefix.append(v)
            rec(prefix, v)
            prefix.pop()
    rec([], upper[0] if upper else 0)
    return tuple(out)


def plane_partitions(a: int, b: int, c: int) -> Iterator[Heights]:
    """a x b arrays of heights in [0, c], weakly decreasing along rows and columns."""
    def rec(rows, upper):
        if len(rows) == a:
            yield tuple(rows)
            return
        for row in _rows_under(upper):
            rows.append(row)
            yield from rec(rows, row)
            rows.pop()
    yield from rec([], (c,) * b)


def ideal(pi: Heights) -> frozenset[tuple[int, int, int]]:
    """The 3D order ideal ``{(i, j, k) : k < pi[i][j]}``."""
    return frozenset((i, j, k) for i, row in enumerate(pi) for j, h in enumerate(row) for k in range(h))


def heights_from_ideal(cells, a: int, b: int) -> Heights:
    h = [[0] * b for _ in range(a)]
    for i, j, _ in cells:
        h[i][j] += 1
    return tuple(tuple(r) for r in h)


# Axis maps on the ideal, written on heights so the oracle stays fast. Each
# one is cross-checked against the literal cell map in the tests.

def transpose(pi: Heights) -> Heights:
    """Swap the first two axes: (i, j, k) -> (j, i, k)."""
    return tuple(zip(*pi)) if pi else pi


def box_complement(pi: Heights, c: int) -> Heights:
    """Cells of the a x b x c box not in the point-reflected ideal."""
    return tuple(tuple(c - h for h in reversed(row)) for row in reversed(pi))


def rotate(pi: Heights, c: int) -> Heights:
    """Cycle the axes, (i, j, k) -> (j, k, i); result lives in a b x c x a box."""
    a = len(pi)
    b = len(pi[0]) if pi else 0
    return tuple(tuple(sum(1 for i in range(a) if pi[i][j] > k) for k in range(c)) for j in range(b))


def _first_row_matches_rotation(pi: Heights) -> bool:
    # row 0 of the rotation is the conjugate of column 0: a cheap necessary test
    if not pi or not pi[0]:
        return True
    col0 = [row[0] for row in pi]
    return all(pi[0][k] == sum(1 for h in col0 if h > k) for k in range(len(pi[0])))


def is_cyclic(pi: Heights, c: int) -> bool:
    return _first_row_matches_rotation(pi) and rotate(pi, c) == pi


def is_symmetric(pi: Heights) -> bool:
    return transpose(pi) == pi


def is_transpose_complementary(pi: Heights, c: int) -> bool:
    return box_complement(pi, c) == transpose(pi)


# -- alternating sign matrices -----------------------------------------------

@lru_cache(maxsize=None)
def _asm_rows(m: int) -> tuple[tuple[int, ...], ...]:
    """Rows whose nonzero entries alternate +1, -1, ..., +1."""
    out = []
    for mask in range(3 ** m):
        row, v = [], mask
        for _ in range(m):
            row.append(v % 3 - 1)
            v //= 3
        nz = [x for x in row if x]
        if nz and all(x == (1 if t % 2 == 0 else -1) for t, x in enumerate(nz)) and nz[-1] == 1:
            out.append(tuple(row))
    return tuple(out)


def alternating_sign_matrices(m: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    rows = _asm_rows(m)

    def rec(acc, colsum):
        if len(acc) == m:
            if all(s == 1 for s in colsum):
                yield tuple(acc)
            return
        for row in rows:
            new = tuple(s + x for s, x in zip(colsum, row))
            if all(0 <= s <= 1 for s in new):
                acc.append(row)
                yield from rec(acc, new)
                acc.pop()
    if m == 0:
        yield ()
        return
    yield from rec([], (0,) * m)


def is_asm(mat) -> bool:
    """Direct check: rows and columns have partial sums in {0, 1} ending at 1."""
    def ok(line):
        s = 0
        for x in line:
            if x not in (-1, 0, 1):
                return False
            s += x
            if s not in (0, 1):
                return False
        return s == 1
    return all(ok(r) for r in mat) and all(ok(c) for c in zip(*mat))


BRUTE_PP_VOLUME = 64
BRUTE_ASM_ORDER = 6
BRUTE_SYMMETRIC_ASM_ORDER = 5


def brute_count(family: CountFamily) -> int:
    """Count the objects by exhaustive enumeration."""
    tag, p = family.tag, family.params
    if tag is CountTag.PP:
        a, b, c = p
        if a * b * c > BRUTE_PP_VOLUME:
            raise UnsupportedError(f"{family}: box volume above {BRUTE_PP_VOLUME}")
        return sum(1 for _ in plane_partitions(a, b, c))
    if tag in (CountTag.SPP, CountTag.TCPP):
        a, b = p
        if max(2 * a, b) > 4:
            raise UnsupportedError(f"{family}: symmetry classes are enumerated for box sides <= 4")
        height = 2 * a
        if tag is CountTag.SPP:
            return sum(1 for pi in plane_partitions(b, b, height) if is_symmetric(pi))
        return sum(1 for pi in plane_partitions(b, b, height) if is_transpose_complementary(pi, height))
    if tag in (CountTag.CSPP, CountTag.TSPP, CountTag.CSTCPP):
        side = p[0]
        if side > 4:
            raise UnsupportedError(f"{family}: symmetry classes are enumerated for box sides <= 4")
        pps = plane_partitions(side, side, side)
        if tag is CountTag.CSPP:
            return sum(1 for pi in pps if is_cyclic(pi, side))
        if tag is CountTag.TSPP:
            return sum(1 for pi in pps if is_symmetric(pi) and is_cyclic(pi, side))
        return sum(1 for pi in pps if is_cyclic(pi, side) and is_transpose_complementary(pi, side))
    if tag is CountTag.ASM:
        (m,) = p
        if m > BRUTE_ASM_ORDER:
            raise UnsupportedError(f"{family}: ASM enumeration is limited to order {BRUTE_ASM_ORDER}")
        return sum(1 for _ in alternating_sign_matrices(m))
    if tag in (CountTag.VSASM, CountTag.DASASM):
        (m,) = p
        if m > BRUTE_SYMMETRIC_ASM_ORDER:
            raise UnsupportedError(f"{family}: limited to order {BRUTE_SYMMETRIC_ASM_ORDER}")
        if tag is CountTag.VSASM:
            return sum(1 for A in alternating_sign_matrices(m) if all(r == r[::-1] for r in A))
        return sum(1 for A in alternating_sign_matrices(m)
                   if all(A[i][j] == A[j][i] == A[m - 1 - j][m - 1 - i]
                          for i in range(m) for j in range(m)))
    raise UnsupportedError(f"{family}: no brute-force oracle")


# -- count factorization identities ------------------------------------------

class CountIdentity(enum.Enum):
    PP1 = "pp1"
    PP2 = "pp2"
    PP3 = "pp3"
    PP4 = "pp4"
    PP5 = "pp5"
    PP6 = "pp6"
    DS1 = "ds1"
    DS2 = "ds2"
    DS3 = "ds3"
    DS4 = "ds4"
    DS5 = "ds5"
    DS6 = "ds6"


def _c(name, *args) -> int:
    return count(CountFamily.of(name, *args))


def count_identity_sides(which: CountIdentity | str, size) -> tuple[int, int]:
    """Both sides of a count identity.

    PP1..PP6 take ``size = (m, n)``; PP2..PP4 need n >= 1. DS1..DS6 take
    ``size = n``; DS4 needs n >= 1 (at n = 0 its left side is ASM(0) = 1).
    """
    which = CountIdentity(which.lower() if isinstance(which, str) else which)
    if which.value.startswith("pp"):
        m, n = size
        if m < 0 or n < 0:
            raise DomainError("m, n must be nonnegative")
        if which in (CountIdentity.PP2, CountIdentity.PP3, CountIdentity.PP4) and n < 1:
            raise DomainError(f"{which.value} needs n >= 1")
        if which is CountIdentity.PP1:
            return _c("pp", 2 * m, n, n), _c("spp", m, n) * _c("tcpp", m, n)
        if which is CountIdentity.PP2:
            return _c("pp", 2 * m + 1, n, n), _c("spp_star", m + 1, n) * _c("tcpp", m, n + 1)
        if which is CountIdentity.PP3:
            return (_c("pp", 2 * m + 1, n, n) + _c("pp", 2 * m + 1, n - 1, n + 1),
                    _c("spp", m + 1, n) * _c("tcpp", m, n))
        if which is CountIdentity.PP4:
            return (_c("pp", 2 * m, n, n) + _c("pp", 2 * m, n - 1, n + 1),
                    _c("spp_star", m, n) * _c("tcpp", m, n + 1))
        if which is CountIdentity.PP5:
            return _c("pp", 2 * m, n, n + 1), _c("spp", m, n) * _c("tcpp", m, n + 1)
        return _c("pp", 2 * m + 1, n, n + 1), _c("spp", m + 1, n) * _c("tcpp", m, n + 1)
    n = size if isinstance(size, int) else size[0]
    if n < 0 or (which is CountIdentity.DS4 and n < 1):
        raise DomainError(f"{which.value} is not defined at n={n}")
    if which is CountIdentity.DS1:
        return _c("cspp", 2 * n), _c("tspp", 2 * n) * _c("cstcpp", 2 * n)
    if which is CountIdentity.DS2:
        return _c("cspp", 2 * n + 1), 2 * _c("tspp", 2 * n) * _c("cstcpp", 2 * n + 2)
    if which is CountIdentity.DS3:
        return _c("asm", 2 * n + 1), _c("r", 2 * n + 2) * _c("vsasm", 2 * n + 1)
    if which is CountIdentity.DS4:
        return _c("asm", 2 * n), 2 * _c("r", 2 * n) * _c("vsasm", 2 * n + 1)
    if which is CountIdentity.DS5:
        return _c("dasasm", 4 * n + 1), 3 ** n * _c("tspp", 2 * n) * _c("vsasm", 2 * n + 1)
    return _c("dasasm", 4 * n + 3), 3 ** (n + 1) * _c("r", 2 * n + 2) * _c("cstcpp", 2 * n + 2)


def check_count_identity(which: CountIdentity | str, size) -> bool:
    lhs, rhs = count_identity_sides(which, size)
    return lhs == rhs


# -- characters at all-ones versus counts ------------------------------------

SCHUR = CharacterFamily(Family.SCHUR)
SP = CharacterFamily(Family.SYMPLECTIC)
SO = CharacterFamily(Family.SO_ODD)
SO_NEG = CharacterFamily(Family.SO_ODD, negate=True)
OE = CharacterFamily(Family.O_EVEN)


def _dim(family, values) -> Fraction:
    return dim_character(family, make([2 * v for v in values]))


def _staircase(top: int, bottom: int, extra=()) -> list[int]:
    """``top, top-1, top-1, ..., bottom, bottom`` plus ``extra``; empty when top < 0."""
    if top < 0:
        return list(extra)
    return [top] + pairs_down(top - 1, bottom) + list(extra)


def dim_bridge_values(which: CountTag | str, size) -> list[Fraction]:
    """Every expression equated to one count at all-ones (or -1), ending with the count.

    ``size`` is ``(a, b, c)`` for PP, ``(a, b)`` for TCPP / SPP / SPP*, and m
    otherwise (the double-staircase parameter).
    """
    tag = CountTag(which.lower() if isinstance(which, str) else which)
    three = Fraction(3)
    if tag is CountTag.PP:
        a, b, c = size
        return [_dim(SCHUR, [a] * b + [0] * c), count(CountFamily(tag, (a, b, c)))]
    if tag in (CountTag.TCPP, CountTag.SPP, CountTag.SPP_STAR):
        a, b = size
        if tag is CountTag.TCPP:
            if b < 1:
                raise DomainError("TCPP bridge needs b >= 1")
            return [(-1) ** (a * b) * _dim(SO_NEG, [a] * b), _dim(SP, [a] * (b - 1)),
                    count(CountFamily(tag, (a, b)))]
        if tag is CountTag.SPP:
            return [_dim(SO, [a] * b), count(CountFamily(tag, (a, b)))]
        if a < 1 or b < 1:
            # at a = 0 the character is the trivial one (value 1) while the
            # product gives 2, so the equality only holds for a >= 1
            raise DomainError("SPP* bridge needs a >= 1 and b >= 1")
        return [_dim(OE, [a] * b), count(CountFamily(tag, (a, b))), 2 * count(CountFamily(CountTag.SPP, (a, b - 1)))]
    m = size if isinstance(size, int) else size[0]
    if m < 1:
        raise DomainError("double-staircase bridges need m >= 1")
    if tag is CountTag.CSPP:
        return [three ** (-(m * (m - 1) // 2)) * _dim(SCHUR, _staircase(m, 1, [0])), _c("cspp", m)]
    if tag is CountTag.ASM:
        return [three ** (-(m * (m - 1) // 2)) * _dim(SCHUR, pairs_down(m - 1, 0)), _c("asm", m)]
    if tag is CountTag.DASASM:
        return [three ** (-(m * (m - 1) // 2)) * _dim(SCHUR, _staircase(m, 0)), _c("dasasm", 2 * m + 1)]
    if tag is CountTag.TSPP:
        return [three ** (-m * (m - 1)) * _dim(SO, _staircase(m, 1, [0])),
                Fraction(1, 2) * three ** (-m * (m + 1)) * _dim(OE, _staircase(m + 1, 1)),
                _c("tspp", 2 * m)]
    if tag is CountTag.R:
        return [three ** (-(m - 1) ** 2) * _dim(SO, pairs_down(m - 1, 1) + [0]),
                Fraction(1, 2) * three ** (-m * m) * _dim(OE, pairs_down(m, 1)),
                _c("r", 2 * m)]
    if tag is CountTag.CSTCPP:
        return [(-1) ** m * three ** (-m * m) * _dim(SO_NEG, _staircase(m, 1, [0])),
                three ** (-(m - 1) ** 2) * _dim(SP, _staircase(m - 1, 0)),
                _c("cstcpp", 2 * m)]
    return [three ** (-m * (m + 1)) * _dim(SO_NEG, pairs_down(m, 1) + [0]),
            three ** (-m * (m - 1)) * _dim(SP, pairs_down(m - 1, 0)),
            _c("vsasm", 2 * m + 1)]


def dim_bridge(which: CountTag | str, size) -> bool:
    values = dim_bridge_values(which, size)
    return all(v == values[-1] for v in values)
