"""Exact evaluation of the four classical-group characters.

Points are given by positive rational roots ``t_i`` with ``x_i = t_i**2``, so a
half-integer power ``x**(e/2)`` is just ``t**e``. Exponents below are therefore
the doubled ones used by :class:`~charfact.partitions.ShiftedPartition`.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial, prod
from typing import Sequence

from .errors import DomainError, PartitionError
from .numeric import Number, det, rat
from .partitions import ShiftedPartition, from_values


class Family(enum.Enum):
    SCHUR = "schur"
    SYMPLECTIC = "symplectic"
    SO_ODD = "so_odd"
    O_EVEN = "o_even"


_ALIASES = {"s": "schur", "gl": "schur", "sp": "symplectic", "so": "so_odd",
            "oo": "so_odd", "oe": "o_even", "o": "o_even"}


@dataclass(frozen=True)
class CharacterFamily:
    tag: Family
    negate: bool = False

    def __post_init__(self):
        if self.negate and self.tag is not Family.SO_ODD:
            raise DomainError("only the odd orthogonal character can be evaluated at -x")

    @classmethod
    def parse(cls, name: str, negate: bool = False) -> "CharacterFamily":
        name = name.strip().lower()
        return cls(Family(_ALIASES.get(name, name)), negate)


def _as_partition(lam) -> ShiftedPartition:
    return lam if isinstance(lam, ShiftedPartition) else from_values(lam)


@dataclass(frozen=True)
class EvalPoint:
    """Positive rational roots t_i; the character variables are x_i = t_i**2."""

    roots: tuple[Fraction, ...]

    def __post_init__(self):
        ts = tuple(rat(t) for t in self.roots)
        object.__setattr__(self, "roots", ts)
        for t in ts:
            if t <= 0:
                raise DomainError(f"root {t} is not positive")
            if t == 1:
                raise DomainError("root 1 would make x_i = 1")
        for s, t in combinations(ts, 2):
            if s == t or s * t == 1:
                raise DomainError(f"roots {s} and {t} give x_i = x_j or x_i = 1/x_j")

    def __len__(self):
        return len(self.roots)

    @property
    def xs(self) -> tuple[Fraction, ...]:
        return tuple(t * t for t in self.roots)

    def with_inverses(self, extra_one: bool = False) -> tuple[Fraction, ...]:
        """``(x_1..x_n, 1/x_1..1/x_n)`` optionally followed by 1."""
        xs = self.xs
        out = xs + tuple(1 / x for x in xs)
        return out + (Fraction(1),) if extra_one else out


def _pairwise(values: Sequence[Fraction]) -> Fraction:
    """prod_{i<j} (v_i - v_j)."""
    out = Fraction(1)
    for i, j in combinations(range(len(values)), 2):
        out *= values[i] - values[j]
    if out == 0:
        raise DomainError("evaluation point makes the Weyl denominator vanish")
    return out


def _staircase_exponents(lam: ShiftedPartition) -> list[int]:
    """Doubled ``lambda_j + n - j`` for j = 1..n."""
    n = len(lam)
    return [d + 2 * (n - 1 - j) for j, d in enumerate(lam.doubled)]


def schur(lam, xs: Sequence[Number]) -> Fraction:
    """Bialternant ``det(x_i^(lambda_j+n-j)) / prod_{i<j}(x_i - x_j)`` over an explicit argument list."""
    lam = _as_partition(lam)
    parts = lam.as_ints()
    xs = [rat(x) for x in xs]
    n = len(xs)
    if len(parts) != n:
        raise DomainError(f"partition of length {len(parts)} with {n} variables")
    if n == 0:
        return Fraction(1)
    if any(x == 0 for x in xs):
        raise DomainError("zero variable")
    exps = [p + n - 1 - j for j, p in enumerate(parts)]
    num = det([[x ** e for e in exps] for x in xs])
    return num / _pairwise(xs)


def _laurent_x(ts):
    return [t * t + 1 / (t * t) for t in ts]


def symplectic(lam, roots: Sequence[Number]) -> Fraction:
    lam = _as_partition(lam)
    if not lam.is_integer:
        raise PartitionError("symplectic characters take integer partitions")
    ts = [rat(t) for t in roots]
    n = len(ts)
    if len(lam) != n:
        raise DomainError(f"partition of length {len(lam)} with {n} variables")
    if n == 0:
        return Fraction(1)
    exps = [e + 2 for e in _staircase_exponents(lam)]
    num = det([[t ** e - t ** -e for e in exps] for t in ts])
    first = prod((t * t - 1 / (t * t) for t in ts), start=Fraction(1))
    if first == 0:
        raise DomainError("x_i = 1/x_i makes the symplectic denominator vanish")
    return num / (first * _pairwise(_laurent_x(ts)))


def _half_step_sum(t: Fraction, top: int) -> Fraction:
    """sum of t**k for k = -top, -top+2, ..., top."""
    return sum((t ** k for k in range(-top, top + 1, 2)), start=Fraction(0))


def so_odd(lam, roots: Sequence[Number], negate: bool = False) -> Fraction:
    """Odd orthogonal character in row-factored form.

    Row i of the numerator divided by ``x_i^(1/2) - x_i^(-1/2)`` is the sum
    ``x^j`` over ``j = -a..a`` in unit steps (a = lambda_j + n - j), so the
    character is ``det(g_a(x_i)) / prod_{i<j}(x_i + 1/x_i - x_j - 1/x_j)``.
    For integer partitions this is a Laurent polynomial in the x_i and can be
    evaluated at ``-x_i`` (``negate=True``).
    """
    lam = _as_partition(lam)
    ts = [rat(t) for t in roots]
    n = len(ts)
    if len(lam) != n:
        raise DomainError(f"partition of length {len(lam)} with {n} variables")
    if n == 0:
        return Fraction(1)
    tops = _staircase_exponents(lam)
    if negate:
        if not lam.is_integer:
            raise PartitionError("so_odd at -x is only defined for integer partitions")
        xs = [-(t * t) for t in ts]
        rows = [[sum((x ** j for j in range(-a // 2, a // 2 + 1)), start=Fraction(0))
                 for a in tops] for x in xs]
        return det(rows) / _pairwise([x + 1 / x for x in xs])
    rows = [[_half_step_sum(t, a) for a in tops] for t in ts]
    return det(rows) / _pairwise(_laurent_x(ts))


def o_even(lam, roots: Sequence[Number]) -> Fraction:
    """``det(x^e + x^-e) / ((1 + delta_{lambda_n,0}) prod_{i<j}(...))``.

    A root equal to 1 is allowed (the ``(x_1..x_n, 1)`` argument lists).
    """
    lam = _as_partition(lam)
    ts = [rat(t) for t in roots]
    n = len(ts)
    if len(lam) != n:
        raise DomainError(f"partition of length {len(lam)} with {n} variables")
    if n == 0:
        return Fraction(1)
    exps = _staircase_exponents(lam)
    num = det([[t ** e + t ** -e for e in exps] for t in ts])
    delta = 2 if lam.doubled[-1] == 0 else 1
    return num / (delta * _pairwise(_laurent_x(ts)))


def eval_character(family: CharacterFamily | str, lam, point: EvalPoint,
                   extra_one: bool = False) -> Fraction:
    """Evaluate a character at ``point``.

    ``extra_one`` appends the variable 1 to the argument list; it is accepted
    for Schur polynomials and even orthogonal characters only.
    """
    if isinstance(family, str):
        family = CharacterFamily.parse(family)
    if not isinstance(point, EvalPoint):
        point = EvalPoint(tuple(point))
    lam = _as_partition(lam)
    if extra_one and family.tag not in (Family.SCHUR, Family.O_EVEN):
        raise DomainError("the extra argument 1 is only supported for schur and o_even")
    roots = point.roots + ((Fraction(1),) if extra_one else ())
    if family.tag is Family.SCHUR:
        return schur(lam, [t * t for t in roots])
    if family.tag is Family.SYMPLECTIC:
        return symplectic(lam, roots)
    if family.tag is Family.SO_ODD:
        return so_odd(lam, roots, negate=family.negate)
    return o_even(lam, roots)


def iter_ssyt(shape: Sequence[int], n: int):
    """Yield semistandard tableaux (tuple of rows) of ``shape`` with entries 1..n."""
    shape = [p for p in shape if p > 0]

    def rows_under(length, above, lo_prev=1):
        # weakly increasing row, each entry strictly larger than the one above it
        def rec(prefix):
            j = len(prefix)
            if j == length:
                yield tuple(prefix)
                return
            lo = max(prefix[-1] if prefix else 1, (above[j] + 1) if above else 1)
            for v in range(lo, n + 1):
                prefix.append(v)
                yield from rec(prefix)
                prefix.pop()
        yield from rec([])

    def build(r, above, acc):
        if r == len(shape):
            yield tuple(acc)
            return
        for row in rows_under(shape[r], above):
            acc.append(row)
            yield from build(r + 1, row, acc)
            acc.pop()

    yield from build(0, None, [])


SSYT_LIMIT = 10 ** 7


def schur_via_ssyt(lam, xs: Sequence[Number], limit: int = SSYT_LIMIT) -> Fraction:
    """Schur polynomial as the weighted sum over semistandard tableaux."""
    parts = _as_partition(lam).as_ints()
    xs = [rat(x) for x in xs]
    n = len(xs)
    if len(parts) != n:
        raise DomainError(f"partition of length {len(parts)} with {n} variables")
    total = Fraction(0)
    for count, tableau in enumerate(iter_ssyt(parts, n), start=1):
        if count > limit:
            raise DomainError(f"more than {limit} tableaux; enumeration guard exceeded")
        weight = Fraction(1)
        for row in tableau:
            for v in row:
                weight *= xs[v - 1]
        total += weight
    return total


def _hook_pairs(vals, shift):
    """prod_{i<j} (l_i - l_j - i + j)(l_i + l_j - i - j + shift), 1-indexed."""
    out = Fraction(1)
    n = len(vals)
    for i in range(n):
        for j in range(i + 1, n):
            out *= (vals[i] - vals[j] + j - i) * (vals[i] + vals[j] - i - j - 2 + shift)
    return out


def dim_character(family: CharacterFamily | str, lam) -> Fraction:
    """Character at all variables 1 (or -1 for negated so_odd) via product formulas."""
    if isinstance(family, str):
        family = CharacterFamily.parse(family)
    lam = _as_partition(lam)
    vals = list(lam.entries)
    n = len(vals)
    if family.tag is Family.SCHUR:
        lam.as_ints()
        num = prod((vals[i] - vals[j] + j - i for i, j in combinations(range(n), 2)),
                   start=Fraction(1))
        return num / prod((factorial(i) for i in range(1, n)), start=1)
    if family.tag is Family.SYMPLECTIC:
        lam.as_ints()
        num = prod((vals[i] - (i + 1) + n + 1 for i in range(n)), start=Fraction(1))
        num *= _hook_pairs(vals, 2 * n + 2)
        return num / prod((factorial(2 * i - 1) for i in range(1, n + 1)), start=1)
    if family.tag is Family.SO_ODD and not family.negate:
        num = prod((2 * vals[i] - 2 * (i + 1) + 2 * n + 1 for i in range(n)), start=Fraction(1))
        num *= _hook_pairs(vals, 2 * n + 1)
        return num / prod((factorial(2 * i - 1) for i in range(1, n + 1)), start=1)
    if family.tag is Family.SO_ODD:
        # (-1)^|lambda| needs an integer |lambda|; see the negate restriction
        parts = lam.as_ints()
        sign = -1 if sum(parts) % 2 else 1
        num = sign * _hook_pairs(vals, 2 * n + 1)
        return num / prod((factorial(2 * i) for i in range(1, n)), start=1)
    if n == 0:
        return Fraction(1)
    delta = 2 if vals[-1] == 0 else 1
    num = 2 ** n * _hook_pairs(vals, 2 * n)
    return num / (delta * prod((factorial(2 * i) for i in range(1, n)), start=1))


def random_root(rng: random.Random, bound: int) -> Fraction:
    return Fraction(rng.randint(1, bound), rng.randint(1, bound))


def point_from_rng(rng: random.Random, n: int, bound: int, retries: int = 10_000) -> EvalPoint:
    roots: list[Fraction] = []
    for _ in range(retries):
        if len(roots) == n:
            break
        t = random_root(rng, bound)
        if t == 1 or any(t == s or t * s == 1 for s in roots):
            continue
        roots.append(t)
    if len(roots) != n:
        raise DomainError(f"could not sample {n} admissible roots with bound {bound}")
    return EvalPoint(tuple(roots))


def sample_point(n: int, seed: int, bound: int = 17) -> EvalPoint:
    """Deterministic pseudo-random admissible point with roots p/q, 1 <= p, q <= bound."""
    if bound < 2 * n + 2:
        raise DomainError(f"bound {bound} is below 2n+2 = {2 * n + 2}")
    return point_from_rng(random.Random(seed), n, bound)
