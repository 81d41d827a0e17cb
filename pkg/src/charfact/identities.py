"""Registry of the factorization identities and a randomized exact verifier.

Every identity is a pair of Laurent polynomials in the roots t_i. Both sides
are evaluated exactly at seeded random rational points; a single mismatch is a
certified counterexample, while agreement at many points is overwhelming
evidence of a polynomial identity.
"""
from __future__ import annotations

import enum
import itertools
import logging
import random
import warnings
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import prod
from typing import Callable, Iterator, Optional, Sequence

from .characters import EvalPoint, o_even, point_from_rng, schur, so_odd, symplectic
from .errors import DomainError, PartitionError
from .numeric import det, rat, rat_str
from .partitions import (
    EmbedShape,
    Parity,
    ShiftedPartition,
    arithmetic_staircase,
    from_values,
    make,
    pairs_down,
    scalar,
    self_complementary_embed,
    zigzag_staircase,
)

log = logging.getLogger(__name__)

DEFAULT_TRIALS = 10
MIN_TRIALS = 3


class IdentityId(enum.Enum):
    FACT1 = "fact1"
    FACT2 = "fact2"
    FACT3 = "fact3"
    FACT3P_PLUS = "fact3p_plus"
    FACT3P_MINUS = "fact3p_minus"
    FACT4 = "fact4"
    PROP1 = "prop1"
    PROP2 = "prop2"
    FACT11 = "fact11"
    FACT12 = "fact12"
    FACT21 = "fact21"
    FACT22 = "fact22"
    RECT1 = "rect1"
    RECT2 = "rect2"
    ADDRECT1 = "addrect1"
    ADDRECT2 = "addrect2"
    RECT3 = "rect3"
    RECT4 = "rect4"
    QAST1 = "qast1"
    QAST2 = "qast2"
    AST1 = "ast1"
    AST2 = "ast2"
    DASASM1 = "dasasm1"
    DASASM2 = "dasasm2"

    @classmethod
    def parse(cls, name: str) -> "IdentityId":
        key = name.strip().lower().replace("'", "p").replace("-", "_")
        try:
            return cls(key)
        except ValueError:
            raise DomainError(f"unknown identity {name!r}") from None


@dataclass(frozen=True)
class IdentityParams:
    """Free parameters of an identity; only the ones it uses are set."""

    lam: Optional[ShiftedPartition] = None
    k: Optional[Fraction] = None
    k1: Optional[Fraction] = None
    k2: Optional[Fraction] = None
    a: Optional[Fraction] = None
    b: Optional[int] = None
    m: Optional[int] = None
    n: Optional[int] = None

    def to_dict(self) -> dict:
        out = {}
        if self.lam is not None:
            out["lambda"] = [rat_str(v) for v in self.lam.entries]
        for name in ("k", "k1", "k2", "a"):
            value = getattr(self, name)
            if value is not None:
                out[name] = rat_str(value)
        for name in ("b", "m", "n"):
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        return out

    def describe(self) -> str:
        return " ".join(f"{k}={','.join(v) if isinstance(v, list) else v}"
                        for k, v in self.to_dict().items())


@dataclass(frozen=True)
class Witness:
    point: EvalPoint
    lhs: Fraction
    rhs: Fraction

    def to_dict(self) -> dict:
        return {"point": [rat_str(t) for t in self.point.roots],
                "lhs": rat_str(self.lhs), "rhs": rat_str(self.rhs)}


@dataclass(frozen=True)
class VerificationReport:
    identity: IdentityId
    params: IdentityParams
    trials: int
    failures: int
    witness: Optional[Witness]
    seed: int

    def __post_init__(self):
        if (self.failures == 0) != (self.witness is None):
            raise ValueError("a witness is present exactly when some trial failed")

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        return {
            "identity": self.identity.value,
            "params": self.params.to_dict(),
            "trials": self.trials,
            "failures": self.failures,
            "witness": self.witness.to_dict() if self.witness else None,
            "seed": self.seed,
        }

    def to_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = (f"{self.identity.value} {self.params.describe()} trials={self.trials} "
                f"failures={self.failures} seed={self.seed} {status}")
        if self.witness:
            w = self.witness.to_dict()
            line += f" point={','.join(w['point'])} lhs={w['lhs']} rhs={w['rhs']}"
        return line


Sides = Callable[[EvalPoint], tuple[Fraction, Fraction]]


@dataclass
class Prepared:
    """An identity with validated parameters, ready to evaluate at points."""

    nvars: int
    sides: Sides
    degree: int = 0


# -- small helpers -----------------------------------------------------------

def _half_sum_prefactor(ts) -> Fraction:
    """prod (x_i^(1/2) + x_i^(-1/2)) = prod (t_i + 1/t_i)."""
    return prod((t + 1 / t for t in ts), start=Fraction(1))


def _step_sum(t: Fraction, top_doubled: int) -> Fraction:
    """sum of x^j for j = -top/2 .. top/2 in unit steps, at x = t**2."""
    return sum((t ** k for k in range(-top_doubled, top_doubled + 1, 2)), start=Fraction(0))


def _delta(lam: ShiftedPartition) -> int:
    return 2 if lam.doubled[-1] == 0 else 1


def _sign(total) -> int:
    total = Fraction(total)
    if total.denominator != 1:
        raise PartitionError("sign (-1)^|lambda| needs an integer total")
    return -1 if total.numerator % 2 else 1


def _args(point: EvalPoint, extra_one: bool = False) -> tuple[Fraction, ...]:
    return point.with_inverses(extra_one)


def _ints(values) -> ShiftedPartition:
    return make([2 * v for v in values])


def _require(cond: bool, message: str):
    if not cond:
        raise DomainError(message)


def _k(params: IdentityParams, name: str) -> ShiftedPartition:
    value = getattr(params, name)
    if value is None:
        raise DomainError(f"parameter {name} is required")
    return scalar(value)


def _lam(params: IdentityParams, min_len: int = 1) -> ShiftedPartition:
    if params.lam is None:
        raise DomainError("parameter lambda is required")
    _require(len(params.lam) >= min_len, f"lambda needs at least {min_len} entries")
    return params.lam


def _n(params: IdentityParams, least: int = 1) -> int:
    _require(params.n is not None and params.n >= least, f"n >= {least} is required")
    return params.n


def _m(params: IdentityParams) -> int:
    _require(params.m is not None and params.m >= 0, "m >= 0 is required")
    return params.m


def _degree(*indices) -> int:
    return max((2 * (max(ix, default=0) + len(ix)) for ix in indices), default=0)


# -- main factorizations ---------------------------------------------------

def _fact1(params: IdentityParams) -> Prepared:
    lam = _lam(params)
    mu = self_complementary_embed(lam, _k(params, "k"), EmbedShape.SYMMETRIC)
    shifted = lam.shift(1)

    def sides(pt):
        ts = pt.roots
        lhs = _half_sum_prefactor(ts) * schur(_ints(mu), _args(pt))
        rhs = so_odd(lam, ts) * o_even(shifted, ts)
        return lhs, rhs
    return Prepared(len(lam), sides, _degree(mu))


def fact2_sides(params: IdentityParams, with_delta: bool = True) -> Prepared:
    """Both sides of FACT2; ``with_delta=False`` drops the ``(1 + delta)`` factor."""
    lam = _lam(params, 2)
    mu1 = self_complementary_embed(lam, _k(params, "k1"), EmbedShape.TAIL_HEAD)
    mu2 = self_complementary_embed(lam, _k(params, "k2"), EmbedShape.INNER_FULL)
    head, tail = lam[:-1].shift(1), lam[1:]
    factor = _delta(lam) if with_delta else 1

    def sides(pt):
        ts = pt.roots
        args = _args(pt)
        lhs = _half_sum_prefactor(ts) * (schur(_ints(mu1), args) + schur(_ints(mu2), args))
        rhs = factor * so_odd(head, ts) * o_even(tail, ts)
        return lhs, rhs
    return Prepared(len(lam) - 1, sides, _degree(mu1, mu2))


def _fact2(params):
    return fact2_sides(params)


def _fact3(params: IdentityParams) -> Prepared:
    lam = _lam(params, 2)
    mu = self_complementary_embed(lam, _k(params, "k"), EmbedShape.TAIL_FULL)
    tail, shifted = lam[1:], lam.shift(1)

    def sides(pt):
        ts = pt.roots
        lhs = 2 * _half_sum_prefactor(ts) * schur(_ints(mu), _args(pt, True))
        rhs = so_odd(tail, ts) * o_even(shifted, ts + (Fraction(1),))
        return lhs, rhs
    return Prepared(len(lam) - 1, sides, _degree(mu))


def _fact3p(shape: EmbedShape):
    def build(params: IdentityParams) -> Prepared:
        lam = _lam(params, 2)
        mu = self_complementary_embed(lam, _k(params, "k"), shape)
        head = lam[:-1].shift(1)

        def sides(pt):
            ts = pt.roots
            lhs = 2 * _half_sum_prefactor(ts) * schur(_ints(mu), _args(pt, True))
            rhs = _delta(lam) * so_odd(head, ts) * o_even(lam, ts + (Fraction(1),))
            return lhs, rhs
        return Prepared(len(lam) - 1, sides, _degree(mu))
    return build


def _fact4(params: IdentityParams) -> Prepared:
    lam = _lam(params)
    k = _k(params, "k")
    mu = self_complementary_embed(lam, k, EmbedShape.SYMMETRIC)
    shifted = lam.shift(1)

    def sides(pt):
        ts = pt.roots
        xs = pt.xs
        args = xs + tuple(1 / x for x in xs[:-1]) + (Fraction(1),)
        lhs = 2 * _half_sum_prefactor(ts[:-1]) * schur(_ints(mu), args)
        rhs = ts[-1] ** k.doubled[0] * so_odd(lam, ts) * o_even(shifted, ts[:-1] + (Fraction(1),))
        return lhs, rhs
    return Prepared(len(lam), sides, _degree(mu))


def _a_doubled(params: IdentityParams) -> int:
    _require(params.a is not None, "parameter a is required")
    two_a = 2 * Fraction(params.a)
    if two_a.denominator != 1 or two_a < 0:
        raise DomainError(f"a={params.a} must be a nonnegative integer or positive half-integer")
    return two_a.numerator


def _prop1(params: IdentityParams) -> Prepared:
    n = _n(params)
    _require(params.b is not None and params.b >= 0, "integer b >= 0 is required")
    b = params.b
    lam = arithmetic_staircase(_a_doubled(params), b, n)
    odd_index = lam[:-1].shift(-b)

    def sides(pt):
        ts = pt.roots
        lhs = _delta(lam) * o_even(lam, ts + (Fraction(1),))
        rhs = 2 * prod((_step_sum(t, b) for t in ts), start=Fraction(1)) * so_odd(odd_index, ts)
        return lhs, rhs
    return Prepared(n, sides, lam.doubled[0] + 2 * n)


def _prop2(params: IdentityParams) -> Prepared:
    n = _n(params)
    _require(params.b is not None, "integer b is required")
    b = params.b
    lam = zigzag_staircase(_a_doubled(params), b, n)
    odd_index = lam[:-1].shift(-b)
    shifted = lam.shift(1)

    def sides(pt):
        ts = pt.roots
        lhs = o_even(shifted, ts + (Fraction(1),))
        rhs = 2 * prod((_step_sum(t, b + 1) for t in ts), start=Fraction(1)) * so_odd(odd_index, ts)
        return lhs, rhs
    return Prepared(n, sides, lam.doubled[0] + 2 * n)


# -- restatements with all characters indexed by partitions -------------------

def _integer_lam(params: IdentityParams, min_len: int = 1) -> tuple[int, ...]:
    lam = _lam(params, min_len)
    if not lam.is_integer:
        raise PartitionError("this restatement takes an integer partition")
    return lam.as_ints()


def _fact11(params: IdentityParams) -> Prepared:
    lam = _integer_lam(params)
    top = lam[0]
    mu = [top + v for v in lam] + [top - v for v in reversed(lam)]
    sign = _sign(sum(lam))
    part = _ints(lam)

    def sides(pt):
        ts = pt.roots
        lhs = schur(_ints(mu), _args(pt))
        rhs = sign * so_odd(part, ts) * so_odd(part, ts, negate=True)
        return lhs, rhs
    return Prepared(len(lam), sides, _degree(mu))


def _fact12(params: IdentityParams) -> Prepared:
    lam = _integer_lam(params)
    top = lam[0]
    mu = [top + v + 1 for v in lam] + [top - v for v in reversed(lam)]
    part, plus_one = _ints(lam), _ints(v + 1 for v in lam)

    def sides(pt):
        ts = pt.roots
        lhs = schur(_ints(mu), _args(pt))
        rhs = symplectic(part, ts) * o_even(plus_one, ts)
        return lhs, rhs
    return Prepared(len(lam), sides, _degree(mu))


def _fact21(params: IdentityParams) -> Prepared:
    lam = _integer_lam(params, 2)
    l0, rest = lam[0], lam[1:]
    mu1 = [l0 + v for v in rest] + [l0 - v for v in reversed(lam[:-1])]
    mu2 = [l0 + v for v in rest[:-1]] + [l0 - v for v in reversed(lam)]
    head, tail = _ints(lam[:-1]), _ints(rest)
    delta = 2 if lam[-1] == 0 else 1

    def sides(pt):
        ts = pt.roots
        args = _args(pt)
        lhs = schur(_ints(mu1), args) + schur(_ints(mu2), args)
        rhs = delta * symplectic(head, ts) * o_even(tail, ts)
        return lhs, rhs
    return Prepared(len(lam) - 1, sides, _degree(mu1, mu2))


def _fact22(params: IdentityParams) -> Prepared:
    lam = _integer_lam(params, 2)
    l0, rest = lam[0], lam[1:]
    mu1 = [l0 + v + 1 for v in rest] + [l0 - v for v in reversed(lam[:-1])]
    mu2 = [l0 + v + 1 for v in rest[:-1]] + [l0 - v for v in reversed(lam)]
    head, tail = _ints(v + 1 for v in lam[:-1]), _ints(rest)
    sign = _sign(sum(rest))

    def sides(pt):
        ts = pt.roots
        args = _args(pt)
        lhs = schur(_ints(mu1), args) + schur(_ints(mu2), args)
        rhs = sign * so_odd(head, ts) * so_odd(tail, ts, negate=True)
        return lhs, rhs
    return Prepared(len(lam) - 1, sides, _degree(mu1, mu2))


# -- rectangle identities --------------------------------------------------

def _rect(kind: IdentityId):
    def build(params: IdentityParams) -> Prepared:
        m, n = _m(params), _n(params)
        sq = _ints([m] * n)
        sq1 = _ints([m + 1] * n)
        sign = -1 if (m * n) % 2 else 1
        even = _ints([2 * m] * n + [0] * n)
        odd = _ints([2 * m + 1] * n + [0] * n)
        even_short = _ints([2 * m] * (n - 1) + [0] * (n + 1))
        odd_short = _ints([2 * m + 1] * (n - 1) + [0] * (n + 1))
        even_one = _ints([2 * m] * n + [0] * (n + 1))
        odd_one = _ints([2 * m + 1] * n + [0] * (n + 1))

        def sides(pt):
            ts = pt.roots
            args = _args(pt)
            if kind is IdentityId.RECT1:
                return (schur(even, args),
                        sign * so_odd(sq, ts) * so_odd(sq, ts, negate=True))
            if kind is IdentityId.RECT2:
                return schur(odd, args), symplectic(sq, ts) * o_even(sq1, ts)
            if kind is IdentityId.ADDRECT1:
                return (schur(even, args) + schur(even_short, args),
                        (2 if m == 0 else 1) * symplectic(sq, ts) * o_even(sq, ts))
            if kind is IdentityId.ADDRECT2:
                return (schur(odd, args) + schur(odd_short, args),
                        sign * so_odd(sq1, ts) * so_odd(sq, ts, negate=True))
            args1 = _args(pt, True)
            if kind is IdentityId.RECT3:
                return schur(even_one, args1), symplectic(sq, ts) * so_odd(sq, ts)
            return schur(odd_one, args1), symplectic(sq, ts) * so_odd(sq1, ts)
        return Prepared(n, sides, 2 * (2 * m + 1 + 2 * n + 1))
    return build


# -- double-staircase identities ------------------------------------------

def _staircase_with_top(top: int, tail_bottom: int, tail_extra: Sequence[int] = ()) -> list[int]:
    """``top, top-1, top-1, ..., tail_bottom, tail_bottom`` followed by ``tail_extra``."""
    return [top] + pairs_down(top - 1, tail_bottom) + list(tail_extra)


def _dbl(kind: IdentityId):
    def build(params: IdentityParams) -> Prepared:
        n = _n(params)
        if kind is IdentityId.QAST1:
            mu = _staircase_with_top(2 * n, 1, [0])
            odd = _ints(_staircase_with_top(n, 1, [0]))
            nvars, sign = 2 * n, (-1) ** n

            def sides(pt):
                ts = pt.roots
                return (schur(_ints(mu), _args(pt)),
                        sign * so_odd(odd, ts) * so_odd(odd, ts, negate=True))
        elif kind is IdentityId.QAST2:
            mu = _staircase_with_top(2 * n + 1, 1, [0])
            sp_ix = _ints(_staircase_with_top(n, 0))
            oe_ix = _ints(_staircase_with_top(n + 1, 1))
            nvars = 2 * n + 1

            def sides(pt):
                ts = pt.roots
                return schur(_ints(mu), _args(pt)), symplectic(sp_ix, ts) * o_even(oe_ix, ts)
        elif kind is IdentityId.AST1:
            mu = pairs_down(2 * n, 0)
            odd = _ints(pairs_down(n, 1) + [0])
            nvars = 2 * n + 1

            def sides(pt):
                ts = pt.roots
                return (schur(_ints(mu), _args(pt)),
                        so_odd(odd, ts) * so_odd(odd, ts, negate=True))
        elif kind is IdentityId.AST2:
            mu = pairs_down(2 * n - 1, 0)
            sp_ix = _ints(pairs_down(n - 1, 0))
            oe_ix = _ints(pairs_down(n, 1))
            nvars = 2 * n

            def sides(pt):
                ts = pt.roots
                return schur(_ints(mu), _args(pt)), symplectic(sp_ix, ts) * o_even(oe_ix, ts)
        else:
            if kind is IdentityId.DASASM1:
                mu = _staircase_with_top(2 * n, 0)
                odd = _ints(_staircase_with_top(n, 1, [0]))
                sp_ix = _ints(pairs_down(n - 1, 0))
                nvars = 2 * n
            else:
                mu = _staircase_with_top(2 * n + 1, 0)
                odd = _ints(pairs_down(n, 1) + [0])
                sp_ix = _ints(_staircase_with_top(n, 0))
                nvars = 2 * n + 1

            def sides(pt):
                ts = pt.roots
                pre = prod((1 / x + 1 + x for x in pt.xs), start=Fraction(1))
                return (schur(_ints(mu), _args(pt, True)),
                        pre * so_odd(odd, ts) * symplectic(sp_ix, ts))
        return Prepared(nvars, sides, _degree(mu))
    return build


REGISTRY: dict[IdentityId, Callable[[IdentityParams], Prepared]] = {
    IdentityId.FACT1: _fact1,
    IdentityId.FACT2: _fact2,
    IdentityId.FACT3: _fact3,
    IdentityId.FACT3P_PLUS: _fact3p(EmbedShape.MIDDLE_PLUS),
    IdentityId.FACT3P_MINUS: _fact3p(EmbedShape.MIDDLE_MINUS),
    IdentityId.FACT4: _fact4,
    IdentityId.PROP1: _prop1,
    IdentityId.PROP2: _prop2,
    IdentityId.FACT11: _fact11,
    IdentityId.FACT12: _fact12,
    IdentityId.FACT21: _fact21,
    IdentityId.FACT22: _fact22,
    **{i: _rect(i) for i in (IdentityId.RECT1, IdentityId.RECT2, IdentityId.ADDRECT1,
                             IdentityId.ADDRECT2, IdentityId.RECT3, IdentityId.RECT4)},
    **{i: _dbl(i) for i in (IdentityId.QAST1, IdentityId.QAST2, IdentityId.AST1,
                            IdentityId.AST2, IdentityId.DASASM1, IdentityId.DASASM2)},
}


def prepare(identity: IdentityId | str, params: IdentityParams) -> Prepared:
    """Validate ``params`` for ``identity`` and return its side evaluator."""
    if isinstance(identity, str):
        identity = IdentityId.parse(identity)
    return REGISTRY[identity](params)


def sides(identity: IdentityId | str, params: IdentityParams, point: EvalPoint) -> tuple[Fraction, Fraction]:
    return prepare(identity, params).sides(point)


def point_bound(nvars: int) -> int:
    return max(2 * nvars + 2, 17)


def verify(identity: IdentityId | str, params: IdentityParams, trials: int = DEFAULT_TRIALS,
           seed: int = 0, *, prepared: Prepared | None = None) -> VerificationReport:
    """Compare both sides at ``trials`` seeded random points.

    ``prepared`` overrides the registry entry; the test suite uses it to check
    that a corrupted identity is caught.
    """
    if isinstance(identity, str):
        identity = IdentityId.parse(identity)
    prep = prepared if prepared is not None else prepare(identity, params)
    if trials < MIN_TRIALS:
        warnings.warn(f"{trials} trials for a side of degree up to {prep.degree} "
                      f"gives weak evidence; use at least {MIN_TRIALS}", stacklevel=2)
    rng = random.Random(seed)
    bound = point_bound(prep.nvars)
    failures = 0
    witness = None
    for _ in range(trials):
        pt = point_from_rng(rng, prep.nvars, bound)
        lhs, rhs = prep.sides(pt)
        if lhs != rhs:
            failures += 1
            if witness is None:
                witness = Witness(pt, lhs, rhs)
    report = VerificationReport(identity, params, trials, failures, witness, seed)
    log.debug("%s", report.to_line())
    return report


# -- reversed-index variants -----------------------------------------------

def fact2_reversed_first(params: IdentityParams, point: EvalPoint) -> tuple[Fraction, Fraction]:
    """First Schur term of FACT2 with its asymmetry reversed, versus the original term.

    The reversed term takes ``(k1+l_0..k1+l_{n-1}, k1-l_n..k1-l_1)`` and only
    needs ``k1 >= l_1``; the original is evaluated at ``max(k1, l_0)``.
    """
    lam = _lam(params, 2)
    k1 = _k(params, "k1")
    kd = k1.doubled[0]
    _require(lam.parity is k1.parity, "k1 and lambda must share parity")
    _require(kd >= lam.doubled[1], "reversed form needs k1 >= lambda_1")
    d = lam.doubled
    rev = make([kd + v for v in d[:-1]] + [kd - v for v in d[:0:-1]]).as_ints()
    std = self_complementary_embed(lam, scalar(Fraction(max(kd, d[0]), 2)), EmbedShape.TAIL_HEAD)
    args = _args(point)
    return schur(_ints(rev), args), schur(_ints(std), args)


def fact2_reversed_second(params: IdentityParams, point: EvalPoint) -> tuple[Fraction, Fraction]:
    """Second Schur term of FACT2 reversed: ``(k2+l_0..k2+l_n, k2-l_{n-1}..k2-l_1)``."""
    lam = _lam(params, 2)
    k2 = _k(params, "k2")
    kd = k2.doubled[0]
    _require(lam.parity is k2.parity, "k2 and lambda must share parity")
    _require(kd >= lam.doubled[1], "reversed form needs k2 >= lambda_1")
    d = lam.doubled
    rev = make([kd + v for v in d] + [kd - v for v in d[-2:0:-1]]).as_ints()
    std = self_complementary_embed(lam, scalar(Fraction(max(kd, d[0]), 2)), EmbedShape.INNER_FULL)
    args = _args(point)
    return schur(_ints(rev), args), schur(_ints(std), args)


def fact3_reversed(params: IdentityParams, point: EvalPoint) -> tuple[Fraction, Fraction]:
    """FACT3 Schur factor in the form ``(k+l_0..k+l_n, k-l_n..k-l_1)`` (needs k >= l_1)."""
    lam = _lam(params, 2)
    k = _k(params, "k")
    kd = k.doubled[0]
    _require(lam.parity is k.parity, "k and lambda must share parity")
    _require(kd >= lam.doubled[1], "reversed form needs k >= lambda_1")
    d = lam.doubled
    rev = make([kd + v for v in d] + [kd - v for v in d[:0:-1]]).as_ints()
    std = self_complementary_embed(lam, scalar(Fraction(max(kd, d[0]), 2)), EmbedShape.TAIL_FULL)
    args = _args(point, True)
    return schur(_ints(rev), args), schur(_ints(std), args)


# -- sweeps ------------------------------------------------------------------

def bounded_partitions(length: int, top: Fraction, parity: Parity) -> Iterator[ShiftedPartition]:
    """All partitions (or half-partitions) of ``length`` entries with largest part <= top."""
    limit = int(2 * Fraction(top))
    values = range(0, limit + 1, 2) if parity is Parity.INTEGER else range(1, limit + 1, 2)
    for combo in itertools.combinations_with_replacement(reversed(values), length):
        yield make(combo, empty_parity=parity)


@dataclass(frozen=True)
class SweepRanges:
    """Finite parameter grid for :func:`sweep`.

    ``n`` is the character rank; for identities indexed by
    ``(lambda_0..lambda_n)`` the partition has n+1 entries. ``k_offsets`` are
    added to the largest part to get k (and, independently, k1 and k2).
    ``b_over_2a`` gives b - 2a for PROP2.
    """

    n: tuple[int, ...] = ()
    top: Fraction = Fraction(3)
    parities: tuple[Parity, ...] = (Parity.INTEGER, Parity.HALF)
    k_offsets: tuple[int, ...] = (0, 1, 2)
    a: tuple[Fraction, ...] = ()
    b: tuple[int, ...] = ()
    b_over_2a: tuple[int, ...] = ()
    m: tuple[int, ...] = ()


_K_INDEXED = {IdentityId.FACT1, IdentityId.FACT4}
_LAM0_LIKE = {IdentityId.FACT3, IdentityId.FACT3P_PLUS, IdentityId.FACT3P_MINUS}
_RECTS = {IdentityId.RECT1, IdentityId.RECT2, IdentityId.RECT3, IdentityId.RECT4,
          IdentityId.ADDRECT1, IdentityId.ADDRECT2}
_DOUBLE = {IdentityId.QAST1, IdentityId.QAST2, IdentityId.AST1, IdentityId.AST2,
           IdentityId.DASASM1, IdentityId.DASASM2}


def iter_params(identity: IdentityId, ranges: SweepRanges) -> Iterator[IdentityParams]:
    """Cartesian product of ``ranges`` restricted to valid parameters of ``identity``."""
    if identity in _K_INDEXED:
        for n, parity in itertools.product(ranges.n, ranges.parities):
            for lam in bounded_partitions(n, ranges.top, parity):
                for off in ranges.k_offsets:
                    yield IdentityParams(lam=lam, k=lam[0] + off)
    elif identity is IdentityId.FACT2:
        for n, parity in itertools.product(ranges.n, ranges.parities):
            for lam in bounded_partitions(n + 1, ranges.top, parity):
                for o1, o2 in itertools.product(ranges.k_offsets, repeat=2):
                    yield IdentityParams(lam=lam, k1=lam[0] + o1, k2=lam[0] + o2)
    elif identity in _LAM0_LIKE:
        for n, parity in itertools.product(ranges.n, ranges.parities):
            for lam in bounded_partitions(n + 1, ranges.top, parity):
                for off in ranges.k_offsets:
                    yield IdentityParams(lam=lam, k=lam[0] + off)
    elif identity in (IdentityId.FACT11, IdentityId.FACT12):
        for n in ranges.n:
            for lam in bounded_partitions(n, ranges.top, Parity.INTEGER):
                yield IdentityParams(lam=lam)
    elif identity in (IdentityId.FACT21, IdentityId.FACT22):
        for n in ranges.n:
            for lam in bounded_partitions(n + 1, ranges.top, Parity.INTEGER):
                yield IdentityParams(lam=lam)
    elif identity is IdentityId.PROP1:
        for a, b, n in itertools.product(ranges.a, ranges.b, ranges.n):
            yield IdentityParams(a=rat(a), b=b, n=n)
    elif identity is IdentityId.PROP2:
        for a, off, n in itertools.product(ranges.a, ranges.b_over_2a, ranges.n):
            b = 2 * rat(a) + off
            if b.denominator == 1:
                yield IdentityParams(a=rat(a), b=int(b), n=n)
    elif identity in _RECTS:
        for m, n in itertools.product(ranges.m, ranges.n):
            yield IdentityParams(m=m, n=n)
    else:
        for n in ranges.n:
            yield IdentityParams(n=n)


def sweep(identity: IdentityId | str, ranges: SweepRanges, trials_per: int = DEFAULT_TRIALS,
          seed: int = 0) -> list[VerificationReport]:
    if isinstance(identity, str):
        identity = IdentityId.parse(identity)
    return [verify(identity, p, trials_per, seed) for p in iter_params(identity, ranges)]


def acceptance_ranges(identity: IdentityId | str) -> SweepRanges:
    """The parameter grid each identity is swept over by default."""
    if isinstance(identity, str):
        identity = IdentityId.parse(identity)
    if identity in _K_INDEXED or identity in (IdentityId.FACT11, IdentityId.FACT12):
        return SweepRanges(n=(1, 2, 3), top=Fraction(3), k_offsets=(0, 1, 2))
    if identity in (IdentityId.FACT2, IdentityId.FACT21, IdentityId.FACT22) or identity in _LAM0_LIKE:
        return SweepRanges(n=(1, 2, 3), top=Fraction(3), k_offsets=(0, 1))
    if identity is IdentityId.PROP1:
        return SweepRanges(n=(1, 2, 3), a=(Fraction(0), Fraction(1), Fraction(2),
                                           Fraction(1, 2), Fraction(3, 2)), b=(0, 1, 2, 3))
    if identity is IdentityId.PROP2:
        return SweepRanges(n=(2, 3), a=(Fraction(0), Fraction(1, 2), Fraction(1)), b_over_2a=(0, 1, 2))
    if identity in _RECTS:
        return SweepRanges(n=(1, 2, 3), m=(0, 1, 2, 3))
    return SweepRanges(n=(1, 2))


# -- block determinant identities used in the proofs -------------------------

class BlockDet(enum.Enum):
    D1 = "d1"
    D2 = "d2"
    D3 = "d3"


def _rand_matrix(rng: random.Random, rows: int, cols: int) -> list[list[Fraction]]:
    return [[Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(cols)] for _ in range(rows)]


def _hcat(*blocks):
    return [sum((list(b[i]) for b in blocks), []) for i in range(len(blocks[0]))]


def _madd(a, b, s=1):
    return [[x + s * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def block_det_sides(which: BlockDet | str, blocks: dict) -> tuple[Fraction, Fraction]:
    """Both sides of a block determinant identity for explicit blocks.

    D1: ``det[[A, B], [B, A]] = det(A - B) det(A + B)`` for n x n A, B.
    D2: ``det[[A, c, d, B], [B, c, e, A]] = det[A + B | c] det[e - d | A - B]``
    for n x (n-1) A, B and columns c, d, e.
    D3: A, B are n x (n+1) with columns indexed 0..n; the left blocks use
    columns 1..n and a final row of ones is appended;
    the right side is ``1/2 det(A - B)[cols 1..n] det[[A + B], [2 ... 2]]``.
    """
    which = BlockDet(which)
    A, B = blocks["A"], blocks["B"]
    if which is BlockDet.D1:
        lhs = det(_hcat(A, B) + _hcat(B, A))
        return lhs, det(_madd(A, B, -1)) * det(_madd(A, B))
    if which is BlockDet.D2:
        c, d, e = blocks["c"], blocks["d"], blocks["e"]
        lhs = det(_hcat(A, c, d, B) + _hcat(B, c, e, A))
        rhs = det(_hcat(_madd(A, B), c)) * det(_hcat(_madd(e, d, -1), _madd(A, B, -1)))
        return lhs, rhs
    n = len(A)
    left = lambda M: [row[1:] for row in M]
    top = _hcat(left(A), B)
    mid = _hcat(left(B), A)
    ones = [[Fraction(1)] * (2 * n + 1)]
    lhs = det(top + mid + ones)
    rhs = Fraction(1, 2) * det(_madd(left(A), left(B), -1)) * det(_madd(A, B) + [[Fraction(2)] * (n + 1)])
    return lhs, rhs


def check_block_det(which: BlockDet | str, size: int, seed: int = 0) -> bool:
    """Random exact check of a block determinant identity at block size ``size``."""
    which = BlockDet(which.lower() if isinstance(which, str) else which)
    if size < 1 or (which is not BlockDet.D1 and size < 2):
        raise DomainError(f"{which.value} needs a larger block size than {size}")
    rng = random.Random(seed)
    n = size
    if which is BlockDet.D1:
        blocks = {"A": _rand_matrix(rng, n, n), "B": _rand_matrix(rng, n, n)}
    elif which is BlockDet.D2:
        blocks = {"A": _rand_matrix(rng, n, n - 1), "B": _rand_matrix(rng, n, n - 1),
                  "c": _rand_matrix(rng, n, 1), "d": _rand_matrix(rng, n, 1),
                  "e": _rand_matrix(rng, n, 1)}
    else:
        blocks = {"A": _rand_matrix(rng, n, n + 1), "B": _rand_matrix(rng, n, n + 1)}
    lhs, rhs = block_det_sides(which, blocks)
    return lhs == rhs
