from fractions import Fraction
from math import prod

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from charfact.characters import (
    CharacterFamily, EvalPoint, dim_character, eval_character, iter_ssyt, o_even, sample_point,
    schur, schur_via_ssyt, so_odd, symplectic,
)
from charfact.errors import DomainError, PartitionError
from charfact.partitions import from_values, make, parse


def pt(*roots):
    return EvalPoint(tuple(Fraction(r) for r in roots))


def test_known_values():
    assert eval_character("schur", parse("1,0"), pt(2, 3)) == 13
    assert eval_character("so_odd", parse("1"), pt(2)) == Fraction(21, 4)
    assert eval_character("so_odd", parse("1/2"), pt(2)) == Fraction(5, 2)
    assert eval_character(CharacterFamily.parse("so", negate=True), parse("1"), pt(2)) == Fraction(-13, 4)
    assert eval_character("sp", parse("1"), pt(2)) == Fraction(17, 4)
    assert eval_character("oe", parse("0"), pt(2)) == 1
    assert eval_character("oe", parse("1"), pt(2)) == Fraction(17, 4)


def test_known_dims():
    assert dim_character("s", parse("2,2,0,0")) == 20
    assert dim_character("so", parse("1")) == 3
    assert dim_character("oe", parse("0,0")) == 1
    assert dim_character("sp", parse("1,0")) == 4
    assert dim_character("so", parse("1/2,1/2")) == 4


def test_point_validation():
    for bad in ((1,), (2, 2), (2, Fraction(1, 2)), (0,), (-2,)):
        with pytest.raises(DomainError):
            pt(*bad)
    with pytest.raises(DomainError):
        sample_point(8, 0, bound=17)


def test_family_rules():
    with pytest.raises(DomainError):
        CharacterFamily.parse("sp", negate=True)
    with pytest.raises(DomainError):
        eval_character("sp", parse("1"), pt(2), extra_one=True)
    with pytest.raises(PartitionError):
        eval_character(CharacterFamily.parse("so", negate=True), parse("1/2"), pt(2))
    with pytest.raises(PartitionError):
        eval_character("schur", parse("1/2"), pt(2))
    with pytest.raises(DomainError):
        eval_character("schur", parse("1,0"), pt(2))


def partitions(max_len=3, top=3, min_len=1):
    return st.lists(st.integers(0, top), min_size=min_len, max_size=max_len).map(
        lambda v: from_values(sorted(v, reverse=True)))


def half_partitions(max_len=3, top=3):
    return partitions(max_len, top).map(lambda lam: lam.shift(1))


roots = st.fractions(min_value=Fraction(1, 9), max_value=9, max_denominator=9).filter(lambda t: t > 0 and t != 1)


@st.composite
def lam_and_point(draw, lam_strategy=partitions()):
    lam = draw(lam_strategy)
    ts = []
    while len(ts) < len(lam):
        t = draw(roots)
        if all(t != s and t * s != 1 for s in ts):
            ts.append(t)
    return lam, EvalPoint(tuple(ts))


@settings(max_examples=60, deadline=None)
@given(lam_and_point())
def test_schur_matches_tableaux(case):
    lam, point = case
    assert eval_character("schur", lam, point) == schur_via_ssyt(lam, point.xs)


@settings(max_examples=40, deadline=None)
@given(lam_and_point(), st.integers(0, 3))
def test_schur_translation(case, k):
    lam, point = case
    shifted = make([v + 2 * k for v in lam.doubled])
    assert eval_character("schur", shifted, point) == prod(point.xs) ** k * eval_character("schur", lam, point)


@settings(max_examples=40, deadline=None)
@given(lam_and_point(), st.integers(0, 2))
def test_schur_reciprocal(case, extra):
    lam, point = case
    k = lam[0] + extra
    inv = EvalPoint(tuple(1 / t for t in point.roots))
    flipped = make([int(2 * (k - v)) for v in reversed(lam.entries)])
    assert prod(point.xs) ** k * eval_character("schur", lam, inv) == eval_character("schur", flipped, point)


@settings(max_examples=40, deadline=None)
@given(st.one_of(lam_and_point(), lam_and_point(half_partitions())), st.data())
def test_bar_invariance(case, data):
    lam, point = case
    i = data.draw(st.integers(0, len(lam) - 1))
    ts = list(point.roots)
    ts[i] = 1 / ts[i]
    flipped = EvalPoint(tuple(ts))
    families = ["so_odd", "o_even"] + (["sp"] if lam.is_integer else [])
    for fam in families:
        assert eval_character(fam, lam, flipped) == eval_character(fam, lam, point)


@settings(max_examples=40, deadline=None)
@given(lam_and_point())
def test_odd_orthogonal_shift(case):
    lam, point = case
    factor = prod(t + 1 / t for t in point.roots)
    assert eval_character("so_odd", lam.shift(1), point) == factor * eval_character("sp", lam, point)


@settings(max_examples=40, deadline=None)
@given(lam_and_point())
def test_even_orthogonal_shift(case):
    lam, point = case
    factor = prod(t + 1 / t for t in point.roots)
    sign = (-1) ** sum(lam.as_ints())
    neg = CharacterFamily.parse("so_odd", negate=True)
    assert eval_character("o_even", lam.shift(1), point) == sign * factor * eval_character(neg, lam, point)


@settings(max_examples=30, deadline=None, suppress_health_check=[HealthCheck.large_base_example])
@given(lam_and_point(partitions(min_len=2)), st.data())
def test_symmetric_in_variables(case, data):
    lam, point = case
    perm = data.draw(st.permutations(range(len(lam))))
    swapped = EvalPoint(tuple(point.roots[i] for i in perm))
    for fam in ("schur", "sp", "so_odd", "o_even"):
        assert eval_character(fam, lam, swapped) == eval_character(fam, lam, point)


def test_ssyt_count_matches_dimension():
    for shape, n in (((2, 1), 3), ((3, 3, 1), 3), ((2, 2, 0, 0), 4), ((1, 0, 0), 3)):
        lam = from_values(shape + (0,) * (n - len(shape)))
        assert sum(1 for _ in iter_ssyt(shape, n)) == dim_character("schur", lam)


def test_o_even_root_one_matches_extra_one():
    lam = parse("2,1,0")
    point = pt(2, 3)
    assert eval_character("oe", lam, point, extra_one=True) == o_even(lam, (2, 3, 1))
    assert eval_character("schur", parse("1,1,0"), point, extra_one=True) == schur(parse("1,1,0"), (4, 9, 1))


def test_low_level_agree_with_dispatch():
    lam = parse("2,1")
    assert symplectic(lam, (2, 3)) == eval_character("sp", lam, pt(2, 3))
    assert so_odd(lam, (2, 3), negate=True) == eval_character(CharacterFamily.parse("so", True), lam, pt(2, 3))


# -- dimension formulas against interpolation at t = 1 -----------------------

def _limit_at_one(fam, lam):
    """Value at t_i -> 1 by exact polynomial interpolation in s, t_i = 1 + c_i s."""
    n = len(lam)
    top = int(2 * lam[0]) if n else 0
    cs = [Fraction(i + 1) for i in range(n)]
    degree = 2 * n * top + 2 * n
    ss = [Fraction(1, 50 + j) for j in range(degree + 1)]
    ys = []
    for s in ss:
        ts = tuple(1 + c * s for c in cs)
        ys.append(eval_character(fam, lam, EvalPoint(ts)) * prod(ts) ** top)
    total = Fraction(0)
    for i, (si, yi) in enumerate(zip(ss, ys)):
        w = Fraction(1)
        for j, sj in enumerate(ss):
            if j != i:
                w *= (0 - sj) / (si - sj)
        total += yi * w
    return total


CASES = [parse(t) for t in ("0", "1", "2", "1,0", "2,1", "1,1", "2,2,0", "3,1,0", "2,1,1")]
HALF_CASES = [parse(t) for t in ("1/2", "3/2", "3/2,1/2", "5/2,1/2", "3/2,3/2,1/2")]


@pytest.mark.parametrize("lam", CASES, ids=str)
@pytest.mark.parametrize("fam", ["schur", "sp", "so_odd", "o_even", "so_odd-"])
def test_dimension_formula(fam, lam):
    family = CharacterFamily.parse("so_odd", negate=True) if fam == "so_odd-" else CharacterFamily.parse(fam)
    assert dim_character(family, lam) == _limit_at_one(family, lam)


@pytest.mark.parametrize("lam", HALF_CASES, ids=str)
@pytest.mark.parametrize("fam", ["so_odd", "o_even"])
def test_dimension_formula_half(fam, lam):
    assert dim_character(fam, lam) == _limit_at_one(CharacterFamily.parse(fam), lam)
