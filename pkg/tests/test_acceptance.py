"""The twelve acceptance criteria, each at its stated ranges and tolerance (exact)."""
import random
import time
from fractions import Fraction
from itertools import product

from charfact import enumeration as en
from charfact import identities as ids
from charfact.characters import eval_character, point_from_rng, schur_via_ssyt
from charfact.identities import IdentityId, IdentityParams
from charfact.partitions import Parity, parse

TRIALS = 10
SEED = 0


def _sweep(identity):
    return ids.sweep(identity, ids.acceptance_ranges(identity), TRIALS, SEED)


def _summary(reports):
    failed = [r for r in reports if not r.passed]
    return len(reports), failed


def _first_failure(failed):
    return f"; first failure: {failed[0].to_line()}" if failed else ""


def test_criterion_01_fact1_sweep(criterion):
    start = time.perf_counter()
    reports = _sweep(IdentityId.FACT1)
    elapsed = time.perf_counter() - start
    cases, failed = _summary(reports)
    half = [r for r in reports if not r.params.lam.is_integer]
    assert half and max(r.params.lam[0] for r in half) == Fraction(5, 2)
    assert max(r.params.k - r.params.lam[0] for r in reports) == 2
    ok = criterion(1, not failed and elapsed < 60,
                   f"FACT1 sweep: {cases} cases x {TRIALS} trials, {len(failed)} failed, {elapsed:.1f}s"
                   + _first_failure(failed))
    assert ok


def test_criterion_02_fact2_sweep(criterion):
    reports = _sweep(IdentityId.FACT2)
    cases, failed = _summary(reports)
    zero_tail = sum(1 for r in reports if r.params.lam.doubled[-1] == 0)
    assert zero_tail > 0
    assert {len(r.params.lam) - 1 for r in reports} == {1, 2, 3}
    ok = criterion(2, not failed, f"FACT2 sweep: {cases} cases ({zero_tail} with last part 0), "
                                  f"{len(failed)} failed" + _first_failure(failed))
    assert ok


def test_criterion_03_fact3_sweeps(criterion):
    total, failures = 0, []
    for identity in (IdentityId.FACT3, IdentityId.FACT3P_PLUS, IdentityId.FACT3P_MINUS):
        cases, failed = _summary(_sweep(identity))
        total += cases
        failures += failed
    mismatched = 0
    compared = 0
    for params in ids.iter_params(IdentityId.FACT3P_PLUS, ids.acceptance_ranges(IdentityId.FACT3P_PLUS)):
        plus = ids.prepare(IdentityId.FACT3P_PLUS, params)
        minus = ids.prepare(IdentityId.FACT3P_MINUS, params)
        rng = random.Random(SEED)
        for _ in range(TRIALS):
            pt = point_from_rng(rng, plus.nvars, ids.point_bound(plus.nvars))
            compared += 1
            if plus.sides(pt)[0] != minus.sides(pt)[0]:
                mismatched += 1
    ok = criterion(3, not failures and mismatched == 0,
                   f"FACT3/3P+/3P- sweeps: {total} cases, {len(failures)} failed; "
                   f"3P+ vs 3P- left sides: {compared} points, {mismatched} differ" + _first_failure(failures))
    assert ok


def test_criterion_04_prop_sweeps(criterion):
    r1 = _sweep(IdentityId.PROP1)
    r2 = _sweep(IdentityId.PROP2)
    assert {r.params.a for r in r1} == {0, 1, 2, Fraction(1, 2), Fraction(3, 2)}
    assert {r.params.b for r in r1} == {0, 1, 2, 3}
    assert {(r.params.a, r.params.b) for r in r2} == {
        (0, 0), (0, 1), (0, 2), (Fraction(1, 2), 1), (Fraction(1, 2), 2), (Fraction(1, 2), 3),
        (1, 2), (1, 3), (1, 4)}
    _, f1 = _summary(r1)
    _, f2 = _summary(r2)
    ok = criterion(4, not f1 and not f2, f"PROP1: {len(r1)} cases, {len(f1)} failed; "
                                         f"PROP2: {len(r2)} cases, {len(f2)} failed" + _first_failure(f1 + f2))
    assert ok


def test_criterion_05_alternative_statements(criterion):
    parts = []
    failures = []
    for identity in (IdentityId.FACT4, IdentityId.FACT11, IdentityId.FACT12, IdentityId.FACT21, IdentityId.FACT22):
        cases, failed = _summary(_sweep(identity))
        failures += failed
        parts.append(f"{identity.value} {cases}")
    ok = criterion(5, not failures, f"{', '.join(parts)} cases; {len(failures)} failed" + _first_failure(failures))
    assert ok


def test_criterion_06_rectangle_and_staircase(criterion):
    start = time.perf_counter()
    parts = []
    failures = []
    for identity in (IdentityId.RECT1, IdentityId.RECT2, IdentityId.RECT3, IdentityId.RECT4,
                     IdentityId.ADDRECT1, IdentityId.ADDRECT2, IdentityId.QAST1, IdentityId.QAST2,
                     IdentityId.AST1, IdentityId.AST2, IdentityId.DASASM1, IdentityId.DASASM2):
        reports = _sweep(identity)
        cases, failed = _summary(reports)
        failures += failed
        parts.append(cases)
    elapsed = time.perf_counter() - start
    ok = criterion(6, not failures, f"rectangle and double-staircase identities: {sum(parts)} cases, "
                                    f"{len(failures)} failed, {elapsed:.1f}s" + _first_failure(failures))
    assert ok


def test_criterion_07_schur_oracle(criterion):
    rng = random.Random(SEED)
    checked = mismatched = 0
    for n in (1, 2, 3):
        for lam in ids.bounded_partitions(n, Fraction(3), Parity.INTEGER):
            for _ in range(5):
                pt = point_from_rng(rng, n, ids.point_bound(n))
                checked += 1
                if eval_character("schur", lam, pt) != schur_via_ssyt(lam, pt.xs):
                    mismatched += 1
    ok = criterion(7, mismatched == 0, f"bialternant vs tableaux: {checked} evaluations, {mismatched} differ")
    assert ok


def test_criterion_08_block_determinants(criterion):
    bad = [(w, size, seed) for w, size, seed in product(("d1", "d2", "d3"), (2, 3, 4), range(20))
           if not ids.check_block_det(w, size, seed)]
    ok = criterion(8, not bad, f"D1/D2/D3 at sizes 2-4, 20 seeds each: {len(bad)} failed {bad[:3]}")
    assert ok


def test_criterion_09_counts_vs_enumeration(criterion):
    families = [en.CountFamily(en.CountTag.PP, box) for box in product(range(4), repeat=3)]
    families += [en.CountFamily.of("asm", m) for m in range(6)]
    # symmetry classes in boxes with every side at most 4
    families += [en.CountFamily.of(name, a, b) for name in ("spp", "tcpp")
                 for a in range(3) for b in range(5)]
    families += [en.CountFamily.of("cspp", m) for m in range(5)]
    families += [en.CountFamily.of("tspp", s) for s in (0, 2, 4)]
    families += [en.CountFamily.of("cstcpp", s) for s in (0, 2, 4)]
    bad = [(str(f), en.count(f), en.brute_count(f)) for f in families if en.count(f) != en.brute_count(f)]
    assert [en.count(en.CountFamily.of("asm", m)) for m in range(1, 6)] == [1, 2, 7, 42, 429]
    assert en.count(en.CountFamily.of("pp", 2, 2, 2)) == 20
    ok = criterion(9, not bad, f"product formula vs enumeration: {len(families)} families/sizes, "
                               f"{len(bad)} differ {bad[:3]}")
    assert ok


def test_criterion_10_count_identities(criterion):
    checked = 0
    bad = []
    for which in en.CountIdentity:
        if which.value.startswith("pp"):
            low = 1 if which.value in ("pp2", "pp3", "pp4") else 0
            sizes = [(m, n) for m in range(5) for n in range(low, 5)]
        else:
            sizes = range(1 if which is en.CountIdentity.DS4 else 0, 6)
        for size in sizes:
            checked += 1
            lhs, rhs = en.count_identity_sides(which, size)
            if lhs != rhs:
                bad.append((which.value, size, lhs, rhs))
    ok = criterion(10, not bad, f"PP1-PP6 (m,n <= 4) and DS1-DS6 (n <= 5): {checked} checks, {len(bad)} failed")
    assert ok


def test_criterion_11_dimension_bridges(criterion):
    checks = []
    checks += [(en.CountTag.PP, s) for s in product(range(5), repeat=3)]
    checks += [(en.CountTag.TCPP, (a, b)) for a in range(5) for b in range(1, 5)]
    checks += [(en.CountTag.SPP, (a, b)) for a in range(5) for b in range(5)]
    checks += [(en.CountTag.SPP_STAR, (a, b)) for a in range(1, 5) for b in range(1, 5)]
    checks += [(tag, m) for tag in (en.CountTag.CSPP, en.CountTag.ASM, en.CountTag.DASASM, en.CountTag.TSPP,
                                    en.CountTag.R, en.CountTag.CSTCPP, en.CountTag.VSASM)
               for m in range(1, 5)]
    bad = [(t.value, s) for t, s in checks if not en.dim_bridge(t, s)]
    ok = criterion(11, not bad, f"character specializations vs counts: {len(checks)} checks, {len(bad)} failed {bad[:3]}")
    assert ok


def test_criterion_12_negative_control(criterion):
    params = IdentityParams(lam=parse("2,1,0"), k1=Fraction(2), k2=Fraction(3))
    broken = ids.fact2_sides(params, with_delta=False)
    report = ids.verify(IdentityId.FACT2, params, TRIALS, SEED, prepared=broken)
    ok = criterion(12, report.failures == report.trials == TRIALS,
                   f"FACT2 without its (1 + delta) factor: failures={report.failures} of {report.trials}")
    assert ok
