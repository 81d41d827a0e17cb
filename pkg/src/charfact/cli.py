"""Command-line front end.

Exit codes: 0 when every check passed (or a value was printed), 1 when some
verification failed, 2 for usage or parameter errors (reported on stderr).
The default seed is 0 unless the ``CHARFACT_SEED`` environment variable says
otherwise.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from math import isqrt

from . import enumeration as en
from . import identities as ids
from .characters import CharacterFamily, EvalPoint, dim_character, eval_character, sample_point, schur_via_ssyt
from .errors import DomainError
from .numeric import rat, rat_str
from .partitions import parse as parse_partition

SEED_ENV = "CHARFACT_SEED"


class UsageError(Exception):
    pass


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be a nonnegative integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("seed must be nonnegative")
    return value


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def _sizes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"size must be comma-separated integers, got {text!r}") from None


def _rationals(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(p.strip()) for p in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="charfact", description="Exact checks of classical group character factorizations.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt_default="text"):
        sp.add_argument("--format", choices=("text", "json", "csv"), default=fmt_default)
        sp.add_argument("--output", help="write here instead of standard output")

    def seeded(sp):
        sp.add_argument("--seed", type=_seed, default=None,
                        help=f"random seed (default: ${SEED_ENV} or 0)")

    def family(sp):
        sp.add_argument("--family", required=True, help="schur, symplectic, so_odd or o_even")
        sp.add_argument("--negate", action="store_true", help="so_odd at -x instead of x")
        sp.add_argument("--lambda", dest="lam", required=True, help="e.g. 2,1,0 or 5/2,3/2")

    sp = sub.add_parser("eval", help="evaluate a character at a rational point")
    family(sp)
    pt = sp.add_mutually_exclusive_group(required=True)
    pt.add_argument("--roots", type=_rationals, help="t values; the variables are x = t^2")
    pt.add_argument("--x", type=_rationals, help="variable values; each must be a rational square")
    sp.add_argument("--extra-one", action="store_true", help="append the variable 1 (schur, o_even)")
    common(sp)

    sp = sub.add_parser("dim", help="character at all variables 1 (or -1 with --negate)")
    family(sp)
    common(sp)

    sp = sub.add_parser("verify", help="randomized exact check of one identity")
    sp.add_argument("--id", required=True)
    sp.add_argument("--lambda", dest="lam")
    for name in ("k", "k1", "k2", "a"):
        sp.add_argument(f"--{name}")
    for name in ("b", "m", "n"):
        sp.add_argument(f"--{name}", type=int)
    sp.add_argument("--trials", type=_positive, default=ids.DEFAULT_TRIALS)
    seeded(sp)
    common(sp)

    for name, fmt, text in (("sweep", "text", "verify an identity over its default grid"),
                            ("table", "csv", "pass/fail matrix of identity x params")):
        sp = sub.add_parser(name, help=text)
        sp.add_argument("--id", required=True, help="identity name or 'all'")
        sp.add_argument("--trials", type=_positive, default=ids.DEFAULT_TRIALS)
        seeded(sp)
        common(sp, fmt)

    sp = sub.add_parser("count", help="product formula for a counting family")
    sp.add_argument("--family", required=True)
    sp.add_argument("--size", type=_sizes, required=True, help="e.g. 3 or 2,2,2")
    common(sp)

    sp = sub.add_parser("oracle", help="compare a formula with an independent computation")
    sp.add_argument("--kind", choices=("brute", "ssyt", "bridge", "countid"), required=True)
    sp.add_argument("--family", help="count family (brute, bridge)")
    sp.add_argument("--id", help="count identity pp1..pp6, ds1..ds6 (countid)")
    sp.add_argument("--size", type=_sizes)
    sp.add_argument("--lambda", dest="lam", help="partition (ssyt)")
    sp.add_argument("--x", type=_rationals, help="variables (ssyt); random when omitted")
    seeded(sp)
    common(sp)

    sp = sub.add_parser("detcheck", help="block determinant identities used in the proofs")
    sp.add_argument("--which", choices=("d1", "d2", "d3"), required=True)
    sp.add_argument("--size", type=_positive, required=True)
    sp.add_argument("--seeds", type=_positive, default=1, help="number of consecutive seeds")
    seeded(sp)
    common(sp)
    return p


# -- output ------------------------------------------------------------------

class Result:
    """What a command produced: a JSON document, CSV rows and text lines."""

    def __init__(self, doc: dict, columns: list[str], rows: list[list[str]], lines: list[str], ok: bool = True):
        self.doc, self.columns, self.rows, self.lines, self.ok = doc, columns, rows, lines, ok

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.doc, indent=2, sort_keys=True) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(self.columns)
            w.writerows(self.rows)
            return buf.getvalue()
        return "".join(line + "\n" for line in self.lines)


def _kv(doc: dict) -> list[str]:
    out = []
    for key in sorted(doc):
        v = doc[key]
        if isinstance(v, list):
            v = ",".join(map(str, v))
        elif isinstance(v, bool):
            v = str(v).lower()
        out.append(f"{key}={v}")
    return [" ".join(out)]


def _simple(doc: dict, ok: bool = True) -> Result:
    cols = sorted(doc)
    row = [",".join(map(str, doc[c])) if isinstance(doc[c], list) else
           (str(doc[c]).lower() if isinstance(doc[c], bool) else str(doc[c])) for c in cols]
    return Result(doc, cols, [row], _kv(doc), ok)


# -- commands ----------------------------------------------------------------

def _point_from_x(xs) -> EvalPoint:
    roots = []
    for x in xs:
        num, den = x.numerator, x.denominator
        rn, rd = _isqrt_exact(num), _isqrt_exact(den)
        if x <= 0 or rn is None or rd is None:
            raise DomainError(f"x = {rat_str(x)} is not the square of a positive rational; use --roots")
        roots.append(Fraction(rn, rd))
    return EvalPoint(tuple(roots))


def _isqrt_exact(v: int):
    if v < 0:
        return None
    r = isqrt(v)
    return r if r * r == v else None


def cmd_eval(args) -> Result:
    fam = CharacterFamily.parse(args.family, negate=args.negate)
    lam = parse_partition(args.lam)
    point = EvalPoint(args.roots) if args.roots is not None else _point_from_x(args.x)
    value = eval_character(fam, lam, point, extra_one=args.extra_one)
    doc = {"command": "eval", "family": fam.tag.value, "negate": fam.negate,
           "lambda": [rat_str(v) for v in lam.entries],
           "point": [rat_str(x) for x in point.xs], "value": rat_str(value)}
    return _simple(doc)


def cmd_dim(args) -> Result:
    fam = CharacterFamily.parse(args.family, negate=args.negate)
    lam = parse_partition(args.lam)
    value = dim_character(fam, lam)
    doc = {"command": "dim", "family": fam.tag.value, "negate": fam.negate,
           "lambda": [rat_str(v) for v in lam.entries], "value": rat_str(value)}
    return _simple(doc)


def _identity_params(args) -> ids.IdentityParams:
    return ids.IdentityParams(
        lam=parse_partition(args.lam) if args.lam is not None else None,
        k=rat(args.k) if args.k is not None else None,
        k1=rat(args.k1) if args.k1 is not None else None,
        k2=rat(args.k2) if args.k2 is not None else None,
        a=rat(args.a) if args.a is not None else None,
        b=args.b, m=args.m, n=args.n)


REPORT_COLUMNS = ["identity", "params", "trials", "failures", "seed", "status", "witness"]


def _report_row(r: ids.VerificationReport) -> list[str]:
    w = ""
    if r.witness:
        d = r.witness.to_dict()
        w = f"point={','.join(d['point'])} lhs={d['lhs']} rhs={d['rhs']}"
    return [r.identity.value, r.params.describe(), str(r.trials), str(r.failures), str(r.seed),
            "PASS" if r.passed else "FAIL", w]


def cmd_verify(args) -> Result:
    identity = ids.IdentityId.parse(args.id)
    try:
        params = _identity_params(args)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(str(exc)) from exc
    report = ids.verify(identity, params, args.trials, args.seed)
    return Result(report.to_dict(), REPORT_COLUMNS, [_report_row(report)], [report.to_line()], report.passed)


def _selected(text: str) -> list[ids.IdentityId]:
    if text.strip().lower() == "all":
        return list(ids.IdentityId)
    return [ids.IdentityId.parse(part) for part in text.split(",")]


def _run_sweeps(args) -> list[ids.VerificationReport]:
    reports = []
    for identity in _selected(args.id):
        reports.extend(ids.sweep(identity, ids.acceptance_ranges(identity), args.trials, args.seed))
    return reports


def cmd_sweep(args) -> Result:
    selected = _selected(args.id)
    reports = _run_sweeps(args)
    failed = sum(1 for r in reports if not r.passed)
    doc = {"command": "sweep", "cases": len(reports), "failed_cases": failed,
           "reports": [r.to_dict() for r in reports]}
    lines = [r.to_line() for r in reports]
    lines.append(f"# {', '.join(i.value for i in selected)}: {len(reports)} cases, {failed} failed")
    return Result(doc, REPORT_COLUMNS, [_report_row(r) for r in reports], lines, failed == 0)


def cmd_table(args) -> Result:
    reports = _run_sweeps(args)
    columns = ["identity", "params", "trials", "failures", "status"]
    rows = [_report_row(r)[:4] + [_report_row(r)[5]] for r in reports]
    widths = [max(len(c), *(len(row[i]) for row in rows)) if rows else len(c) for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in rows]
    doc = {"command": "table", "columns": columns, "rows": rows}
    return Result(doc, columns, rows, lines, all(r.passed for r in reports))


def cmd_count(args) -> Result:
    fam = en.CountFamily.of(args.family, *args.size)
    value = en.count(fam)
    doc = {"command": "count", "family": fam.tag.value, "size": list(fam.params), "value": str(value)}
    return Result(doc, ["family", "size", "value"],
                  [[fam.tag.value, ",".join(map(str, fam.params)), str(value)]], [str(value)])


def cmd_oracle(args) -> Result:
    if args.kind in ("brute", "bridge", "countid") and args.size is None:
        raise UsageError(f"oracle --kind {args.kind} needs --size")
    if args.kind == "brute":
        if not args.family:
            raise UsageError("oracle --kind brute needs --family")
        fam = en.CountFamily.of(args.family, *args.size)
        values = [en.count(fam), en.brute_count(fam)]
        subject = str(fam)
    elif args.kind == "bridge":
        if not args.family:
            raise UsageError("oracle --kind bridge needs --family")
        tag = en.CountTag(args.family.lower().replace("*", "_star"))
        size = args.size if len(args.size) > 1 else args.size[0]
        values = en.dim_bridge_values(tag, size)
        subject = f"{tag.value}({','.join(map(str, args.size))})"
    elif args.kind == "countid":
        if not args.id:
            raise UsageError("oracle --kind countid needs --id")
        which = en.CountIdentity(args.id.lower())
        size = args.size if which.value.startswith("pp") else args.size[0]
        values = list(en.count_identity_sides(which, size))
        subject = f"{which.value}({','.join(map(str, args.size))})"
    else:
        if args.lam is None:
            raise UsageError("oracle --kind ssyt needs --lambda")
        lam = parse_partition(args.lam)
        if args.x is not None:
            point = _point_from_x(args.x)
        else:
            point = sample_point(len(lam), args.seed, ids.point_bound(len(lam)))
        xs = point.xs
        values = [eval_character("schur", lam, point), schur_via_ssyt(lam, xs)]
        subject = f"schur({lam}) at x={','.join(rat_str(x) for x in xs)}"
    passed = all(v == values[0] for v in values)
    doc = {"command": "oracle", "kind": args.kind, "subject": subject,
           "values": [rat_str(v) for v in values], "passed": passed}
    return _simple(doc, passed)


def cmd_detcheck(args) -> Result:
    seeds = list(range(args.seed, args.seed + args.seeds))
    failed = [s for s in seeds if not ids.check_block_det(args.which, args.size, s)]
    doc = {"command": "detcheck", "which": args.which, "size": args.size, "seeds": seeds,
           "failed_seeds": failed, "passed": not failed}
    return _simple(doc, not failed)


COMMANDS = {"eval": cmd_eval, "dim": cmd_dim, "verify": cmd_verify, "sweep": cmd_sweep,
            "table": cmd_table, "count": cmd_count, "oracle": cmd_oracle, "detcheck": cmd_detcheck}


def _default_seed() -> int:
    text = os.environ.get(SEED_ENV)
    if text is None or text == "":
        return 0
    try:
        return _seed(text)
    except argparse.ArgumentTypeError as exc:
        raise UsageError(f"${SEED_ENV}: {exc}") from None


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if getattr(args, "seed", 0) is None:
            args.seed = _default_seed()
        result = COMMANDS[args.command](args)
    except (UsageError, ValueError) as exc:
        print(f"charfact: error: {exc}", file=sys.stderr)
        return 2
    text = result.render(args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if result.ok else 1


if __name__ == "__main__":
    sys.exit(main())
