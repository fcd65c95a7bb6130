"""Command-line front end: ``dstir {table,verify,series,limit}``.

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 an identity (or limit comparison) failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from fractions import Fraction

from . import numbers as nb
from . import series as ser
from .exactalg import LambdaPoly, format_rational, parse_rational
from .identities import CheckMode, IdentityId, check_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_KINDS = {
    "s1": nb.StirlingKind.S1_LAMBDA,
    "s2": nb.StirlingKind.S2_LAMBDA,
    "us1": nb.StirlingKind.UNSIGNED_S1_LAMBDA,
    "lah": nb.StirlingKind.LAH,
}


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {text!r}")
    return v


def render(v) -> str:
    """Canonical printer shared by every command."""
    if isinstance(v, LambdaPoly):
        return str(v)
    return format_rational(v)


def _emit(out, fmt: str, header: list, rows: list, meta: dict):
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\r\n")
        w.writerow(header)
        w.writerows(rows)
    elif fmt == "json":
        doc = dict(meta)
        doc["rows"] = [dict(zip(header, r)) for r in rows]
        out.write(json.dumps(doc, ensure_ascii=False, indent=2) + "\n")
    else:
        cells = [header] + [[str(c) for c in r] for r in rows]
        widths = [max(len(str(row[i])) for row in cells) for i in range(len(header))]
        for row in cells:
            out.write("  ".join(str(c).ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")


# -- commands --------------------------------------------------------------

def cmd_table(args, out) -> int:
    lam = args.lam
    rows = []
    if args.kind == "rs2":
        if args.r is None:
            raise UsageError("--kind rs2 requires --r")
        for n in range(args.nmax + 1):
            for k in range(n + 1):
                v = nb.r_stirling2(n, k, args.r)
                rows.append([n, k, render(v if lam is None else v(lam))])
    else:
        tri = nb.triangle(_KINDS[args.kind], args.nmax)
        for n in range(args.nmax + 1):
            for k in range(n + 1):
                v = tri[n, k]
                if args.kind == "lah":
                    v = v.constant
                elif lam is not None:
                    v = v(lam)
                rows.append([n, k, render(v)])
    meta = {
        "command": "table",
        "kind": args.kind,
        "n_max": args.nmax,
        "lambda": None if lam is None else format_rational(lam),
    }
    if args.kind == "rs2":
        meta["r"] = args.r
    _emit(out, args.format, ["n", "k", "value"], rows, meta)
    return EXIT_OK


def _series_for(args) -> ser.TruncatedSeries:
    order, lam = args.order, args.lam
    if args.which == "eexp":
        x = Fraction(1) if args.x is None else args.x
        return ser.deg_exp(x, order, lam=lam)
    if args.which == "elog":
        return ser.deg_log(order, lam=lam)
    if args.which == "bell":
        x = Fraction(1) if args.x is None else args.x
        return ser.exp_series((ser.deg_exp(1, order, lam=lam) - 1).scale(x))
    if args.which == "lahgf":
        k = 1 if args.k is None else args.k
        base = ser.variable(order) * ser.geometric(order)
        return (base ** k).scale(Fraction(1, math.factorial(k)))
    raise UsageError(f"unknown series {args.which!r}")


def cmd_series(args, out) -> int:
    f = _series_for(args)
    rows = [[n, render(f[n]), render(f.egf(n))] for n in range(f.order + 1)]
    meta = {
        "command": "series",
        "which": args.which,
        "order": args.order,
        "lambda": None if args.lam is None else format_rational(args.lam),
    }
    _emit(out, args.format, ["n", "coefficient", "egf"], rows, meta)
    return EXIT_OK


def cmd_limit(args, out) -> int:
    kind = _KINDS[args.kind]
    classical = nb.s1_classical if args.kind == "s1" else nb.s2_classical
    tri = nb.triangle(kind, args.nmax)
    rows, ok = [], True
    for n in range(args.nmax + 1):
        for k in range(n + 1):
            a, b = tri[n, k](0), classical(n, k)
            ok &= a == b
            rows.append([n, k, render(a), render(b), "yes" if a == b else "no"])
    meta = {"command": "limit", "kind": args.kind, "n_max": args.nmax, "all_match": ok}
    _emit(out, args.format, ["n", "k", "at_lambda_0", "classical", "match"], rows, meta)
    return EXIT_OK if ok else EXIT_FAIL


def _parse_ids(values: list) -> list | None:
    names = [s for v in values for s in v.split(",") if s]
    if not names or any(s.lower() == "all" for s in names):
        return None
    ids = []
    for s in names:
        try:
            ids.append(IdentityId(s))
        except ValueError:
            raise UsageError(
                f"unknown identity id {s!r}; choose from: "
                + ", ".join(i.value for i in IdentityId)
            ) from None
    return ids


def cmd_verify(args, out) -> int:
    ids = _parse_ids(args.ids)
    seed = args.seed
    env = os.environ.get("DSTIR_SEED")
    if env is not None:
        try:
            seed = int(env)
        except ValueError:
            raise UsageError(f"DSTIR_SEED is not an integer: {env!r}") from None
    if args.mode == "symbolic":
        mode = CheckMode.symbolic()
    elif args.mode == "sampled":
        mode = CheckMode.sampled(seed, args.samples)
    else:
        mode = None
    reports = check_all(args.nmax, mode, ids=ids, seed=seed, samples=args.samples)
    failed = [r for r in reports if not r.ok]
    if args.format == "json":
        doc = {
            "command": "verify",
            "n_max": args.nmax,
            "seed": seed,
            "passed": not failed,
            "reports": [r.to_dict() for r in reports],
        }
        out.write(json.dumps(doc, ensure_ascii=False, indent=2) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\r\n")
        w.writerow(["id", "mode", "n_max", "status", "expected", "cases", "params", "lhs", "rhs"])
        for r in reports:
            d = r.to_dict()
            cx = d.get("counterexample", {})
            params = ";".join(f"{k}={v}" for k, v in cx.get("params", {}).items())
            w.writerow([d["id"], d["mode"], d["n_max"], d["status"], d["expected"], d["cases"],
                        params, cx.get("lhs", ""), cx.get("rhs", "")])
    else:
        width = max((len(r.id.value) for r in reports), default=0)
        for r in reports:
            tag = r.status.upper()
            if r.expected_fail:
                tag += " (expected fail)" if r.status == "fail" else " (probe did not trigger)"
            line = f"{r.id.value.ljust(width)}  {tag:<28} {r.mode.kind:<9} cases={r.cases}"
            if r.counterexample is not None:
                cx = r.counterexample.to_dict()
                params = ", ".join(f"{k}={v}" for k, v in cx["params"].items())
                line += f"  at {params}: lhs = {cx['lhs']}, rhs = {cx['rhs']}"
            out.write(line + "\n")
        out.write(f"{len(reports) - len(failed)}/{len(reports)} as expected\n")
    for r in failed:
        print(f"identity {r.id.value} failed", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="dstir",
        description="Degenerate Stirling numbers in exact arithmetic.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp, default):
        sp.add_argument("--format", choices=("csv", "json", "pretty"), default=default)

    t = sub.add_parser("table", help="emit a number triangle")
    t.add_argument("--kind", choices=("s1", "s2", "us1", "lah", "rs2"), required=True)
    t.add_argument("--nmax", type=_nonneg, required=True)
    t.add_argument("--lambda", dest="lam", type=_rational, default=None,
                   help="evaluate at this rational λ (p/q)")
    t.add_argument("--r", type=_nonneg, default=None, help="shift for --kind rs2")
    fmt(t, "csv")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="check identities over a bounded range")
    v.add_argument("--ids", nargs="+", default=["all"],
                   help="identity ids (comma or space separated) or 'all'")
    v.add_argument("--nmax", type=_nonneg, default=12)
    v.add_argument("--mode", choices=("defaults", "symbolic", "sampled"), default="defaults")
    v.add_argument("--seed", type=int, default=0, help="overridden by DSTIR_SEED")
    v.add_argument("--samples", type=_nonneg, default=2,
                   help="extra random sample points in sampled mode")
    fmt(v, "pretty")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("series", help="emit coefficients of a named series")
    s.add_argument("--which", choices=("eexp", "elog", "bell", "lahgf"), required=True)
    s.add_argument("--order", type=_nonneg, required=True)
    s.add_argument("--lambda", dest="lam", type=_rational, default=None)
    s.add_argument("--x", type=_rational, default=None, help="argument for eexp/bell")
    s.add_argument("--k", type=_nonneg, default=None, help="column for lahgf")
    fmt(s, "csv")
    s.set_defaults(func=cmd_series)

    lm = sub.add_parser("limit", help="compare λ = 0 with the classical triangle")
    lm.add_argument("--kind", choices=("s1", "s2"), required=True)
    lm.add_argument("--nmax", type=_nonneg, required=True)
    fmt(lm, "csv")
    lm.set_defaults(func=cmd_limit)
    return p


def main(argv=None, stdout=None) -> int:
    out = stdout if stdout is not None else sys.stdout
    if isinstance(out, io.TextIOWrapper):
        out.reconfigure(encoding="utf-8")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"dstir: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
