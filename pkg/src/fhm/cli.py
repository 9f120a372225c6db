"""Command-line front end: ``fhm <subcommand> ...``."""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import fh, grpalg, shapes, verify
from .fh import FHElement
from .shapes import ShapeError

EXIT_USAGE = 2
EXIT_GUARD = 3
EXIT_FAILED = 1


class UsageError(Exception):
    pass


def _shape(text: str, m: int) -> shapes.MarkedCycleShape:
    try:
        return shapes.parse_shape(text, m)
    except ShapeError as exc:
        raise UsageError(str(exc)) from exc


def _emit(args, rows: list[list[str]], payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
        return
    width = max((len(r[0]) for r in rows), default=0)
    for r in rows:
        print("  ".join([r[0].ljust(width)] + r[1:]).rstrip())


def cmd_shapes_enum(args) -> int:
    found = shapes.enumerate_shapes(args.m, args.max_deg)
    rows = [[str(s), str(s.degree)] for s in found]
    _emit(args, rows, [{"shape": str(s), "m": s.m, "deg": s.degree} for s in found])
    return 0


def cmd_shapes_count(args) -> int:
    graded = not args.cumulative
    if args.method == "closed" and graded:
        raise UsageError("the closed method only gives cumulative counts; pass --cumulative")
    value = shapes.count_shapes(args.m, args.n, args.method, graded=graded)
    if args.format == "json":
        print(json.dumps({"m": args.m, "n": args.n, "cumulative": args.cumulative,
                          "method": args.method, "count": str(value)}, sort_keys=True))
    else:
        print(value)
    return 0


def cmd_class_size(args) -> int:
    shape = _shape(args.shape, args.m)
    if args.n < args.m:
        raise UsageError(f"n={args.n} < m={args.m}")
    value = shapes.class_size(shape, args.n)
    if args.format == "json":
        print(json.dumps({"shape": str(shape), "m": args.m, "n": args.n, "size": str(value)}, sort_keys=True))
    else:
        print(value)
    return 0


def cmd_class_mul(args) -> int:
    lam, mu = _shape(args.lam, args.m), _shape(args.mu, args.m)
    if args.n < args.m:
        raise UsageError(f"n={args.n} < m={args.m}")
    prod = grpalg.class_sum(lam, args.n) * grpalg.class_sum(mu, args.n)
    coeffs = sorted(grpalg.decompose(prod, args.m).items(), key=lambda kv: shapes.sort_key(kv[0]))
    rows = [[str(s), str(c)] for s, c in coeffs]
    _emit(args, rows, {"m": args.m, "n": args.n, "lambda": str(lam), "mu": str(mu),
                       "terms": [{"shape": str(s), "coeff": str(c)} for s, c in coeffs]})
    return 0


def _table_rows(table: dict) -> list[tuple[shapes.MarkedCycleShape, object]]:
    return sorted(table.items(), key=lambda kv: shapes.sort_key(kv[0]))


def cmd_fh_mul(args) -> int:
    lam, mu = _shape(args.lam, args.m), _shape(args.mu, args.m)
    X = FHElement.K(lam) * FHElement.K(mu)
    rows = [[str(s), p.shifted_binomial_form(s.degree)] for s, p in _table_rows(X.terms)]
    _emit(args, rows, X.to_json())
    return 0


def cmd_structpoly(args) -> int:
    lam, mu = _shape(args.lam, args.m), _shape(args.mu, args.m)
    table = fh.product_table(lam, mu)
    rows = [[str(nu), f.shifted_binomial_form(nu.degree)] for nu, f in _table_rows(table)]
    payload = {
        "m": args.m,
        "lambda": str(lam),
        "mu": str(mu),
        "terms": [{"nu": str(nu), "poly": f.to_json(), "text": f.shifted_binomial_form(nu.degree)}
                  for nu, f in _table_rows(table)],
    }
    _emit(args, rows, payload)
    return 0


def cmd_verify(args) -> int:
    suite = verify.SUITES[args.suite]
    kwargs = {}
    if args.suite in ("relations", "iso", "center", "orbit", "counts") and args.m is not None:
        kwargs["max_m"] = args.m
    if args.suite == "iso" and args.max_deg is not None:
        kwargs["max_deg_offset"] = max(args.max_deg - (args.m or 0), 0)
    if args.suite == "orbit" and args.max_deg is not None:
        kwargs["max_deg"] = args.max_deg
    if args.suite in ("jucys", "orbit", "counts") and args.max_n is not None:
        kwargs["max_n"] = args.max_n
    try:
        for name in suite(**kwargs):
            print(f"ok  {name}")
    except verify.CheckFailed as exc:
        print(f"FAIL  {exc}")
        return EXIT_FAILED
    print(f"suite {args.suite}: all checks passed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fhm", description="Exact computations in centraliser FH algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("table", "json"), default="table")
        p.set_defaults(func=func)
        return p

    p = add("shapes-enum", cmd_shapes_enum, "list marked cycle shapes up to a degree")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--max-deg", type=int, required=True)

    p = add("shapes-count", cmd_shapes_count, "count marked cycle shapes")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--cumulative", action="store_true", help="count degrees <= n instead of == n")
    p.add_argument("--method", choices=("genfunc", "closed", "enumerate"), default="genfunc")

    p = add("class-size", cmd_class_size, "size of a Stab_n(m) class")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--shape", required=True)

    for name, func, text in (("class-mul", cmd_class_mul, "multiply class sums in ZS_n"),
                             ("fh-mul", cmd_fh_mul, "multiply basis elements of FH_m"),
                             ("structpoly", cmd_structpoly, "structure polynomials of a product")):
        p = add(name, func, text)
        p.add_argument("-m", type=int, required=True)
        p.add_argument("--lambda", dest="lam", required=True)
        p.add_argument("--mu", required=True)
        if name == "class-mul":
            p.add_argument("-n", type=int, required=True)

    p = add("verify", cmd_verify, "run a verification suite")
    p.add_argument("suite", choices=sorted(verify.SUITES))
    p.add_argument("-m", type=int, default=None, help="largest m to check")
    p.add_argument("--max-deg", type=int, default=None)
    p.add_argument("--max-n", type=int, default=None)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("m", "n", "max_deg", "max_n"):
        value = getattr(args, name, None)
        if value is not None and value < 0:
            parser.error(f"--{name.replace('_', '-')} must be nonnegative")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"fhm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (grpalg.TermCapExceeded, ShapeError) as exc:
        print(f"fhm: guard: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
