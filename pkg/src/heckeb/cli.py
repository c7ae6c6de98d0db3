"""Command-line front end.

Subcommands:

    square-w0k  print T_{w_{0,k}}^2 in the T-basis
    fk          print f_k by any of its three computations
    good        tabulate the good involutions of rank k with statistics
    sep         tabulate separated k-sets
    mult        evaluate a word expression in the Hecke algebra
    verify      run verification suites and report pass/fail

Exit codes: 0 success, 1 verification failure, 2 usage error.  All output
goes to stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from .combinat import count_separated, enumerate_good, enumerate_separated
from .hecke import HeckeElement, mult, t_of
from .poly import cyclotomic, reduce_mod_cyclotomic
from .signedperm import make_w_nk
from .verify import (
    SUITES,
    closed_form_w0k_square,
    f_k_direct,
    f_k_recurrence,
    f_k_separated,
    run_suite,
)
from .words import WordSyntaxError, evaluate_word, parse_word

F_K_METHODS = {
    "direct": f_k_direct,
    "recurrence": f_k_recurrence,
    "separated": f_k_separated,
}


def _print_element(h: HeckeElement) -> None:
    terms = h.sorted_terms()
    if not terms:
        print("0")
        return
    width = max(len(str(w)) for w, _ in terms)
    for w, c in terms:
        print(f"T{str(w):<{width}}  {c}")


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2))


def _cmd_square_w0k(args) -> int:
    w = make_w_nk(0, args.k)
    square = mult(t_of(w), t_of(w))
    if args.json:
        _emit_json(square.to_json())
    else:
        _print_element(square)
    return 0


def _cmd_fk(args) -> int:
    poly = F_K_METHODS[args.method](args.k)
    if args.mod_cyclotomic:
        poly = reduce_mod_cyclotomic(poly, cyclotomic(args.k))
    if args.json:
        _emit_json(
            {
                "k": args.k,
                "method": args.method,
                "mod_cyclotomic": args.mod_cyclotomic,
                "poly": poly.to_json(),
            }
        )
    else:
        print(poly)
    return 0


def _cmd_good(args) -> int:
    closed = closed_form_w0k_square(args.k)
    rows = []
    for g in enumerate_good(args.k):
        rows.append(
            {
                "w": str(g.perm),
                "a": g.a,
                "a_neg": g.a_neg,
                "c": g.c,
                "coeff": str(closed.coefficient(g.perm)),
            }
        )
    if args.json:
        _emit_json({"k": args.k, "count": len(rows), "involutions": rows})
        return 0
    w_width = max(len(r["w"]) for r in rows)
    print(f"{'w':<{w_width}}  {'a':>2} {'a(-w)':>5} {'c':>3}  coefficient")
    for r in rows:
        print(f"{r['w']:<{w_width}}  {r['a']:>2} {r['a_neg']:>5} {r['c']:>3}  {r['coeff']}")
    print(f"total: {len(rows)}")
    return 0


def _cmd_sep(args) -> int:
    sets = enumerate_separated(args.k)
    sizes = sorted({len(s) for s in sets})
    counts = [
        {"size": i, "count": sum(1 for s in sets if len(s) == i), "formula": count_separated(args.k, i)}
        for i in sizes
    ]
    if args.json:
        _emit_json(
            {
                "k": args.k,
                "sets": [list(s.members) for s in sets],
                "counts": counts,
            }
        )
        return 0
    for s in sets:
        print(s)
    print("counts by size: " + ", ".join(f"{c['size']}: {c['count']} (formula {c['formula']})" for c in counts))
    return 0


def _cmd_mult(args) -> int:
    try:
        expr = parse_word(args.expr)
        element = evaluate_word(expr, args.rank)
    except (WordSyntaxError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        _emit_json({"rank": args.rank, "expr": str(expr), "element": element.to_json()})
    else:
        _print_element(element)
    return 0


def _cmd_verify(args) -> int:
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    reports = run_suite(suites, max_rank=args.max_rank)
    failed = [r for r in reports if not r.passed]
    if args.json:
        _emit_json([r.to_json() for r in reports])
    else:
        for r in reports:
            print(r)
        print(f"{len(reports) - len(failed)}/{len(reports)} checks passed")
    return 1 if failed else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heckeb",
        description="Exact T-basis computations in the Hecke algebras of type B.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("square-w0k", help="print T_{w_{0,k}}^2 in the T-basis")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_square_w0k)

    p = sub.add_parser("fk", help="print the polynomial f_k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=sorted(F_K_METHODS), default="direct")
    p.add_argument("--mod-cyclotomic", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_fk)

    p = sub.add_parser("good", help="tabulate good involutions with statistics")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_good)

    p = sub.add_parser("sep", help="tabulate separated k-sets")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_sep)

    p = sub.add_parser("mult", help="evaluate a word expression in the Hecke algebra")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--expr", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_mult)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--max-rank", type=int, default=6)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
