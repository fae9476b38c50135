"""Command-line front end.

Subcommands map one-to-one onto the library operations; all output is
deterministic (JSON keys sorted, polynomials in canonical order).  Exit
codes: 0 success, 1 mathematical assertion failed, 2 usage error, 3 budget
exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .classify import (
    ClassRecord,
    circulant_rank,
    classification_table,
    classify,
    cm_type_odd,
    fiber_dimension,
    hilbert_closed_form_n_minus_2,
    render_table,
    verify_hilbert,
)
from .groebner import Budget, BudgetExceeded, gb_certificate, is_groebner_basis
from .monomial_ideals import MonomialIdeal, is_squarefree, x_condition
from .orders import product_order
from .rees import (
    PathIdealSpec,
    family_half,
    family_n_minus_2,
    fiber_ideal,
    path_ideal,
    pfaffian_fiber_sign,
    rees_ideal,
    sym_relations,
)

EXIT_OK = 0
EXIT_ASSERTION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _default_budget() -> float:
    env = os.environ.get("CYCLE_REES_BUDGET_SECS")
    if env:
        try:
            value = float(env)
            if value > 0:
                return value
        except ValueError:
            pass
    return 60.0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycle-rees",
        description="Rees algebras of path ideals of cycles: classification and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, budget: bool = True) -> None:
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        if budget:
            p.add_argument("--budget-secs", type=float, default=None, help="per-computation budget (default 60 or $CYCLE_REES_BUDGET_SECS)")

    p = sub.add_parser("classify", help="classify one (n, t) cell")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--timings", action="store_true", help="include stage timings in JSON output")
    add_common(p)

    p = sub.add_parser("table", help="classification grid over a range of n")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--timings", action="store_true")
    add_common(p)

    p = sub.add_parser("fiber-dim", help="dimension of the fiber cone")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--check-rank", action="store_true", help="cross-check against the circulant rank")
    add_common(p, budget=False)

    p = sub.add_parser("hilbert", help="Hilbert series of the Rees algebra at t = n-2")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="recompute from the initial ideal and compare")
    add_common(p)

    p = sub.add_parser("cm-type", help="Cohen-Macaulay type of the Rees algebra, odd n")
    p.add_argument("--n", type=int, required=True)
    add_common(p)

    p = sub.add_parser("verify-gb", help="check a named family is a Groebner basis")
    p.add_argument("--family", choices=("n2", "half"), required=True)
    p.add_argument("--n", type=int, required=True)
    add_common(p)

    p = sub.add_parser("pfaffian", help="Pfaffian of the Jacobian dual relation matrix, even n")
    p.add_argument("--n", type=int, required=True)
    add_common(p, budget=False)

    p = sub.add_parser("ideal", help="print generators of a named ideal")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--which", choices=("path", "sym", "rees", "fiber", "family"), required=True)
    add_common(p)

    return parser


def _budget(args: argparse.Namespace) -> Budget:
    secs = getattr(args, "budget_secs", None)
    return Budget(seconds=secs if secs is not None else _default_budget())


def _emit_records(records: list[ClassRecord], fmt: str, timings: bool, out) -> None:
    if fmt == "text":
        out.write(render_table(records))
    elif fmt == "json":
        payload = [r.to_json(include_ms=timings) for r in records]
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "t", "class", "gcd", "fiber_dim"])
        for r in records:
            writer.writerow([r.n, r.t, r.klass, r.gcd, r.fiber_dim])
        out.write(buf.getvalue())


def _cmd_classify(args, out) -> int:
    secs = args.budget_secs if args.budget_secs is not None else _default_budget()
    record = classify(args.n, args.t, budget_secs=secs)
    if args.format == "text":
        out.write(record.klass + "\n")
    else:
        _emit_records([record], args.format, args.timings, out)
    return EXIT_BUDGET if record.klass == "timeout" else EXIT_OK


def _cmd_table(args, out) -> int:
    secs = args.budget_secs if args.budget_secs is not None else _default_budget()
    records = classification_table(args.n_min, args.n_max, budget_secs=secs, jobs=args.jobs)
    _emit_records(records, args.format, args.timings, out)
    return EXIT_BUDGET if any(r.klass == "timeout" for r in records) else EXIT_OK


def _cmd_fiber_dim(args, out) -> int:
    dim = fiber_dimension(args.n, args.t)
    if args.check_rank:
        rank = circulant_rank(args.n, args.t)
        ok = rank == dim
        if args.format == "json":
            out.write(json.dumps({"fiber_dim": dim, "rank": rank, "rank_check": ok}, sort_keys=True) + "\n")
        else:
            out.write(f"{dim} (rank check: {'ok' if ok else 'FAILED'})\n")
        return EXIT_OK if ok else EXIT_ASSERTION
    if args.format == "json":
        out.write(json.dumps({"fiber_dim": dim}, sort_keys=True) + "\n")
    else:
        out.write(f"{dim}\n")
    return EXIT_OK


def _cmd_hilbert(args, out) -> int:
    series = hilbert_closed_form_n_minus_2(args.n)
    verified = None
    if args.verify:
        verified = verify_hilbert(args.n, _budget(args))
    if args.format == "json":
        payload = series.to_json()
        if verified is not None:
            payload["verified"] = verified
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(str(series) + "\n")
        if verified is not None:
            out.write(f"initial-ideal recomputation: {'match' if verified else 'MISMATCH'}\n")
    if verified is False:
        return EXIT_ASSERTION
    return EXIT_OK


def _cmd_cm_type(args, out) -> int:
    value = cm_type_odd(args.n, _budget(args))
    if args.format == "json":
        out.write(json.dumps({"cm_type": value, "n": args.n}, sort_keys=True) + "\n")
    else:
        out.write(f"{value}\n")
    return EXIT_OK


def _cmd_verify_gb(args, out) -> int:
    fam = family_n_minus_2(args.n) if args.family == "n2" else family_half(args.n)
    polys = list(fam.values())
    order = product_order(polys[0].ring)
    ok, cert = is_groebner_basis(polys, order, _budget(args))
    ini = MonomialIdeal.from_exponents(
        polys[0].ring,
        [max(g.monomials(), key=order.key_function(polys[0].ring)) for g in polys],
    )
    squarefree = is_squarefree(ini)
    xcond = x_condition(ini)
    if args.format == "json":
        payload = {
            "family": args.family,
            "n": args.n,
            "groebner": ok,
            "squarefree_initial": squarefree,
            "x_condition": xcond,
            "certificate": gb_certificate(polys, order),
        }
        if cert is not None:
            payload["failure"] = {"pair": [cert[0], cert[1]], "remainder": cert[2].to_text()}
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(f"groebner basis: {'yes' if ok else 'NO'}\n")
        out.write(f"squarefree initial ideal: {'yes' if squarefree else 'NO'}\n")
        out.write(f"x-condition: {'yes' if xcond else 'NO'}\n")
        if cert is not None:
            out.write(f"offending pair {cert[0]},{cert[1]} with remainder {cert[2].to_text()}\n")
    return EXIT_OK if ok else EXIT_ASSERTION


def _cmd_pfaffian(args, out) -> int:
    sign, pf = pfaffian_fiber_sign(args.n)
    if args.format == "json":
        out.write(json.dumps({"n": args.n, "pfaffian": pf.to_text(), "sign_vs_fiber_relation": sign}, sort_keys=True) + "\n")
    else:
        out.write(f"Pf(A) = {pf.to_text()}\n")
        out.write(f"equals {'+' if sign > 0 else '-'}(fiber relation)\n")
    return EXIT_OK


def _cmd_ideal(args, out) -> int:
    spec = PathIdealSpec(args.n, args.t)
    budget = _budget(args)
    if args.which == "path":
        ideal = path_ideal(spec)
    elif args.which == "sym":
        ideal = sym_relations(spec)
    elif args.which == "rees":
        ideal = rees_ideal(spec, budget)
    elif args.which == "fiber":
        ideal = fiber_ideal(spec, budget)
    else:
        if args.t == args.n - 2:
            fam = family_n_minus_2(args.n)
        elif args.n % 2 == 0 and args.t == args.n // 2:
            fam = family_half(args.n)
        else:
            raise UsageError("--which family needs t = n-2 or t = n/2")
        if args.format == "json":
            out.write(json.dumps({name: p.to_text() for name, p in fam.items()}, sort_keys=True, indent=2) + "\n")
        else:
            for name, p in fam.items():
                out.write(f"{name} = {p.to_text()}\n")
        return EXIT_OK
    texts = [g.to_text() for g in ideal.generators]
    if args.format == "json":
        out.write(json.dumps({"generators": texts}, sort_keys=True, indent=2) + "\n")
    else:
        if not texts:
            out.write("0\n")
        for text in texts:
            out.write(text + "\n")
    return EXIT_OK


class UsageError(Exception):
    """Usage error discovered after argument parsing."""


_COMMANDS = {
    "classify": _cmd_classify,
    "table": _cmd_table,
    "fiber-dim": _cmd_fiber_dim,
    "hilbert": _cmd_hilbert,
    "cm-type": _cmd_cm_type,
    "verify-gb": _cmd_verify_gb,
    "pfaffian": _cmd_pfaffian,
    "ideal": _cmd_ideal,
}


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return _COMMANDS[args.command](args, out)
    except BudgetExceeded:
        out.write("budget exceeded\n")
        return EXIT_BUDGET
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
