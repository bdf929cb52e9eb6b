"""Command-line interface.

Exit codes: 0 success, 2 parse error, 3 verification failure, 4 data-file error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog, infinitesimal, invariants, linalg, verify
from .expression import (DocumentError, ExpressionSyntaxError, dumps_document, format_trivector,
                         loads_document, parse_trivector)
from .invariants import (char_poly, i1_appendix, i1_structural, i2_appendix, i2_permutation,
                         i2_structural, l_endo)
from .scalar import format_rational as fr
from .termlist import TermListError

EXIT_OK, EXIT_PARSE, EXIT_VERIFY, EXIT_DATA = 0, 2, 3, 4


class UsageError(Exception):
    pass


def _params(pairs) -> dict[str, str]:
    out = {}
    for item in pairs or []:
        if "=" not in item:
            raise UsageError(f"--param expects k=v, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("expression", nargs="?", help="trivector expression, e.g. 'e1^e2^e3 + 2*f1^f2^f3'")
    p.add_argument("--doc", metavar="FILE", help="JSON trivector document ('-' for stdin)")
    p.add_argument("--form", metavar="NAME", help="catalog normal form")
    p.add_argument("--param", action="append", metavar="K=V", help="normal-form parameter")


def _read_input(args):
    sources = [s for s in (args.expression, args.doc, args.form) if s is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one input: an expression, --doc or --form")
    if args.expression is not None:
        return parse_trivector(args.expression)
    if args.doc is not None:
        text = sys.stdin.read() if args.doc == "-" else Path(args.doc).read_text()
        return loads_document(text)
    return catalog.build(args.form, _params(args.param))


def cmd_invariants(args) -> int:
    theta = _read_input(args)
    cp = char_poly(l_endo(theta))
    i1, i2 = i1_structural(theta), i2_structural(theta)
    i1_ok = i1 == i1_appendix(theta)
    i2_ok = i2 == i2_permutation(theta) == i2_appendix(theta)
    if args.json:
        print(json.dumps({"I1": fr(i1), "I2": fr(i2), "c4": fr(cp[4]), "c2": fr(cp[2]),
                          "routes": {"I1": i1_ok, "I2": i2_ok}}, indent=2))
    else:
        print(f"I1 = {fr(i1)}")
        print(f"I2 = {fr(i2)}")
        print(f"c4 = {fr(cp[4])}")
        print(f"c2 = {fr(cp[2])}")
        print(f"routes I1 structural/appendix: {'agree' if i1_ok else 'DISAGREE'}")
        print(f"routes I2 structural/permutation/appendix: {'agree' if i2_ok else 'DISAGREE'}")
    return EXIT_OK if i1_ok and i2_ok else EXIT_VERIFY


def cmd_char_poly(args) -> int:
    cp = char_poly(l_endo(_read_input(args)))
    print(f"x^{cp.degree}: 1")
    for k in range(cp.degree - 1, -1, -1):
        print(f"x^{k}: {fr(cp[k])}")
    return EXIT_OK


def cmd_normal_form(args) -> int:
    params = _params(args.param)
    theta = catalog.build(args.name, params)
    show_invariants = args.invariants or not args.emit
    if args.emit:
        print(format_trivector(theta))
        print(dumps_document(theta))
    if show_invariants:
        entry = catalog.evaluate_form(args.name, params)
        print(f"I1 = {fr(entry.computed[0])}")
        print(f"I2 = {fr(entry.computed[1])}")
        print(f"table I1 = {fr(entry.expected[0])}, I2 = {fr(entry.expected[1])}: "
              f"{'match' if entry.ok else 'MISMATCH'}")
        if not entry.ok:
            return EXIT_VERIFY
    return EXIT_OK


def _finish(reports, as_json: bool) -> int:
    if as_json:
        print(json.dumps([{"name": r.name, "trials": r.trials, "ok": r.ok, "failures": r.failures}
                          for r in reports], indent=2))
    else:
        for r in reports:
            for f in r.failures:
                print(f"  {f}")
            print(r.summary())
    return EXIT_OK if all(r.ok for r in reports) else EXIT_VERIFY


def cmd_verify_invariance(args) -> int:
    reports = [verify.invariance_sweep(args.seed, args.trials)]
    if args.equivariance:
        reports.append(verify.equivariance_sweep(args.seed, args.trials))
    return _finish(reports, args.json)


def cmd_verify_infinitesimal(args) -> int:
    points = infinitesimal.random_points(args.seed, args.points)
    reports = []
    for name in ("i1", "i2"):
        rep = infinitesimal.infinitesimal_check(invariants.bundled_term_list(name), points)
        sweep = verify.SweepReport(f"infinitesimal {name.upper()}", rep.checked,
                                   [f"{f} at point {k}: {fr(v)}" for f, k, v in rep.failures])
        reports.append(sweep)
    return _finish(reports, args.json)


def cmd_rank(args) -> int:
    points = infinitesimal.random_points(args.seed, args.points)
    fields = infinitesimal.z_fields()
    ranks = [linalg.rank(infinitesimal.field_matrix(p, fields)) for p in points]
    best = max(ranks)
    if args.json:
        print(json.dumps({"rank": best, "ranks": ranks}))
    else:
        print(f"generic rank over {len(points)} points: {best}")
    return EXIT_OK if best == 18 and all(r <= 18 for r in ranks) else EXIT_VERIFY


def cmd_tables(args) -> int:
    report = catalog.reproduce_tables(args.samples, args.seed)
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        for line in report.lines():
            if args.verbose or not line.startswith("PASS"):
                print(line)
        print(f"{'PASS' if report.ok else 'FAIL'} tables: {len(report.entries)} rows, "
              f"{len(report.failures())} mismatches")
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_audit_appendix(args) -> int:
    ok = True
    for name in ("i1", "i2"):
        rep = invariants.audit_appendix(name)
        print(f"{name.upper()}: {len(rep.discrepancies)} printed monomial(s) differ from the structural polynomial")
        for c in rep.discrepancies:
            mono = " ".join(f"y{v}" for v in c.monomial)
            print(f"  {mono}: printed {fr(c.printed)}, structural {fr(c.structural)}")
        print(f"  corrections sidecar {'matches' if rep.sidecar_matches else 'DOES NOT MATCH'} the audit")
        ok &= rep.sidecar_matches
    sweep = verify.route_sweep(args.seed, args.trials)
    for f in sweep.failures:
        print(f"  {f}")
    print(sweep.summary())
    z = infinitesimal.z_field_discrepancies()
    print(f"printed Z fields: {len(z)} coefficient(s) differ from the derivation formula")
    for d in z:
        print(f"  {d.field}: y{d.y} Y{d.big_y} printed {fr(d.printed)}, computed {fr(d.computed)}")
    return EXIT_OK if ok and sweep.ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trivinv", description="Symplectic invariants of trivectors in dimension 6")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="I1, I2, c4, c2 and route cross-check")
    _add_input(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("char-poly", help="coefficients of det(xI - L)")
    _add_input(p)
    p.set_defaults(func=cmd_char_poly)

    p = sub.add_parser("normal-form", help="build or evaluate a catalog normal form")
    p.add_argument("name")
    p.add_argument("--param", action="append", metavar="K=V")
    p.add_argument("--emit", action="store_true", help="print the trivector")
    p.add_argument("--invariants", action="store_true", help="print computed and tabulated invariants")
    p.set_defaults(func=cmd_normal_form)

    p = sub.add_parser("verify-invariance", help="random (theta, A) invariance sweep")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--equivariance", action="store_true", help="also check J, v, L equivariance")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_invariance)

    p = sub.add_parser("verify-infinitesimal", help="all 21 fields annihilate I1 and I2")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--points", type=int, default=50)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_infinitesimal)

    p = sub.add_parser("rank", help="generic rank of the induced fields")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--points", type=int, default=20)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("tables", help="reproduce the normal-form invariant tables")
    p.add_argument("--samples", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.add_argument("-v", "--verbose", action="store_true", help="print passing rows too")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("audit-appendix", help="compare explicit term lists with the structural route")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_audit_appendix)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ExpressionSyntaxError, DocumentError, UsageError, catalog.CatalogError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (TermListError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
