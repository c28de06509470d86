"""Command line front end.

Calculator subcommands (normalize, rho, boxplus, k0, linebundle) print a
single result; verification subcommands (groupoid-verify, oracle-verify,
verify-all) print one record per check and exit with status 2 if any
check fails.  Status 1 means the invocation itself was invalid.

Expressions use the grammar ``P[j,k] (+) P[j,k] (+) ...`` over an
ambient index given by --n; whitespace is insignificant.  With
--format json, calculators print one JSON document and verifiers print
newline-delimited JSON, one record per check.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import groupoid, k_theory, line_bundles, suite
from .errors import QprojError
from .projections import normalize_expression, rho

__all__ = ["main", "build_parser"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; reserve 2 for failed checks
    def error(self, message):
        raise _UsageError(message)


def _add_format(sp):
    sp.add_argument("--format", choices=("json", "table"), default="table",
                    help="output style (default: table)")


def _add_expr(sp):
    sp.add_argument("expr", help="expression like 'P[1,2] (+) P[0,3]'")
    sp.add_argument("--n", type=int, required=True, help="ambient index")


def build_parser():
    parser = _Parser(prog="qproj",
                     description="projection-class and line-bundle calculators "
                                 "with exhaustive verification")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    sp = sub.add_parser("normalize", help="fold an expression to normal form")
    _add_expr(sp)
    _add_format(sp)
    sp.set_defaults(func=_cmd_normalize)

    sp = sub.add_parser("rho", help="counting vector of an expression")
    _add_expr(sp)
    _add_format(sp)
    sp.set_defaults(func=_cmd_rho)

    sp = sub.add_parser("boxplus", help="diagonal sum of two expressions")
    sp.add_argument("left", help="expression like 'P[1,2]'")
    sp.add_argument("right", help="expression like 'P[2,5]'")
    sp.add_argument("--n", type=int, required=True, help="ambient index")
    _add_format(sp)
    sp.set_defaults(func=_cmd_boxplus)

    sp = sub.add_parser("k0", help="K-group computations in the level basis")
    sp.add_argument("expr", nargs="?", default=None,
                    help="sphere expression; prints its free rank")
    sp.add_argument("--n", type=int, required=True, help="ambient index")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--bundle", type=int, metavar="K",
                      help="class of the degree-K line bundle")
    mode.add_argument("--generator", type=int, metavar="J",
                      help="level-basis generator e_J")
    mode.add_argument("--iota", type=int, metavar="M",
                      help="image of M under the inclusion of the top level")
    mode.add_argument("--nu", metavar="COORDS",
                      help="restrict a comma-separated vector one level down")
    mode.add_argument("--exactness", action="store_true",
                      help="check exactness of the inclusion-restriction pair")
    _add_format(sp)
    sp.set_defaults(func=_cmd_k0)

    sp = sub.add_parser("linebundle",
                        help="decompose a line bundle into sphere classes")
    sp.add_argument("--n", type=int, required=True, help="ambient index")
    sp.add_argument("--k", type=int, required=True, help="bundle degree")
    _add_format(sp)
    sp.set_defaults(func=_cmd_linebundle)

    sp = sub.add_parser("groupoid-verify",
                        help="windowed partition and bijection checks")
    sp.add_argument("--n", type=int, required=True, help="ambient index")
    sp.add_argument("--map", dest="map_id", default="all",
                    choices=("all", "partition") + groupoid.MAP_IDS,
                    help="which check to run (default: all)")
    sp.add_argument("--k", type=int, default=None, help="degree parameter")
    sp.add_argument("--j", type=int, default=None, help="coordinate index")
    sp.add_argument("--l", type=int, default=None, help="shortfall / level")
    sp.add_argument("--window", type=int, default=8,
                    help="finite window half-width (default: 8)")
    _add_format(sp)
    sp.set_defaults(func=_cmd_groupoid_verify)

    sp = sub.add_parser("oracle-verify",
                        help="numeric counting vectors vs symbolic ones")
    sp.add_argument("--n-max", type=int, default=3)
    sp.add_argument("--k-max", type=int, default=6)
    _add_format(sp)
    sp.set_defaults(func=_cmd_oracle_verify)

    sp = sub.add_parser("verify-all", help="run every check family")
    sp.add_argument("--seed", type=int, default=suite.DEFAULT_SEED,
                    help=f"seed for randomized checks (default: "
                         f"{suite.DEFAULT_SEED})")
    sp.add_argument("--jobs", type=int, default=None,
                    help="worker processes (default: cpu count, capped by "
                         "QPROJ_JOBS)")
    _add_format(sp)
    sp.set_defaults(func=_cmd_verify_all)

    return parser


def _print_result(args, payload, table_text):
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(table_text)


def _cmd_normalize(args):
    p = normalize_expression(args.expr, args.n)
    _print_result(args, p.to_json(), str(p))
    return 0


def _cmd_rho(args):
    vec = rho(normalize_expression(args.expr, args.n))
    table = "[" + ", ".join(str(e) for e in vec) + "]"
    _print_result(args, vec.to_json(), table)
    return 0


def _cmd_boxplus(args):
    from .projections import boxplus
    p = boxplus(normalize_expression(args.left, args.n),
                normalize_expression(args.right, args.n))
    _print_result(args, p.to_json(), str(p))
    return 0


def _vector_table(v):
    return "[" + ", ".join(str(c) for c in v.coords) + "]"


def _cmd_k0(args):
    modes = [args.bundle is not None, args.generator is not None,
             args.iota is not None, args.nu is not None, args.exactness,
             args.expr is not None]
    if sum(modes) != 1:
        raise _UsageError("k0 needs exactly one of: EXPR, --bundle, "
                          "--generator, --iota, --nu, --exactness")
    if args.expr is not None:
        from .projections import k0_sphere_class
        r = k0_sphere_class(normalize_expression(args.expr, args.n))
        _print_result(args, {"rank": r}, str(r))
        return 0
    if args.bundle is not None:
        v = line_bundles.k0_class(args.n, args.bundle)
    elif args.generator is not None:
        v = k_theory.generator(args.n, args.generator)
    elif args.iota is not None:
        v = k_theory.iota_star(args.n, args.iota)
    elif args.nu is not None:
        try:
            coords = tuple(int(c) for c in args.nu.split(","))
        except ValueError as exc:
            raise _UsageError(f"--nu expects comma-separated integers: {exc}")
        v = k_theory.nu_star(k_theory.K0Vector(args.n, coords))
    else:
        report = k_theory.check_exactness(args.n)
        _print_result(args, report.to_json(), report.line())
        return 0 if report.passed else 2
    _print_result(args, v.to_json(), _vector_table(v))
    return 0


def _cmd_linebundle(args):
    dec = line_bundles.closed_form(args.n, args.k)
    if dec.kind == "corner":
        table = (f"degree {args.k} over n={args.n}: corner projection at "
                 f"depth {dec.m}")
    else:
        terms = " (+) ".join(
            f"{mult} x P[{j},1]" for j, mult in enumerate(dec.mult) if mult
        )
        table = (f"degree {args.k} over n={args.n}: {dec.total_classes()} "
                 f"classes, {terms}")
    _print_result(args, dec.to_json(), table)
    return 0


def _emit_reports(args, reports):
    for r in reports:
        if args.format == "json":
            print(json.dumps(r.to_json()))
        else:
            print(r.line())
    return 0 if all(r.passed for r in reports) else 2


def _cmd_groupoid_verify(args):
    if args.window < 1:
        raise _UsageError("--window must be >= 1")
    if args.map_id == "all":
        reports = suite.groupoid_checks(n_max=args.n, window=args.window)
    elif args.map_id == "partition":
        if args.k is None or args.j is None:
            raise _UsageError("--map partition needs --k and --j")
        reports = [groupoid.verify_partition(args.n, args.k, args.j,
                                             args.window)]
    else:
        reports = [groupoid.verify_bijection(args.map_id, args.n, k=args.k,
                                             j=args.j, l=args.l,
                                             window=args.window)]
    return _emit_reports(args, reports)


def _cmd_oracle_verify(args):
    reports = suite.oracle_agreement_checks(n_max=args.n_max, k_max=args.k_max)
    return _emit_reports(args, reports)


def _cmd_verify_all(args):
    reports = suite.run_all(seed=args.seed, jobs=args.jobs)
    status = _emit_reports(args, reports)
    passed = sum(r.passed for r in reports)
    print(f"{passed}/{len(reports)} checks passed", file=sys.stderr)
    return status


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except QprojError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
