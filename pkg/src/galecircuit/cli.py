"""Command-line front end.

Exit codes: 0 success, 1 negative verdict, 2 bad input, 3 internal limit.
JSON goes to stdout, diagnostics to stderr.
"""
import argparse
import json
import random
import sys
from fractions import Fraction

import mpmath

from . import jsonio
from .circuit import characterize, kouchnirenko_bound, realize_circuit
from .dessin import edge_counts, emit_graph
from .errors import (
    DegenerateSystem,
    DegreeCapExceeded,
    GaleCircuitError,
    InvalidProfile,
    NoDiagonalization,
    ResidualTooLarge,
    SmallTExhausted,
)
from .gale import SupportedSystem, count_positive_solutions, diagonalize, lift_solutions, system_residuals
from .viro import construct_system

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"cannot read {path}: {e}") from e


def _rat_list(text):
    try:
        return [Fraction(x.strip()) for x in text.split(",") if x.strip()]
    except ValueError as e:
        raise InputError(f"bad rational list {text!r}: {e}") from e


def _emit(obj, path=None):
    text = json.dumps(obj, indent=2)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _load_circuit(path):
    try:
        return jsonio.circuit_from_json(_load(path))
    except (ValueError, TypeError, KeyError, ZeroDivisionError) as e:
        raise InputError(str(e)) from e


def cmd_analyze(args):
    c = _load_circuit(args.circuit)
    v = characterize(c)
    out = {
        "circuit": jsonio.circuit_json(c),
        "relation": list(v.relation.coeffs),
        "sign_balanced": v.sign_balanced,
        "supports_max": v.supports_max,
        "failure_reason": v.failure_reason,
        "witness": None,
        "dessin": None,
        "kouchnirenko_bound": kouchnirenko_bound(c) if c.is_integral() else None,
    }
    if v.witness:
        w = v.witness
        out["witness"] = {
            "order": list(w.order),
            "signed_seq": list(w.signed_seq),
            "partial_sums": list(w.partial_sums),
            "sign": w.sign,
        }
        out["dessin"] = edge_counts(w.signed_seq).to_dict()
    _emit(out)
    if not v.supports_max:
        print(f"negative verdict: {v.failure_reason}", file=sys.stderr)
        return EXIT_NEGATIVE
    return EXIT_OK


def cmd_construct(args):
    c = _load_circuit(args.circuit)
    v = characterize(c)
    if not v.supports_max:
        print(f"circuit fails characterization: {v.failure_reason}", file=sys.stderr)
        return EXIT_NEGATIVE
    slopes = _rat_list(args.slopes) if args.slopes else None
    built = construct_system(c, v.witness, slopes=slopes, tau_budget=args.tau_budget, cap=args.degree_cap)
    # independent recount on the emitted system
    recount = count_positive_solutions(diagonalize(built.system), cap=args.degree_cap)
    if recount.count != c.dim + 1:
        print(f"re-verification failed: {recount.count} positive solutions", file=sys.stderr)
        return EXIT_LIMIT
    system = jsonio.system_json(built.system)
    cert = jsonio.certificate_json(built.certificate)
    cert["witness_order"] = list(v.witness.order)
    if args.system_out:
        _emit(system, args.system_out)
    if args.certificate_out:
        _emit(cert, args.certificate_out)
    _emit({"system": system, "certificate": cert, "count": recount.count})
    return EXIT_OK


def _perturb(s, rng):
    """Multiply each coefficient by ``1 + k/10^6`` with ``k`` uniform in [-1000, 1000]."""
    rows = [[c * (1 + Fraction(rng.randint(-1000, 1000), 10**6)) for c in row] for row in s.coefficients]
    return SupportedSystem(s.dim, s.support, rows)


def cmd_count(args):
    try:
        s = jsonio.system_from_json(_load(args.system))
    except (ValueError, TypeError, KeyError, ZeroDivisionError) as e:
        raise InputError(str(e)) from e
    if len(s.support) != s.dim + 2:
        raise InputError(f"support must have n+2 = {s.dim + 2} points")
    eps = Fraction(args.eps)
    perturbed = False
    try:
        d = diagonalize(s)
    except NoDiagonalization:
        if not args.perturb:
            raise
        rng = random.Random(args.seed)
        for _ in range(32):
            s = _perturb(s, rng)
            try:
                d = diagonalize(s)
                break
            except NoDiagonalization:
                continue
        else:
            raise
        perturbed = True
    gc = count_positive_solutions(d, cap=args.degree_cap)
    sols = lift_solutions(d, gc.intervals, eps, gale=gc.gale)
    digits = args.digits
    out = {
        "count": gc.count,
        "squarefree": gc.squarefree,
        "perturbed": perturbed,
        "diagonal": {
            "retained": [i + 1 for i in d.labels[0]],
            "distinguished": d.labels[1] + 1,
            "origin": d.labels[2] + 1,
            "linear_parts": [[jsonio.rat_str(a), jsonio.rat_str(b)] for a, b in d.linear_parts],
        },
        "gale_coefficients": jsonio.poly_json(gc.gale),
        "positivity_domain": None if gc.domain is None else jsonio.interval_json(gc.domain),
        "intervals": [jsonio.interval_json(iv) for iv in gc.intervals],
        "precision_digits": digits,
        "solutions": [],
    }
    for sol in sols:
        with mpmath.workdps(sol.precision):
            res = system_residuals(s, sol.z)
            out["solutions"].append({
                "y": mpmath.nstr(mpmath.mpf(sol.y.numerator) / sol.y.denominator, digits),
                "y_interval": jsonio.interval_json(sol.interval),
                "z": [mpmath.nstr(x, digits) for x in sol.z],
                "diagonal_residuals": [f"{r:.3e}" for r in sol.residuals],
                "system_residuals": [f"{r:.3e}" for r in res],
            })
    if perturbed:
        out["system"] = jsonio.system_json(s)
    _emit(out)
    return EXIT_OK


def cmd_dessin(args):
    if args.relation:
        lam = _rat_list(args.relation)
    elif args.circuit:
        v = characterize(_load_circuit(args.circuit))
        if not v.supports_max:
            print(f"no valid profile: {v.failure_reason}", file=sys.stderr)
            return EXIT_NEGATIVE
        lam = v.witness.signed_seq
    else:
        raise InputError("give a circuit file or --relation")
    try:
        profile = edge_counts(lam)
    except InvalidProfile as e:
        print(f"invalid profile: {e}", file=sys.stderr)
        return EXIT_NEGATIVE
    sys.stdout.write(emit_graph(profile, args.format))
    if args.format == "json":
        sys.stdout.write("\n")
    return EXIT_OK


def cmd_realize(args):
    lam = _rat_list(args.relation)
    c = realize_circuit(lam, args.dim)
    _emit(jsonio.circuit_json(c), args.output)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="galecircuit",
        description="Maximally positive circuits: decide, construct and count positive solutions.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--degree-cap", type=int, default=None,
                        help="max polynomial degree (default: $GALECIRCUIT_DEGREE_CAP or 20000)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="characterize a circuit")
    p.add_argument("circuit")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", parents=[common], help="build a system with n+1 positive solutions")
    p.add_argument("circuit")
    p.add_argument("--slopes", help='comma-separated strictly increasing slopes, e.g. "0,1,2"')
    p.add_argument("--tau-budget", type=int, default=64)
    p.add_argument("--system-out")
    p.add_argument("--certificate-out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("count", parents=[common], help="count and lift positive solutions of a system")
    p.add_argument("system")
    p.add_argument("--eps", default="1/1000000000")
    p.add_argument("--perturb", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--digits", type=int, default=20)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("dessin", parents=[common], help="edge counts and layout of the real dessin")
    p.add_argument("circuit", nargs="?")
    p.add_argument("--relation")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(func=cmd_dessin)

    p = sub.add_parser("realize", parents=[common], help="standard circuit with a given relation")
    p.add_argument("--relation", required=True)
    p.add_argument("--dim", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_realize)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DegreeCapExceeded, SmallTExhausted, ResidualTooLarge) as e:
        print(f"internal limit: {e}", file=sys.stderr)
        return EXIT_LIMIT
    except (InputError, GaleCircuitError, DegenerateSystem, ValueError) as e:
        print(f"input error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
