"""Command-line interface.

Every command reads JSON and writes canonical JSON. Exit codes: 0 on
success, 1 on domain errors, 2 on parse or I/O errors, and 3 from
``unique --status-exit`` when the quotient basis is not unique.
"""

import argparse
import json
import sys

from . import serialize as ser
from .cartesian import build_cartesian, failing_axis, is_cartesian, slices, xi_family
from .errors import QBasisError, SchemaError
from .ideals import corner
from .moeller import escalier, normal_form
from .orders import named_order
from .uniqueness import enumerate_quotient_bases, unique_quotient_basis


class InputError(Exception):
    """Unreadable or malformed input (exit status 2)."""


def _load(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc)) from None
    except json.JSONDecodeError as exc:
        raise InputError("invalid JSON in %s: %s" % (path, exc)) from None


def cmd_escalier(args):
    theta = ser.functional_set_from_json(_load(args.input))
    return ser.escalier_to_json(escalier(theta, named_order(args.order, theta.dimension)))


def cmd_gbasis(args):
    theta = ser.functional_set_from_json(_load(args.input))
    result = escalier(theta, named_order(args.order, theta.dimension))
    return {"order": result.order.name, "groebner": [ser.polynomial_to_json(g) for g in result.groebner]}


def cmd_unique(args):
    theta = ser.functional_set_from_json(_load(args.input))
    verdict = unique_quotient_basis(theta)
    status = 0 if verdict.unique or not args.status_exit else 3
    return ser.verdict_to_json(verdict), status


def cmd_cartesian(args):
    Xi = ser.pointset_from_json(_load(args.input))
    desc = is_cartesian(Xi)
    if desc is None:
        return {"cartesian": False, "failing_axis": failing_axis(Xi)}
    return {"cartesian": True, "description": ser.description_to_json(desc)}


def cmd_slices(args):
    Xi = ser.pointset_from_json(_load(args.input))
    axes = [args.axis] if args.axis else range(1, Xi.dimension + 1)
    return {"families": [ser.slice_family_to_json(slices(Xi, a)) for a in axes]}


def cmd_make_cartesian(args):
    desc = ser.description_from_json(_load(args.input))
    return ser.pointset_to_json(build_cartesian(desc))


def cmd_enumerate_bases(args):
    theta = ser.functional_set_from_json(_load(args.input))
    bases = enumerate_quotient_bases(theta, max_results=args.max_results)
    return {"count": len(bases), "bases": [ser.exponents_to_json(O.exponents) for O in bases]}


def cmd_corners(args):
    O = ser.order_ideal_from_json(_load(args.input))
    return {"dimension": O.dimension, "corners": ser.exponents_to_json(corner(O))}


def cmd_normal_form(args):
    theta = ser.functional_set_from_json(_load(args.input))
    f = ser.polynomial_from_json(_load(args.poly), theta.dimension)
    result = escalier(theta, named_order(args.order, theta.dimension))
    return {"order": result.order.name, "normal_form": ser.polynomial_to_json(normal_form(result, f))}


def cmd_xi_family(args):
    return ser.pointset_to_json(xi_family(args.dim))


def build_parser():
    parser = argparse.ArgumentParser(prog="qbasis", description="Quotient bases of zero-dimensional ideals.")
    parser.add_argument("--pretty", action="store_true", help="indented output")
    parser.add_argument("--output", "-o", default="-", help="output file (default stdout)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, order=False, input=True):
        p = sub.add_parser(name, help=help)
        if input:
            p.add_argument("--input", "-i", required=True, help="input JSON file, or - for stdin")
        if order:
            p.add_argument("--order", default="grevlex", help="lex:P, grlex:P, grevlex, elim:i or matrix:[[...]] (default grevlex)")
        p.set_defaults(func=func)
        return p

    add("escalier", cmd_escalier, "éscalier, corners and reduced Gröbner basis", order=True)
    add("gbasis", cmd_gbasis, "reduced Gröbner basis only", order=True)
    p = add("unique", cmd_unique, "decide uniqueness of the quotient basis")
    p.add_argument("--status-exit", action="store_true", help="exit 3 when not unique")
    add("cartesian", cmd_cartesian, "recognize a Cartesian point set")
    p = add("slices", cmd_slices, "hyperplane slices of a point set")
    p.add_argument("--axis", type=int, default=None, help="axis 1..d (default: all)")
    add("make-cartesian", cmd_make_cartesian, "build a point set from a Cartesian description")
    p = add("enumerate-bases", cmd_enumerate_bases, "all monomial order quotient bases (small inputs)")
    p.add_argument("--max-results", type=int, default=None)
    add("corners", cmd_corners, "corner set of an order ideal")
    p = add("normal-form", cmd_normal_form, "normal form of a polynomial", order=True)
    p.add_argument("--poly", required=True, help="polynomial JSON file")
    p = add("xi-family", cmd_xi_family, "the non-Cartesian four-point family", input=False)
    p.add_argument("--dim", type=int, required=True)
    return parser


def _emit(text, path):
    if path == "-":
        sys.stdout.write(text + "\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    status = 0
    try:
        out = args.func(args)
        if isinstance(out, tuple):
            out, status = out
    except (InputError, SchemaError) as exc:
        _emit(ser.dumps({"error": "parse_error", "detail": str(exc)}, args.pretty), "-")
        return 2
    except QBasisError as exc:
        _emit(ser.dumps({"error": exc.code, "detail": str(exc)}, args.pretty), "-")
        return 1
    try:
        _emit(ser.dumps(out, args.pretty), args.output)
    except OSError as exc:
        _emit(ser.dumps({"error": "io_error", "detail": str(exc)}), "-")
        return 2
    return status


if __name__ == "__main__":
    sys.exit(main())
