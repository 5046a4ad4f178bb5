"""Command-line front end.

Verbs:

    eval      multiply a sequence of elements and print the normalized product
    classify  print the forced-isolation verdict of an element
    nbhd      print an enumerated prefix of a basic neighborhood
    verify    run the full continuity sweep and print/persist the report
    oracle    cross-check a product against the order-isomorphism composition

Ordinals are written in ASCII with "w" for the first infinite ordinal, e.g.
"w^w*2 + w^3 + 5".  Exit status: 0 on success, 1 when a refutation or
mismatch was found, 2 on usage or parse errors.
"""

import argparse
import json
import sys

from .bicyclic import ContextMismatchError, Monoid, fmt_element, multiply, parse_element
from .checker import (
    DEFAULT_BOUND,
    DEFAULT_J_MAX,
    STATUS_REFUTED,
    report_dict,
    report_line,
    sweep,
)
from .ordinal import ONE, OrdinalSyntaxError, parse
from .orderiso import compose, represent, unrepresent
from .topology import classify_forced_isolated, enumerate_prefix, parse_neighborhood

USAGE_ERROR = 2


def _monoid(text):
    alpha = parse(text)
    if not alpha >= ONE:
        raise ValueError("--alpha must be an ordinal >= 1")
    return Monoid(alpha)


def _cmd_eval(args):
    monoid = _monoid(args.alpha)
    elements = [parse_element(text, monoid) for text in args.elements]
    product = elements[0]
    for el in elements[1:]:
        product = multiply(product, el)
    print(fmt_element(product))
    return 0


def _cmd_classify(args):
    monoid = _monoid(args.alpha)
    print(classify_forced_isolated(parse_element(args.element, monoid)))
    return 0


def _cmd_nbhd(args):
    u = parse_neighborhood(args.neighborhood)
    for el in enumerate_prefix(u, args.count):
        print(fmt_element(el))
    return 0


def _cmd_verify(args):
    reports = sweep(k_max=args.k_max, param_max=args.param_max, bound=args.bound, j_max=args.jmax)
    lines = [report_line(r) for r in reports]
    for line in lines:
        print(line)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            if args.out.endswith(".json"):
                json.dump([report_dict(r) for r in reports], handle, indent=2)
                handle.write("\n")
            else:
                handle.write("\n".join(lines) + "\n")
    return 1 if any(r.status == STATUS_REFUTED for r in reports) else 0


def _cmd_oracle(args):
    monoid = _monoid(args.alpha)
    x = parse_element(args.x, monoid)
    y = parse_element(args.y, monoid)
    direct = multiply(x, y)
    composed = unrepresent(compose(represent(x), represent(y)))
    print(f"multiply: {fmt_element(direct)}")
    print(f"compose:  {fmt_element(composed)}")
    if direct == composed:
        print("agree")
        return 0
    print("MISMATCH")
    return 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="alphabicyclic",
        description="Exact ordinal bicyclic monoid calculator and topology verifier.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p_eval = sub.add_parser("eval", help="multiply elements, print the normalized product")
    p_eval.add_argument("elements", nargs="+", metavar="ELEMENT")
    p_eval.add_argument("--alpha", default="w + 1", help="monoid parameter (default: w + 1)")
    p_eval.set_defaults(run=_cmd_eval)

    p_classify = sub.add_parser("classify", help="forced-isolation verdict of an element")
    p_classify.add_argument("element", metavar="ELEMENT")
    p_classify.add_argument("--alpha", default="w + 1", help="monoid parameter (default: w + 1)")
    p_classify.set_defaults(run=_cmd_classify)

    p_nbhd = sub.add_parser("nbhd", help="enumerate a basic neighborhood prefix")
    p_nbhd.add_argument("neighborhood", metavar="NBHD", help='e.g. "U[2]((w^w, w^w*3))"')
    p_nbhd.add_argument("--count", type=int, default=10, help="prefix length (default: 10)")
    p_nbhd.set_defaults(run=_cmd_nbhd)

    p_verify = sub.add_parser("verify", help="run the full continuity sweep")
    p_verify.add_argument("--k-max", type=int, default=6, dest="k_max")
    p_verify.add_argument("--param-max", type=int, default=4, dest="param_max")
    p_verify.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p_verify.add_argument("--jmax", type=int, default=DEFAULT_J_MAX)
    p_verify.add_argument("--out", default=None, help="write the report here (.json for JSON)")
    p_verify.set_defaults(run=_cmd_verify)

    p_oracle = sub.add_parser("oracle", help="cross-check multiplication against composition")
    p_oracle.add_argument("x", metavar="ELEMENT")
    p_oracle.add_argument("y", metavar="ELEMENT")
    p_oracle.add_argument("--alpha", default="w + 1", help="monoid parameter (default: w + 1)")
    p_oracle.set_defaults(run=_cmd_oracle)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except (OrdinalSyntaxError, ContextMismatchError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
