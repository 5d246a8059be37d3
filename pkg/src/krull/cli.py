"""Command-line front end.

Exit status is 0 on success, 1 on a domain error (bad element, reducible
modulus, capacity exceeded, ...) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import KrullError
from .ideals import classify, krull_dim, member, parse_ideal
from .lab import jacobson_witness, verify_theorem
from .poly import parse_poly, pseudo_divide
from .rings import RingDescriptor, first_irreducibles


def _ring(text: str) -> RingDescriptor:
    try:
        return RingDescriptor.parse(text)
    except KrullError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", type=_ring, required=True,
                        help="ZZ, QQ, ZZ[i], GF(p)[t] or Zloc(p)")
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="krull", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("irreducibles", parents=[common], help="first N canonical irreducibles")
    p.add_argument("--count", type=_positive, required=True)

    p = sub.add_parser("pseudo-div", parents=[common], help="a*f = g*q + r")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)

    p = sub.add_parser("classify", parents=[common], help="primality, maximality and height")
    p.add_argument("--ideal", required=True)

    p = sub.add_parser("member", parents=[common], help="ideal membership")
    p.add_argument("--ideal", required=True)
    p.add_argument("--poly", required=True)

    p = sub.add_parser("jacobson", parents=[common], help="maximal ideal avoiding a nonzero poly")
    p.add_argument("--poly", required=True)

    p = sub.add_parser("verify", parents=[common], help="test-scale verification report")
    p.add_argument("--budget", type=int, default=50)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)

    sub.add_parser("dim", parents=[common], help="Krull dimension of A[x]")
    return parser


def _execute(args) -> tuple[str, object]:
    R = args.ring
    if args.command == "irreducibles":
        found = first_irreducibles(R, args.count)
        return ", ".join(map(str, found)), {"ring": str(R), "irreducibles": [str(e) for e in found]}
    if args.command == "pseudo-div":
        d = pseudo_divide(parse_poly(R, args.f), parse_poly(R, args.g))
        return f"a={d.a} q={d.q} r={d.r}", {"a": str(d.a), "q": str(d.q), "r": str(d.r)}
    if args.command == "classify":
        M = parse_ideal(R, args.ideal)
        c = classify(M)
        return str(c), {"ideal": str(M), "status": c.status.value, "height": c.height,
                        "chain": [str(I) for I in c.chain], "reason": c.reason}
    if args.command == "member":
        result = member(parse_ideal(R, args.ideal), parse_poly(R, args.poly))
        return str(result).lower(), result
    if args.command == "jacobson":
        M = jacobson_witness(R, parse_poly(R, args.poly))
        return str(M), {"ideal": str(M)}
    if args.command == "verify":
        report = verify_theorem(R, args.budget, args.samples, args.trials, args.seed)
        return report.to_text(), report.to_json_dict()
    if args.command == "dim":
        n = krull_dim(R)
        return str(n), n
    raise AssertionError(args.command)


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, data = _execute(args)
    except KrullError as e:
        print(f"krull {args.command}: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(data, indent=2, ensure_ascii=False))
    else:
        print(text)
    return 0


def main() -> None:
    sys.exit(run())
