"""Command line entry point: ``hurwitz-relation <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 point-location depth exhausted.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from typing import List, Optional

from . import cosets, verify
from .class_numbers import hurwitz_class_number
from .rationals import format_rational, parse_rational
from .svg import DEFAULT_VIEWPORT, svg_render
from .tessellation import DepthExceeded, RatPoint, default_max_depth, label_strings, locate

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_DEPTH = 0, 1, 2, 3

# lets "-1/2" and "-1,1,0,2" through as values instead of unknown options
_NEGATIVE_RATIONAL = re.compile(r"^-\d+(/\d+)?(,[+-]?\d+(/\d+)?)*$")


class UsageError(Exception):
    pass


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _viewport(text: str):
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("viewport is xmin,xmax,ymin,ymax")
    return tuple(_rational(p) for p in parts)


def _emit_json(obj) -> None:
    print(json.dumps(obj))


def cmd_class_number(args) -> int:
    try:
        value = hurwitz_class_number(args.D)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(format_rational(value))
    return EXIT_OK


def cmd_relation(args) -> int:
    if args.n < 1:
        raise UsageError("n must be >= 1")
    record = cosets.relation_record(args.n, eq0=args.eq0)
    _emit_json(record)
    return EXIT_OK if record["ok"] else EXIT_FAILED


def cmd_cosets(args) -> int:
    if args.n < 1:
        raise UsageError("n must be >= 1")
    rows = cosets.coset_table(args.n)
    columns = ["n", "delta_prime", "beta", "delta", "sum", "predicted", "ok"]
    print("\t".join(columns))
    for row in rows:
        cells = []
        for col in columns:
            value = row[col]
            if col in ("sum", "predicted"):
                value = format_rational(value)
            elif col == "ok":
                value = "true" if value else "false"
            cells.append(str(value))
        print("\t".join(cells))
    return EXIT_OK if all(row["ok"] for row in rows) else EXIT_FAILED


def cmd_locate(args) -> int:
    p = RatPoint(args.x, args.y)
    if p.y < 1:
        raise UsageError(f"y must be >= 1, got {format_rational(p.y)}")
    labels = locate(p, max_depth=args.max_depth)
    _emit_json(label_strings(labels))
    return EXIT_OK


def cmd_alpha_sum(args) -> int:
    if args.y <= 0:
        raise UsageError("y must be positive")
    total = cosets.theorem21_sum(args.x, args.y, max_depth=args.max_depth)
    predicted = cosets.theorem21_predicted(args.y)
    _emit_json({
        "x": format_rational(args.x),
        "y": format_rational(args.y),
        "sum": format_rational(total),
        "predicted": format_rational(predicted),
        "ok": total == predicted,
    })
    return EXIT_OK if total == predicted else EXIT_FAILED


def cmd_figure(args) -> int:
    if args.depth < 0:
        raise UsageError("depth must be >= 0")
    try:
        doc = svg_render(args.viewport, args.depth)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.out in (None, "-"):
        sys.stdout.write(doc)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(doc)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        reports = verify.run_suites(args.suite, n_max=args.n_max, samples=args.samples, seed=args.seed)
    except KeyError as exc:
        raise UsageError(str(exc)) from None
    payload = {
        "reports": [r.to_dict(stable=args.stable) for r in reports],
        "ok": all(r.ok for r in reports),
    }
    print(json.dumps(payload, indent=2))
    return EXIT_OK if payload["ok"] else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurwitz-relation",
        description="Exact checks of the Kronecker-Hurwitz class number relation and its refinements.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("class-number", help="print H(D)")
    p.add_argument("D", type=int)
    p.set_defaults(func=cmd_class_number)

    p = sub.add_parser("relation", help="both sides of the class number relation for n")
    p.add_argument("n", type=int)
    p.add_argument("--eq0", action="store_true", help="use the elliptic-matrix form of the relation")
    p.set_defaults(func=cmd_relation)

    p = sub.add_parser("cosets", help="per-coset sums as TSV")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_cosets)

    p = sub.add_parser("locate", help="labels of the triangles containing (x, y)")
    p.add_argument("x", type=_rational)
    p.add_argument("y", type=_rational)
    p.add_argument("--max-depth", type=int, default=None,
                   help=f"descent depth bound (default {default_max_depth()}, env HURWITZ_MAX_DEPTH)")
    p.set_defaults(func=cmd_locate)

    p = sub.add_parser("alpha-sum", help="sum of alpha(M g) for M = [[y, x], [0, 1]]")
    p.add_argument("x", type=_rational)
    p.add_argument("y", type=_rational)
    p.add_argument("--max-depth", type=int, default=None)
    p.set_defaults(func=cmd_alpha_sum)

    p = sub.add_parser("figure", help="write an SVG picture of the tessellation")
    p.add_argument("--viewport", type=_viewport, default=DEFAULT_VIEWPORT, help="xmin,xmax,ymin,ymax")
    p.add_argument("--depth", type=int, default=4, help="maximum word length drawn")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default="all", choices=sorted(verify.SUITES) + ["all"])
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--stable", action="store_true", help="omit timings so output is byte-identical")
    p.set_defaults(func=cmd_verify)

    for subparser in sub.choices.values():
        subparser._negative_number_matcher = _NEGATIVE_RATIONAL
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DepthExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEPTH


if __name__ == "__main__":
    sys.exit(main())
