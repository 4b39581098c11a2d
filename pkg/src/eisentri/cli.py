"""Command-line front end.

Subcommands cover the whole library surface: `check` and `embed` for the
realizability pipeline, `factor`/`classify`/`lift` for ring arithmetic,
and `search`/`enumerate` for the brute-force oracle.  Structured output
(`--json`) is a single document on stdout; diagnostics go to stderr.

Exit codes: 0 success; 1 valid input whose mathematical answer is
negative (not realizable, nothing of that norm, empty search); 2
malformed input.  Coordinates in all output are (coefficient of 1,
coefficient of ω).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .core import EisensteinInt
from .embedding import (
    NotRealizableError,
    TriangleSpec,
    embed,
    heron_n,
    validate,
)
from .factorization import (
    classify_prime,
    factor_eisenstein,
    is_prime,
    lift_split_prime,
)
from .oracle import brute_force_embeddings, enumerate_norm_points
from .svg import render_triangle


class UsageError(Exception):
    """Malformed invocation; maps to exit code 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2) on its own
        raise UsageError(message)


@dataclass
class CommandResult:
    exit_code: int
    output: str = ""
    diagnostic: str = ""


def _json_doc(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _coords(z: EisensteinInt) -> list[int]:
    return [z.x, z.y]


def _parse_spec(args) -> TriangleSpec:
    try:
        return TriangleSpec(args.a2, args.b2, args.c2)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _cmd_check(args) -> CommandResult:
    spec = _parse_spec(args)
    report = validate(spec)
    if args.json:
        doc = {
            "spec": list(spec.sides()),
            "realizable": report.realizable,
            "n": report.n,
            "area_ok": report.area_ok,
            "sides_integral": report.sides_integral,
            "side_representable": report.side_representable,
            "witness_side": report.witness_side,
            "reason": report.reason,
        }
        output = _json_doc(doc)
    else:
        lines = [
            f"spec: {spec.sides()}",
            f"realizable: {'yes' if report.realizable else 'no'}",
        ]
        if report.n is not None:
            lines.append(f"n: {report.n}")
        if report.witness_side is not None:
            lines.append(f"witness side: {report.witness_side}")
        if not report.realizable:
            lines.append(f"reason: {report.reason}")
        output = "\n".join(lines) + "\n"
    return CommandResult(0 if report.realizable else 1, output)


def _cmd_embed(args) -> CommandResult:
    spec = _parse_spec(args)
    try:
        tri = embed(spec)
    except NotRealizableError as exc:
        return CommandResult(1, "", f"not realizable: {exc.report.reason}\n")
    n, _ = heron_n(spec)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as handle:
            handle.write(render_triangle(tri, title=f"spec {spec.sides()}"))
    if args.json:
        doc = {
            "spec": list(spec.sides()),
            "n": n,
            "vertices": {
                "A": _coords(tri.A),
                "B": _coords(tri.B),
                "C": _coords(tri.C),
            },
            "sides_squared": [
                (tri.B - tri.C).norm(),
                (tri.A - tri.C).norm(),
                (tri.A - tri.B).norm(),
            ],
        }
        output = _json_doc(doc)
    else:
        lines = [f"spec: {spec.sides()}", f"n: {n}"]
        for name, vertex in (("A", tri.A), ("B", tri.B), ("C", tri.C)):
            lines.append(f"{name} = {vertex}  [{vertex.x}, {vertex.y}]")
        output = "\n".join(lines) + "\n"
    return CommandResult(0, output)


def _cmd_factor(args) -> CommandResult:
    z = EisensteinInt(args.x, args.y)
    if not z:
        raise UsageError("cannot factor zero")
    fz = factor_eisenstein(z)
    if args.json:
        doc = {
            "element": _coords(z),
            "norm": z.norm(),
            "unit": _coords(fz.unit),
            "factors": [[_coords(p), e] for p, e in fz.factors],
        }
        output = _json_doc(doc)
    else:
        pieces = [f"({fz.unit})"]
        for prime, e in fz.factors:
            pieces.append(f"({prime})" if e == 1 else f"({prime})^{e}")
        output = f"{z} = {' · '.join(pieces)}\n"
    return CommandResult(0, output)


def _cmd_classify(args) -> CommandResult:
    if not is_prime(args.p):
        raise UsageError(f"{args.p} is not a rational prime")
    return CommandResult(0, classify_prime(args.p).value + "\n")


def _cmd_lift(args) -> CommandResult:
    if not is_prime(args.p):
        raise UsageError(f"{args.p} is not a rational prime")
    if args.p % 3 != 1:
        raise UsageError(f"{args.p} ≢ 1 (mod 3): it does not split")
    pi = lift_split_prime(args.p)
    return CommandResult(0, f"{pi}  [{pi.x}, {pi.y}]\n")


def _cmd_search(args) -> CommandResult:
    spec = _parse_spec(args)
    classes = brute_force_embeddings(spec)
    if args.json:
        doc = {
            "spec": list(spec.sides()),
            "count": len(classes),
            "classes": [
                {
                    "A": _coords(cls.representative.A),
                    "B": _coords(cls.representative.B),
                    "C": _coords(cls.representative.C),
                }
                for cls in classes
            ],
        }
        output = _json_doc(doc)
    else:
        lines = [
            f"A=({c.representative.A.x}, {c.representative.A.y}) "
            f"B=({c.representative.B.x}, {c.representative.B.y}) C=(0, 0)"
            for c in classes
        ]
        output = ("\n".join(lines) + "\n") if lines else ""
    if not classes:
        return CommandResult(1, output, f"no embeddings of {spec.sides()}\n")
    return CommandResult(0, output)


def _cmd_enumerate(args) -> CommandResult:
    if args.k < 1:
        raise UsageError("K must be a positive integer")
    points = enumerate_norm_points(args.k)
    if args.json:
        doc = {
            "norm": args.k,
            "count": len(points),
            "points": [_coords(p) for p in points],
        }
        output = _json_doc(doc)
    else:
        output = "".join(f"({p.x}, {p.y})\n" for p in points)
    if not points:
        return CommandResult(1, output, f"no lattice points of norm {args.k}\n")
    return CommandResult(0, output)


def _add_spec_arguments(parser) -> None:
    parser.add_argument("a2", type=int, help="squared side a²")
    parser.add_argument("b2", type=int, help="squared side b²")
    parser.add_argument("c2", type=int, help="squared side c²")


def build_parser() -> _Parser:
    parser = _Parser(
        prog="eisentri",
        description="Heron-type triangles on the Eisenstein lattice",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide realizability of (a², b², c²)")
    _add_spec_arguments(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("embed", help="construct lattice vertices for (a², b², c²)")
    _add_spec_arguments(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--svg", metavar="FILE", help="also write an SVG drawing")
    p.set_defaults(handler=_cmd_embed)

    p = sub.add_parser("factor", help="factor X + Y·ω into unit and prime powers")
    p.add_argument("x", type=int, help="coefficient of 1")
    p.add_argument("y", type=int, help="coefficient of ω")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_factor)

    p = sub.add_parser("classify", help="inert | ramified | split for a prime P")
    p.add_argument("p", type=int)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("lift", help="canonical prime of norm P (P ≡ 1 mod 3)")
    p.add_argument("p", type=int)
    p.set_defaults(handler=_cmd_lift)

    p = sub.add_parser("search", help="all embeddings of (a², b², c²), brute force")
    _add_spec_arguments(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_search)

    p = sub.add_parser("enumerate", help="all lattice points of norm K")
    p.add_argument("k", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_enumerate)

    return parser


def dispatch(argv: list[str]) -> CommandResult:
    """Parse argv, run the command, and capture its result."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except UsageError as exc:
        return CommandResult(2, "", f"error: {exc}\n")


def main(argv: list[str] | None = None) -> int:
    result = dispatch(sys.argv[1:] if argv is None else argv)
    if result.output:
        sys.stdout.write(result.output)
    if result.diagnostic:
        sys.stderr.write(result.diagnostic)
    return result.exit_code
