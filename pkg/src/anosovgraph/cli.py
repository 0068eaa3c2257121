"""Command-line interface.

Exit codes partition outcomes: 0 the decision (or certificate) is positive, 1
negative, 2 undecided, 3 graph/input parse error, 4 invalid holonomy, 5 a
combinatorial bound was exceeded, 6 witness construction failed, 64 usage
error, 70 internal error. Canonical JSON goes to stdout; timings go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .analysis import analyze, quotient_dot
from .errors import (
    BoundExceeded,
    GraphInputError,
    NotAnAutomorphism,
    PermutationError,
    SeedSearchExhausted,
    WitnessAssemblyError,
    WitnessRefused,
)
from .families import FamilySpec, generate
from .graphs import Graph, coherent_components, graph_from_json_dict, parse_graph, parse_holonomy_generators
from .hyperbolicity import certify_polynomial, exterior_square_char_poly, is_c_hyperbolic, is_integer_like
from .polynomials import IntPolynomial, format_polynomial, parse_polynomial

EXIT_YES = 0
EXIT_NO = 1
EXIT_UNDECIDED = 2
EXIT_PARSE = 3
EXIT_HOLONOMY = 4
EXIT_BOUNDS = 5
EXIT_WITNESS = 6
EXIT_USAGE = 64
EXIT_INTERNAL = 70


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _read_graph_argument(path: str) -> tuple[Graph, tuple]:
    """Read a graph file (or '-' for stdin); returns (graph, embedded holonomy)."""
    text = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphInputError(f"invalid JSON: {exc}") from None
        if isinstance(data, dict) and "graph" in data:
            graph = graph_from_json_dict(data["graph"])
            holonomy = data.get("holonomy", "")
            gens = parse_holonomy_generators(holonomy, graph) if holonomy else ()
            return graph, gens
        return graph_from_json_dict(data), ()
    return parse_graph(text), ()


def _print_timing(timing: dict) -> None:
    for key in sorted(timing):
        print(f"# {key}: {timing[key]:.4f}", file=sys.stderr)


def cmd_analyze(args) -> int:
    graph, embedded = _read_graph_argument(args.graph)
    if args.holonomy is not None:
        generators = parse_holonomy_generators(args.holonomy, graph)
    else:
        generators = embedded
    report = analyze(
        graph,
        generators,
        want_witness=args.witness,
        order_bound=args.max_group_order,
        entry_bound=args.search_bound,
        search_cap=args.search_cap,
        threads=args.threads,
    )
    sys.stdout.write(report.to_json() if args.json else report.to_text())
    _print_timing(report.timing)
    if args.witness and report.decision.verdict == "yes" and report.witness is None:
        print(f"witness construction failed: {report.witness_error}", file=sys.stderr)
        return EXIT_WITNESS
    return report.exit_code


def cmd_quotient(args) -> int:
    graph, _ = _read_graph_argument(args.graph)
    part = coherent_components(graph)
    dot = quotient_dot(part)
    if args.dot:
        sys.stdout.write(dot)
        return EXIT_YES
    payload = {"partition": part.to_json_dict(), "dot": dot}
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    return EXIT_YES


def cmd_family(args) -> int:
    sizes = tuple(int(s) for s in args.sizes.split(",")) if args.sizes else None
    spec = FamilySpec(family=args.name, m=args.m, sizes=sizes, n=args.n, size=args.size)
    instance = generate(spec)
    payload = {
        "graph": instance.graph.to_json_dict(),
        "holonomy": ";".join(g.cycle_string() for g in instance.generators),
        "expected_dimension": instance.expected_dimension,
    }
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    return EXIT_YES


def cmd_witness(args) -> int:
    args.witness = True
    args.json = args.json or False
    graph, embedded = _read_graph_argument(args.graph)
    generators = (
        parse_holonomy_generators(args.holonomy, graph) if args.holonomy is not None else embedded
    )
    report = analyze(
        graph,
        generators,
        want_witness=True,
        order_bound=args.max_group_order,
        entry_bound=args.search_bound,
        search_cap=args.search_cap,
        threads=args.threads,
    )
    if report.decision.verdict != "yes":
        sys.stdout.write(report.to_json() if args.json else report.to_text())
        return report.exit_code
    if report.witness is None:
        print(f"witness construction failed: {report.witness_error}", file=sys.stderr)
        return EXIT_WITNESS
    if args.json:
        sys.stdout.write(
            json.dumps(report.witness.to_json_dict(), sort_keys=True, indent=2) + "\n"
        )
    else:
        sys.stdout.write(report.witness.to_text() + "\n")
    _print_timing(report.timing)
    return EXIT_YES


def _parse_matrix_argument(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphInputError(f"matrix must be JSON rows, e.g. [[2,1],[1,1]]: {exc}") from None
    if not isinstance(data, list):
        raise GraphInputError("matrix must be a JSON list of rows")
    return data


def cmd_certify(args) -> int:
    c = args.c
    if args.poly is not None:
        p = parse_polynomial(args.poly)
        if not p.is_monic:
            raise GraphInputError("certification expects a monic polynomial")
        compound = None
        if c == 2:
            from .polynomials import companion_rows

            compound = exterior_square_char_poly(companion_rows(p))
        cert = certify_polynomial(p, c, compound)
        integer_like = is_integer_like(p)
    else:
        rows = _parse_matrix_argument(args.matrix)
        cert = is_c_hyperbolic(rows, c)
        integer_like = is_integer_like(cert.char_poly)
    payload = {
        "c": c,
        "char_poly": format_polynomial(cert.char_poly),
        "integer_like": integer_like,
        "certificate": cert.to_json_dict(),
        "valid": cert.valid and integer_like,
        "reason": cert.failure if not cert.valid else (None if integer_like else "constant term is not a unit"),
    }
    if args.json:
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        status = "valid" if payload["valid"] else f"invalid ({payload['reason']})"
        sys.stdout.write(
            f"char poly: {payload['char_poly']}\n"
            f"integer-like: {integer_like}\n"
            f"{c}-hyperbolic certificate: {status}\n"
        )
    return EXIT_YES if payload["valid"] else EXIT_NO


def build_parser() -> _Parser:
    parser = _Parser(
        prog="anosovgraph",
        description=(
            "Decide whether the infra-nilmanifold of a graph-with-symmetry admits an "
            "Anosov diffeomorphism, and construct certified integer witnesses."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, witness_flag=True):
        p.add_argument("--graph", required=True, help="graph file (JSON or text), or - for stdin")
        p.add_argument("--holonomy", default=None, help='generators, e.g. "(a b)(c d);(e f)"')
        p.add_argument("--json", action="store_true", help="canonical JSON on stdout")
        p.add_argument("--search-bound", type=int, default=3, help="seed entry bound")
        p.add_argument("--search-cap", type=int, default=200_000, help="max seed candidates")
        p.add_argument("--max-group-order", type=int, default=10_000)
        p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
        if witness_flag:
            p.add_argument("--witness", action="store_true", help="also construct a witness")

    p_analyze = sub.add_parser("analyze", help="full decision pipeline")
    common(p_analyze)
    p_analyze.set_defaults(func=cmd_analyze)

    p_quotient = sub.add_parser("quotient", help="coherent components and quotient graph")
    p_quotient.add_argument("--graph", required=True)
    p_quotient.add_argument("--dot", action="store_true", help="print raw DOT only")
    p_quotient.set_defaults(func=cmd_quotient)

    p_family = sub.add_parser("family", help="generate a parameterized family instance")
    p_family.add_argument("--name", required=True, choices=["I", "I-modified", "II", "II-Z4"])
    p_family.add_argument("--m", type=int, default=None)
    p_family.add_argument("--sizes", default=None, help="comma-separated, e.g. 2,2,3")
    p_family.add_argument("--n", type=int, default=None)
    p_family.add_argument("--size", type=int, default=3, help="component size for II/II-Z4")
    p_family.set_defaults(func=cmd_family)

    p_witness = sub.add_parser("witness", help="construct and print a certified witness")
    common(p_witness, witness_flag=False)
    p_witness.set_defaults(func=cmd_witness)

    p_certify = sub.add_parser("certify", help="certify a polynomial or integer matrix")
    group = p_certify.add_mutually_exclusive_group(required=True)
    group.add_argument("--poly", help='human syntax, e.g. "x^2 - 3x + 1"')
    group.add_argument("--matrix", help="JSON rows, e.g. [[2,1],[1,1]]")
    p_certify.add_argument("--c", type=int, default=1, choices=[1, 2])
    p_certify.add_argument("--json", action="store_true")
    p_certify.set_defaults(func=cmd_certify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except GraphInputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (PermutationError, NotAnAutomorphism) as exc:
        print(f"holonomy error: {exc}", file=sys.stderr)
        return EXIT_HOLONOMY
    except BoundExceeded as exc:
        print(f"bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUNDS
    except (SeedSearchExhausted, WitnessRefused, WitnessAssemblyError) as exc:
        print(f"witness error: {exc}", file=sys.stderr)
        return EXIT_WITNESS
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def entry() -> None:
    sys.exit(main())
