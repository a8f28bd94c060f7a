"""Command-line front end.

Exit status: 0 success, 1 a verification or assertion failed, 2 usage or I/O
error.  ``POLYIND_WORKERS`` sets the process count used by enumeration.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import formats
from .analysis import MIS_MAX_N, embed, max_k_independent_set, verify_certificate
from .constructions import build_extremal, p_formula, radial_graph
from .core import ColoredGraph, GraphError
from .enumeration import EnvelopeError, classify_extremal, minimality_oracle, run_generation

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
SUFFIX = {"json": "json", "graph6": "g6", "dot": "dot"}


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _write_json(path: str | None, data: dict) -> None:
    _write(path, json.dumps(data, indent=2, sort_keys=True) + "\n")


def cmd_construct(args) -> int:
    inst = build_extremal(args.k, args.a, args.all_red_deg3)
    rep = verify_certificate(inst.result)
    expected = p_formula(args.k, args.a)
    out = args.output or f"extremal_k{args.k}_a{args.a}.{SUFFIX[args.format]}"
    _write(out, formats.render(inst.result, args.format))
    rel = "=" if inst.order == expected else "!="
    print(f"order {inst.order} {rel} p({args.k},{args.a})")
    if not rep.certificate_valid or inst.order != expected:
        print("certificate check failed: " + "; ".join(rep.notes), file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args) -> int:
    c = formats.load(args.input)
    k = args.k if args.k is not None else c.k
    c = ColoredGraph(c.graph, c.red, k, c.embedding, c.provenance)
    note = None
    if not c.red and c.graph.n and c.graph.n <= MIS_MAX_N and c.graph.is_connected():
        c = ColoredGraph(c.graph, frozenset(max_k_independent_set(c.graph, k)), k, c.embedding, c.provenance)
        note = "no red set in input; certified a maximum k-independent set instead"
    rep = verify_certificate(c, measure=args.measure)
    if note:
        rep.notes.append(note)
    print(json.dumps(rep.to_dict(), indent=2, sort_keys=True))
    if not rep.certificate_valid:
        failing = "polyhedral" if not rep.polyhedral else "k-independence"
        print(f"verification failed: {failing}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_enumerate(args) -> int:
    lines = []

    def keep(g):
        lines.append(formats.to_graph6(g))

    run = run_generation(args.n, args.kind, keep)
    _write(args.output, "".join(line + "\n" for line in lines))
    if args.summary:
        _write_json(args.summary, run.summary())
    print(f"{run.count} {args.kind} on {args.n} vertices", file=sys.stderr)
    return EXIT_OK


def cmd_minimality(args) -> int:
    rep = minimality_oracle(args.k, args.a)
    top = rep.top_order
    if top in rep.scanned:
        label = "α" if args.k == 1 else f"{args.k}-independence"
        print(f"{rep.scanned[top]} polyhedra on {top} vertices scanned, max {label} = {rep.max_value[top]}")
    else:
        print(f"no polyhedra below order {rep.order}")
    if args.summary:
        _write_json(args.summary, rep.to_dict())
    if not rep.holds:
        print(f"minimality fails: a polyhedron below order {rep.order} has a {args.k}-independent set of size {args.a}",
              file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_radial(args) -> int:
    c = formats.load(args.input)
    e = c.embedding if c.embedding is not None else embed(c.graph)
    _write(args.output, formats.dumps(radial_graph(e)))
    return EXIT_OK


def cmd_classify(args) -> int:
    if args.a % 2:
        raise UsageError(f"--a must be even, got {args.a}")
    rep = classify_extremal(args.a, args.forward_only)
    if args.summary:
        _write_json(args.summary, rep.to_dict())
    print(f"a={args.a}: forward {rep.forward_checked} triangulations "
          f"{'ok' if rep.forward_ok else 'FAILED'}; reverse "
          + ("skipped" if not rep.reverse_checked else ("ok" if rep.reverse_ok else "FAILED")))
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_export(args) -> int:
    c = formats.load(args.input)
    _write(args.output, formats.render(c, args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polyind", description="Extremal polyhedra with k-independent sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build an extremal polyhedron for (k, a)")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--a", type=_positive, required=True)
    p.add_argument("--all-red-deg3", action="store_true", help="use constructions whose red vertices have degree 3")
    p.add_argument("-o", "--output", help="output file ('-' for stdout)")
    p.add_argument("--format", choices=("json", "graph6", "dot"), default="json")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a graph file's red set is a k-independent certificate")
    p.add_argument("input")
    p.add_argument("--k", type=_positive)
    p.add_argument("--measure", action="store_true", help="also compute the exact k-independence number")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list triangulations or polyhedra as graph6 lines")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--kind", choices=("triangulations", "polyhedra"), default="polyhedra")
    p.add_argument("-o", "--output", help="graph6 output file (default stdout)")
    p.add_argument("--summary", help="JSON summary file")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("minimality", help="exhaustively confirm no smaller polyhedron exists")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--a", type=_positive, required=True)
    p.add_argument("--summary", help="JSON summary file")
    p.set_defaults(func=cmd_minimality)

    p = sub.add_parser("radial", help="vertex-face graph of an embedded polyhedron")
    p.add_argument("input")
    p.add_argument("-o", "--output", help="output JSON file (default stdout)")
    p.set_defaults(func=cmd_radial)

    p = sub.add_parser("classify", help="check the radial-graph characterisation for even a")
    p.add_argument("--a", type=_positive, required=True)
    p.add_argument("--forward-only", action="store_true")
    p.add_argument("--summary", help="JSON summary file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("export", help="convert a graph file")
    p.add_argument("input")
    p.add_argument("--format", choices=("json", "graph6", "dot"), required=True)
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, EnvelopeError, OSError, GraphError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
