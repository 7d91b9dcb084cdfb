"""Command-line entry point.

Exit status: 0 for a positive answer, 1 for a negative answer (non-member,
not found, none exists, invalid), 2 for malformed input, bad flags or a
size guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import io
from .chordality import find_good_subdigraph, find_hole, is_chordal, triangle_pattern
from .cover import SdrAssignment, find_sdr, repair_cover, search_cover, validate_cover, witness_digraph
from .designs import bibd_to_digraph, bibd_violation, fisher_check, steiner_triple
from .errors import ParseError, SizeGuardError
from .families import containment
from .graphs import DegreeBounds, competition_graph
from .recognition import recognize

OK, NEGATIVE, FAILURE = 0, 1, 2


class Answer:
    """A document to print plus the exit status it carries."""

    def __init__(self, payload, status: int = OK, dot=None):
        self.payload = payload
        self.status = status
        self.dot = dot


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _bounds(args) -> DegreeBounds:
    return DegreeBounds(args.i, args.j)


def _pair(text: str) -> DegreeBounds:
    try:
        i, j = (int(x) for x in text.split(","))
        return DegreeBounds(i, j)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'i,j' with positive integers, got {text!r}") from None


def cmd_compete(args) -> Answer:
    g = competition_graph(io.parse_digraph(_read(args.input)))
    return Answer(io.graph_to_json(g), dot=g)


def cmd_recognize(args) -> Answer:
    g = io.parse_graph(_read(args.input))
    cert = recognize(g, _bounds(args))
    return Answer(io.certificate_to_json(cert), OK if cert.is_member else NEGATIVE, dot=cert.witness)


def cmd_cover(args) -> Answer:
    g = io.parse_graph(_read(args.input))
    b = _bounds(args)
    cover = search_cover(g, b)
    if cover is None:
        return Answer({"cliques": None, "result": "none exists"}, NEGATIVE)
    out = io.cover_to_json(cover)
    if args.repair:
        result = find_sdr(g, cover)
        if not isinstance(result, SdrAssignment):
            try:
                repaired = repair_cover(g, cover, b)
            except ValueError:
                out["result"] = "complements have no SDR"
                return Answer(out, NEGATIVE)
            cover, result = repaired.cover, repaired.sdr
            out = io.cover_to_json(cover)
        out.update(io.sdr_to_json(result))
    return Answer(out)


def cmd_witness(args) -> Answer:
    g = io.parse_graph(_read(args.input))
    b = _bounds(args)
    cover = io.parse_cover(_read(args.cover))
    if not validate_cover(g, cover, b):
        return Answer({"error": "cover is not in C(G,i,j)"}, NEGATIVE)
    if args.sdr:
        sdr = io.parse_sdr(_read(args.sdr))
    else:
        result = find_sdr(g, cover)
        if isinstance(result, SdrAssignment):
            sdr = result
        else:
            try:
                repaired = repair_cover(g, cover, b)
            except ValueError:
                return Answer({"error": "complements have no SDR", "indices": list(result.indices)}, NEGATIVE)
            cover, sdr = repaired.cover, repaired.sdr
    try:
        d = witness_digraph(g, cover, sdr)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return Answer(io.digraph_to_json(d), dot=d)


def cmd_chordal(args) -> Answer:
    g = io.parse_graph(_read(args.input))
    chordal = is_chordal(g)
    hole = None if chordal else list(find_hole(g))
    return Answer({"chordal": chordal, "hole": hole}, OK if chordal else NEGATIVE)


def cmd_good(args) -> Answer:
    d = io.parse_digraph(_read(args.input))
    report = find_good_subdigraph(d, max_vertices=args.max_vertices)
    return Answer(report.as_dict(), OK if report.found else NEGATIVE)


def cmd_triangle(args) -> Answer:
    d = io.parse_digraph(_read(args.input))
    hit = triangle_pattern(d)
    if hit is None:
        return Answer({"induces_triangle": False}, NEGATIVE)
    name, emb = hit
    return Answer({"induces_triangle": True, "pattern": name, "embedding": [emb[x] for x in sorted(emb)]})


def cmd_bibd_verify(args) -> Answer:
    design = io.parse_bibd(_read(args.input))
    problem = bibd_violation(design)
    out = {"valid": problem is None, "violation": problem, "fisher": fisher_check(design)}
    return Answer(out, OK if problem is None else NEGATIVE)


def cmd_bibd_digraph(args) -> Answer:
    try:
        d = bibd_to_digraph(io.parse_bibd(_read(args.input)))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return Answer(io.digraph_to_json(d), dot=d)


def cmd_sts(args) -> Answer:
    design = steiner_triple(args.n)
    if design is None:
        return Answer({"n": args.n, "result": "none exists"}, NEGATIVE)
    return Answer(io.bibd_to_json(design))


def cmd_containment(args) -> Answer:
    return Answer(io.verdict_to_json(containment(args.a, args.b)))


def cmd_export_dot(args) -> Answer:
    obj = io.parse_any(_read(args.input), directed=args.directed)
    return Answer(io.to_json(obj), dot=obj)


COMMANDS: dict[str, tuple[Callable, str]] = {
    "compete": (cmd_compete, "competition graph of a digraph"),
    "recognize": (cmd_recognize, "decide <i,j> competition-graph membership"),
    "cover": (cmd_cover, "search for an edge clique cover in C(G,i,j)"),
    "witness": (cmd_witness, "build the witness digraph from a cover"),
    "chordal": (cmd_chordal, "chordality with a hole certificate"),
    "good-subdigraph": (cmd_good, "search for a <2,2>-bar good subdigraph"),
    "triangle": (cmd_triangle, "does the digraph induce a triangle"),
    "bibd-verify": (cmd_bibd_verify, "check the block design axioms"),
    "bibd-digraph": (cmd_bibd_digraph, "variety/block digraph of a lambda=1 design"),
    "sts": (cmd_sts, "Steiner triple system on n points"),
    "containment": (cmd_containment, "relation between two <i,j> families"),
    "export-dot": (cmd_export_dot, "render a graph or digraph"),
}

_BOUNDED = {"recognize", "cover", "witness"}
_FORMATTABLE = {"compete", "recognize", "witness", "bibd-digraph", "export-dot"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="compgraphs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        if name not in ("sts", "containment"):
            p.add_argument("input", nargs="?", default="-", help="input file, '-' for stdin (default)")
        if name in _BOUNDED:
            p.add_argument("--i", type=int, required=True, help="indegree bound")
            p.add_argument("--j", type=int, required=True, help="outdegree bound")
        if name in _FORMATTABLE:
            default = "dot" if name == "export-dot" else "json"
            p.add_argument("--format", choices=("json", "dot"), default=default)
    sub.choices["cover"].add_argument("--repair", action="store_true", help="repair to a cover with an SDR")
    sub.choices["witness"].add_argument("--cover", required=True, help="cover JSON file")
    sub.choices["witness"].add_argument("--sdr", help="SDR JSON file (computed when omitted)")
    sub.choices["good-subdigraph"].add_argument("--max-vertices", type=int, default=10)
    sub.choices["sts"].add_argument("--n", type=int, required=True)
    sub.choices["containment"].add_argument("--a", type=_pair, required=True, metavar="I,J")
    sub.choices["containment"].add_argument("--b", type=_pair, required=True, metavar="K,L")
    sub.choices["export-dot"].add_argument("--directed", action="store_true", help="text input is a digraph")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        if getattr(args, "i", 1) < 1 or getattr(args, "j", 1) < 1:
            raise ParseError("--i and --j must be positive")
        answer = handler(args)
    except SizeGuardError as exc:
        print(f"compgraphs: size guard '{exc.guard}': {exc}", file=sys.stderr)
        return FAILURE
    except (ValueError, OSError) as exc:
        print(f"compgraphs: {exc}", file=sys.stderr)
        return FAILURE
    if getattr(args, "format", "json") == "dot" and answer.dot is not None:
        sys.stdout.write(io.to_dot(answer.dot))
    else:
        sys.stdout.write(json.dumps(answer.payload, indent=2) + "\n")
    return answer.status


if __name__ == "__main__":
    sys.exit(main())
