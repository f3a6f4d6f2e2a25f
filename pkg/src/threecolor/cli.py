"""Command-line entry point. Every subcommand writes JSON (or graph6 for
``enumerate``) to stdout.

Exit codes: 0 success, 1 a negative result or a failed check, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterator, Sequence

from threecolor import _kernels
from threecolor.colorer import BudgetExceeded, chromatic_number, find_k_coloring
from threecolor.critical import is_4_critical
from threecolor.embedding import faces, format_embedding, parse_embedding
from threecolor.generators import (
    GADGET_VARIANTS,
    forcing_gadget,
    hexagonal_quadrangulation,
    k4_projective,
    thomas_walls,
)
from threecolor.graph import Graph, Graph6Error, parse_graph6, read_graph6_lines, write_graph6
from threecolor.harness import (
    DEFAULT_SPECS,
    CorpusSpec,
    GuaranteeViolation,
    _check_graph,
    enumerate_graphs,
    enumerate_up_to,
    normalize_theorem,
    run_suite,
)
from threecolor.reductions import ReductionError, SafeIdentify, analyze_quad_face, check_witness
from threecolor.theorems import grotzsch_color


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=False))


def _graphs(source: str | None) -> Iterator[Graph]:
    """Graphs from a graph6 literal, a file of graph6 lines, or stdin."""
    if source is None or source == "-":
        yield from read_graph6_lines(sys.stdin)
    elif os.path.exists(source):
        with open(source) as fh:
            yield from read_graph6_lines(fh)
    else:
        yield parse_graph6(source)


def cmd_color(args) -> int:
    status = 0
    for g in _graphs(args.graph):
        if args.certified:
            out = grotzsch_color(g).to_json()
            out["graph6"] = write_graph6(g)
            if out["coloring"] is None or not out["guarantee_held"]:
                status = 1
        else:
            c = find_k_coloring(g, args.k)
            out = {
                "graph6": write_graph6(g),
                "n": g.n,
                "k": args.k,
                "colorable": c is not None,
                "coloring": list(c.colors) if c else None,
            }
            if args.chromatic:
                out["chromatic_number"] = chromatic_number(g)
            if c is None:
                status = 1
        _emit(out)
    return status


def cmd_check_critical(args) -> int:
    for g in _graphs(args.graph):
        out = is_4_critical(g).to_json()
        out["graph6"] = write_graph6(g)
        _emit(out)
    return 0


def cmd_analyze_face(args) -> int:
    with open(args.embfile) as fh:
        emb = parse_embedding(fh.read())
    traced = faces(emb)
    if not 0 <= args.index < len(traced):
        raise ValueError(f"face index {args.index} out of range (0..{len(traced) - 1})")
    f = traced[args.index]
    result = analyze_quad_face(emb.graph, emb, f)
    out: dict = {"face": list(f.vertices)}
    if isinstance(result, SafeIdentify):
        v = f.vertices
        out["analysis"] = {"kind": "safe", "axis": result.axis,
                           "identify": [v[result.axis], v[result.axis + 2]]}
    else:
        out["analysis"] = {"kind": "witness", "i": result.i, "z": result.z,
                           "x": result.x, "y": result.y,
                           "verified": check_witness(emb.graph, f.vertices, result)}
    _emit(out)
    return 0


def cmd_generate(args) -> int:
    if args.family == "k4proj":
        emb = k4_projective(args.variant or "quad_faces")
        if args.format == "emb":
            sys.stdout.write(format_embedding(emb))
        else:
            _emit({"graph6": write_graph6(emb.graph), "n": emb.graph.n,
                   "face_lengths": sorted(len(f) for f in faces(emb)),
                   "signs": [[u, v, s] for (u, v), s in emb.signs.items()]})
        return 0
    if args.family == "thomas-walls":
        gi = thomas_walls(args.k)
    elif args.family == "gadget":
        gi = forcing_gadget(args.variant or "a")
    else:
        gi = hexagonal_quadrangulation(args.rings)
    if args.format == "emb":
        if gi.embedding is None or gi.embedding.graph != gi.graph:
            raise ValueError("this instance has no stored embedding; use --format json")
        sys.stdout.write(format_embedding(gi.embedding))
    else:
        _emit(gi.to_json())
    return 0


def cmd_verify_theorem(args) -> int:
    theorem = normalize_theorem(args.theorem)
    if args.graph is not None:
        status = 0
        for g in _graphs(args.graph):
            t = _check_graph(theorem, write_graph6(g))
            _emit({"theorem": theorem, "graph6": write_graph6(g), "instances": t.instances,
                   "hypothesis_ok": t.hypothesis_ok, "guarantee_held": t.guarantee_held,
                   "failures": t.failures})
            status |= 1 if t.failures else 0
        return status
    base = DEFAULT_SPECS[theorem]
    spec = CorpusSpec(args.max_n or base.max_n, base.connected, base.planar,
                      base.triangle_free, base.max_triangles)
    try:
        report = run_suite(theorem, spec, args.jobs, fail_fast=not args.keep_going)
    except GuaranteeViolation as exc:
        _emit({"theorem": theorem, "guarantee_violation": exc.bundle})
        return 1
    _emit(report.to_json())
    return 0 if report.ok else 1


def cmd_enumerate(args) -> int:
    flags = set(args.filter or ())
    spec = CorpusSpec(args.max_n, "connected" in flags, "planar" in flags,
                      "triangle-free" in flags, args.max_triangles)
    gen = enumerate_graphs(spec) if args.exact else enumerate_up_to(spec)
    count = 0
    for g in gen:
        print(write_graph6(g))
        count += 1
    if args.count:
        print(count, file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="threecolor", description=__doc__.splitlines()[0])
    p.add_argument("--backend", action="store_true", help="print the kernel backend and exit")
    sub = p.add_subparsers(dest="command")

    c = sub.add_parser("color", help="3-color (or k-color) graphs given in graph6")
    c.add_argument("graph", nargs="?", help="graph6 string or file; stdin if omitted")
    c.add_argument("-k", type=int, default=3)
    c.add_argument("--chromatic", action="store_true", help="also report the chromatic number")
    c.add_argument("--certified", action="store_true",
                   help="use the reduction pipeline for planar triangle-free input")
    c.set_defaults(func=cmd_color)

    c = sub.add_parser("check-critical", help="decide 4-criticality")
    c.add_argument("graph", nargs="?")
    c.set_defaults(func=cmd_check_critical)

    c = sub.add_parser("analyze-face", help="analyze one 4-face of an embedding file")
    c.add_argument("embfile")
    c.add_argument("index", type=int)
    c.set_defaults(func=cmd_analyze_face)

    c = sub.add_parser("generate", help="build a tightness construction")
    c.add_argument("family", choices=("thomas-walls", "gadget", "hexquad", "k4proj"))
    c.add_argument("--k", type=int, default=1, help="thomas-walls member")
    c.add_argument("--rings", type=int, default=1, help="hexquad rings")
    c.add_argument("--variant", help=f"gadget {'|'.join(GADGET_VARIANTS)} or k4proj "
                                     "quad_faces|mixed_faces")
    c.add_argument("--format", choices=("json", "emb"), default="json")
    c.set_defaults(func=cmd_generate)

    c = sub.add_parser("verify-theorem", help="run a theorem over the small-graph corpus")
    c.add_argument("theorem", help="1 (edge bound), grotzsch, 2, 4, 5, 6, 7, 8, 9 or quadface")
    c.add_argument("--max-n", type=int)
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--graph", help="check only this graph6 string or file ('-' for stdin)")
    c.add_argument("--keep-going", action="store_true",
                   help="collect all failures instead of stopping at the first")
    c.set_defaults(func=cmd_verify_theorem)

    c = sub.add_parser("enumerate", help="list graphs up to isomorphism in graph6")
    c.add_argument("--max-n", type=int, default=4)
    c.add_argument("--filter", nargs="*", choices=("connected", "planar", "triangle-free"))
    c.add_argument("--max-triangles", type=int)
    c.add_argument("--exact", action="store_true", help="only graphs with exactly max-n vertices")
    c.add_argument("--count", action="store_true", help="print the count to stderr")
    c.set_defaults(func=cmd_enumerate)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.backend:
        print(_kernels.BACKEND)
        return 0
    if not getattr(args, "func", None):
        parser.print_help()
        return 2
    try:
        return args.func(args)
    except (Graph6Error, ValueError, OSError, BudgetExceeded, ReductionError) as exc:
        print(f"threecolor: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
