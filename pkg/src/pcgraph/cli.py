"""Command line interface: ``pcgraph {product,verify,subtype,gen}``.

Exit codes: 0 ok, 1 law violation, 2 format or parameter error,
3 precondition violation.
"""
from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from typing import List, Optional

from . import formats
from .analysis import (
    NotADAGError,
    CountReport,
    edge_count_forms,
    is_isomorphic,
    predicted_vertex_count,
    random_digraph,
    transitive_reduction,
    verify_isomorphism,
    yero_count_report,
)
from .classdecl import DeclError, parse
from .graph import (
    Digraph,
    GraphError,
    NotASubsetError,
    cartesian_product,
    induced_subgraph,
    label_key,
    label_text,
)
from .products import gsp, pcgp, yero
from .subtyping import subtyping_iterate

log = logging.getLogger("pcgraph")

EXIT_OK, EXIT_LAW, EXIT_FORMAT, EXIT_PRECONDITION = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


# -- helpers ---------------------------------------------------------------

def split_labels(text: str) -> List[str]:
    """Split a comma list, ignoring commas nested inside parentheses."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "," and depth == 0:
            out.append("".join(cur).strip())
            cur = []
            continue
        depth += (ch == "(") - (ch == ")")
        cur.append(ch)
    out.append("".join(cur).strip())
    return [t for t in out if t]


def resolve_labels(g: Digraph, text: str) -> frozenset:
    by_text = {label_text(v): v for v in g.vertices}
    names = split_labels(text)
    missing = [n for n in names if n not in by_text]
    if missing:
        raise CliError(f"product vertex not in g1: {', '.join(missing)}", EXIT_PRECONDITION)
    return frozenset(by_text[n] for n in names)


def load_graph(path: str) -> Digraph:
    try:
        return formats.load(path)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_FORMAT) from None
    except formats.FormatError as exc:
        raise CliError(f"{path}: {exc}", EXIT_FORMAT) from None


def emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def reduce_for_display(g: Digraph) -> Digraph:
    try:
        return transitive_reduction(g)
    except NotADAGError as exc:
        raise CliError(f"--reduce needs an acyclic graph: {exc}", EXIT_PRECONDITION) from None


# -- verification ----------------------------------------------------------

def random_triple(rng: random.Random, max_v1: int = 6, max_v2: int = 4, p: float = 0.4):
    """A random ``(g1, vp, g2)``; ``vp`` is a uniformly random subset of g1."""
    g1 = random_digraph(rng.randint(0, max_v1), p, rng.getrandbits(32))
    g2 = random_digraph(rng.randint(1, max_v2), p, rng.getrandbits(32))
    vp = frozenset(v for v in g1.sorted_vertices() if rng.random() < 0.5)
    return g1, vp, g2


def verify_case(g1: Digraph, vp: frozenset, g2: Digraph) -> dict:
    """Run every law on one input triple and describe the outcome."""
    prod = pcgp(g1, vp, g2)
    direct, alternative = edge_count_forms(g1, vp, g2)
    counts = CountReport(predicted_vertex_count(g1, vp, g2), direct,
                         prod.num_vertices, prod.num_edges)
    rival = yero(g2, vp, g1)
    rival_counts = yero_count_report(g2, vp, g1, rival)

    checks = {
        "vertex_law": counts.predicted_vertices == counts.actual_vertices,
        "edge_law": counts.predicted_edges == counts.actual_edges,
        "edge_forms_agree": direct == alternative,
        "yero_counts": rival_counts.match,
    }
    # merging an empty cluster erases the vertex, so the views only agree for non-empty g2
    if g2.num_vertices:
        contracted = gsp(g1, vp, g2)
        mapping = is_isomorphic(contracted, prod)
        checks["gsp_isomorphic"] = mapping is not None and verify_isomorphism(contracted, prod, mapping)
        same = prod.num_vertices == rival.num_vertices
        checks["vertex_comparison"] = (prod.num_vertices <= rival.num_vertices
                                       and same == (vp == g1.vertices or g2.num_vertices == 1))
    if not induced_subgraph(g1, g1.vertices - vp).edges:
        checks["discrete_edge_parity"] = prod.num_edges == rival.num_edges
    if vp == g1.vertices:
        checks["pcgp_equals_cgp"] = prod == cartesian_product(g1, g2)
    if not vp:
        checks["pcgp_equals_g1"] = prod == g1

    return {
        "g1": [g1.num_vertices, g1.num_edges],
        "g2": [g2.num_vertices, g2.num_edges],
        "pv": [formats.label_to_term(v) for v in sorted(vp, key=label_key)],
        "pcgp": counts.to_dict(),
        "yero": rival_counts.to_dict(),
        "checks": checks,
        "pass": all(checks.values()),
    }


# -- subcommands -----------------------------------------------------------

def cmd_product(args) -> int:
    g1, g2 = load_graph(args.g1), load_graph(args.g2)
    vp = resolve_labels(g1, args.pv)
    try:
        if args.op == "pcgp":
            g = pcgp(g1, vp, g2)
        elif args.op == "gsp":
            g = gsp(g1, vp, g2)
        elif args.op == "yero":
            g = yero(g2, vp, g1)
        else:
            g = cartesian_product(g1, g2)
    except (GraphError, NotASubsetError) as exc:
        raise CliError(str(exc), EXIT_PRECONDITION) from None
    if args.reduce:
        g = reduce_for_display(g)
    log.info("%s: %d vertices, %d edges", args.op, g.num_vertices, g.num_edges)
    emit(formats.render(g, args.format, args.op), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.fuzz is not None:
        if args.fuzz < 0:
            raise CliError("--fuzz must be non-negative", EXIT_FORMAT)
        cases = []
        for i in range(args.fuzz):
            rng = random.Random(args.seed * 1_000_003 + i)
            case = verify_case(*random_triple(rng))
            case["case"] = i
            cases.append(case)
    else:
        if not (args.g1 and args.g2):
            raise CliError("verify needs --g1 and --g2, or --fuzz N", EXIT_FORMAT)
        g1, g2 = load_graph(args.g1), load_graph(args.g2)
        case = verify_case(g1, resolve_labels(g1, args.pv), g2)
        case["case"] = 0
        cases = [case]

    passed = sum(c["pass"] for c in cases)
    report = {"total": len(cases), "passed": passed, "ok": passed == len(cases), "cases": cases}
    emit(json.dumps(report, indent=2) + "\n", args.out)
    log.info("verify: %d/%d cases pass", passed, len(cases))
    return EXIT_OK if report["ok"] else EXIT_LAW


def counts_table(result) -> str:
    rows = ["round\tvertices\tedges\tpredicted_vertices\tpredicted_edges\targuments"]
    for i, ((v, e), (pv, pe), a) in enumerate(
            zip(result.per_iteration_counts, result.predicted_counts, result.arguments), 1):
        rows.append(f"{i}\t{v}\t{e}\t{pv}\t{pe}\t{a.num_vertices}")
    return "\n".join(rows) + "\n"


def cmd_subtype(args) -> int:
    try:
        with open(args.source, encoding="utf-8") as fh:
            table = parse(fh.read())
    except OSError as exc:
        raise CliError(f"cannot read {args.source}: {exc.strerror}", EXIT_FORMAT) from None
    except DeclError as exc:
        raise CliError(f"{args.source}:{exc}", EXIT_FORMAT) from None
    if args.depth < 0:
        raise CliError("--depth must be non-negative", EXIT_FORMAT)
    try:
        result = subtyping_iterate(table, args.depth, args.identify_top)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PRECONDITION) from None

    g = transitive_reduction(result.graph) if args.reduce else result.graph
    emit(formats.render(g, args.format, f"S{args.depth}"), args.out)
    table_text = counts_table(result)
    if args.stats:
        emit(table_text, args.stats)
    sys.stderr.write(table_text)
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        g = random_digraph(args.n, args.p, args.seed)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_FORMAT) from None
    emit(formats.render(g, args.format), args.out)
    return EXIT_OK


# -- entry point -----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pcgraph", description="Partial Cartesian graph products and generic subtyping graphs.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_inputs(p, required=True):
        p.add_argument("--g1", required=required, help="first factor (JSON graph)")
        p.add_argument("--g2", required=required, help="second factor (JSON graph)")
        p.add_argument("--pv", default="", help="comma-separated product vertices of g1")

    def output(p, default="dot"):
        p.add_argument("--format", choices=("dot", "json"), default=default)
        p.add_argument("--out", help="write to this file instead of stdout")

    p = sub.add_parser("product", help="compute a graph product")
    graph_inputs(p)
    p.add_argument("--op", choices=("pcgp", "gsp", "cgp", "yero"), default="pcgp",
                   help="yero computes g2 □_S g1 with S = --pv taken from g1")
    p.add_argument("--reduce", action="store_true", help="emit the transitive reduction")
    output(p)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("verify", help="check the product laws on inputs or random cases")
    graph_inputs(p, required=False)
    p.add_argument("--fuzz", type=int, help="check N seeded random triples instead")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the JSON report to this file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("subtype", help="unroll the generic subtyping relation")
    p.add_argument("source", help="class declarations (.jdecl)")
    p.add_argument("--depth", type=int, default=1)
    p.add_argument("--identify-top", action=argparse.BooleanOptionalAction, default=False,
                   help="treat '? extends Object' as '?'")
    p.add_argument("--reduce", action="store_true", help="emit the transitive reduction")
    p.add_argument("--stats", help="also write the per-round count table (TSV) here")
    output(p)
    p.set_defaults(func=cmd_subtype)

    p = sub.add_parser("gen", help="generate a seeded random digraph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    output(p, default="json")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except CliError as exc:
        sys.stderr.write(f"pcgraph: error: {exc}\n")
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
