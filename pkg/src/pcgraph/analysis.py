"""Count predictors, isomorphism search, transitive reduction, random graphs."""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import asdict, dataclass
from graphlib import CycleError, TopologicalSorter
from typing import Dict, Iterable, Optional

from .graph import Digraph, Label, _check_subset, edge_partition, label_key, label_text


class NotADAGError(ValueError):
    """Raised by DAG-only operations when the input has a directed cycle."""


@dataclass(frozen=True)
class CountReport:
    predicted_vertices: int
    predicted_edges: int
    actual_vertices: int
    actual_edges: int

    @property
    def match(self) -> bool:
        return (self.predicted_vertices == self.actual_vertices
                and self.predicted_edges == self.actual_edges)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["match"] = self.match
        return d


# -- counting laws ---------------------------------------------------------

def predicted_vertex_count(g1: Digraph, vp: Iterable[Label], g2: Digraph) -> int:
    vp = _check_subset(g1, vp, "product vertex set")
    return len(vp) * g2.num_vertices + (g1.num_vertices - len(vp))


def edge_count_forms(g1: Digraph, vp: Iterable[Label], g2: Digraph) -> tuple:
    """Both algebraic forms of the partial-product edge count.

    Returns ``(direct, alternative)`` where ``direct`` sums the product-side
    edges replicated per ``g2`` vertex plus the untouched non-product edges,
    and ``alternative`` starts from every ``g1`` edge replicated and removes
    the coalesced copies of non-product edges.
    """
    vp = _check_subset(g1, vp, "product vertex set")
    parts = edge_partition(g1, vp)
    n_vp, v2, e2 = len(vp), g2.num_vertices, g2.num_edges
    e_p, e_n = parts.product_side, len(parts.e_nn)
    direct = (n_vp * e2 + e_p * v2) + e_n
    alternative = (n_vp * e2 + g1.num_edges * v2) - e_n * (v2 - 1)
    return direct, alternative


def predicted_edge_count(g1: Digraph, vp: Iterable[Label], g2: Digraph) -> int:
    direct, alternative = edge_count_forms(g1, vp, g2)
    if direct != alternative:
        raise ArithmeticError(f"edge count forms disagree: {direct} != {alternative}")
    return direct


def count_report(g1: Digraph, vp: Iterable[Label], g2: Digraph, product: Digraph) -> CountReport:
    vp = frozenset(vp)
    return CountReport(
        predicted_vertices=predicted_vertex_count(g1, vp, g2),
        predicted_edges=predicted_edge_count(g1, vp, g2),
        actual_vertices=product.num_vertices,
        actual_edges=product.num_edges,
    )


def yero_count_report(g2: Digraph, s: Iterable[Label], g1: Digraph, product: Digraph) -> CountReport:
    s = _check_subset(g1, s, "product vertex set")
    return CountReport(
        predicted_vertices=g2.num_vertices * g1.num_vertices,
        predicted_edges=g2.num_vertices * g1.num_edges + g2.num_edges * len(s),
        actual_vertices=product.num_vertices,
        actual_edges=product.num_edges,
    )


# -- isomorphism -----------------------------------------------------------

def _refine(g: Digraph, h: Digraph):
    """Joint colour refinement; equal colours across g and h are comparable."""
    col_g = {v: (g.in_degree(v), g.out_degree(v)) for v in g.vertices}
    col_h = {v: (h.in_degree(v), h.out_degree(v)) for v in h.vertices}
    order_g, order_h = g.sorted_vertices(), h.sorted_vertices()
    n_classes = -1
    while True:
        palette: Dict[tuple, int] = {}

        def step(graph, order, col):
            out = {}
            for v in order:
                sig = (col[v],
                       tuple(sorted(col[w] for w in graph.successors(v))),
                       tuple(sorted(col[w] for w in graph.predecessors(v))))
                out[v] = palette.setdefault(sig, len(palette))
            return out

        # palette ids follow insertion order; canonical walk keeps them stable
        new_g = step(g, order_g, col_g)
        new_h = step(h, order_h, col_h)
        if len(palette) == n_classes:
            return new_g, new_h
        n_classes = len(palette)
        col_g, col_h = new_g, new_h


def is_isomorphic(g: Digraph, h: Digraph) -> Optional[Dict[Label, Label]]:
    """Return a vertex bijection ``g -> h`` preserving edges, or ``None``."""
    if g.num_vertices != h.num_vertices or g.num_edges != h.num_edges:
        return None
    col_g, col_h = _refine(g, h)
    if Counter(col_g.values()) != Counter(col_h.values()):
        return None

    by_colour: Dict[int, list] = {}
    for w in h.sorted_vertices():
        by_colour.setdefault(col_h[w], []).append(w)

    # connectivity-first ordering keeps constraints tight early
    remaining = set(g.vertices)
    order = []
    placed = set()
    while remaining:
        def rank(v):
            links = len((g.successors(v) | g.predecessors(v)) & placed)
            return (-links, len(by_colour[col_g[v]]), label_key(v))
        v = min(remaining, key=rank)
        order.append(v)
        placed.add(v)
        remaining.discard(v)

    mapping: Dict[Label, Label] = {}
    used = set()

    def consistent(v, c) -> bool:
        for w, mw in mapping.items():
            if (w in g.successors(v)) != (mw in h.successors(c)):
                return False
            if (w in g.predecessors(v)) != (mw in h.predecessors(c)):
                return False
        return True

    def search(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for c in by_colour[col_g[v]]:
            if c in used or not consistent(v, c):
                continue
            mapping[v] = c
            used.add(c)
            if search(i + 1):
                return True
            del mapping[v]
            used.discard(c)
        return False

    if not search(0):
        return None
    return dict(mapping)


def verify_isomorphism(g: Digraph, h: Digraph, mapping: Dict[Label, Label]) -> bool:
    """Check that ``mapping`` is a bijection g -> h carrying edges onto edges."""
    if set(mapping) != set(g.vertices) or set(mapping.values()) != set(h.vertices):
        return False
    if len(set(mapping.values())) != len(mapping):
        return False
    return {(mapping[s], mapping[t]) for s, t in g.edges} == set(h.edges)


# -- DAG utilities ---------------------------------------------------------

def topological_order(g: Digraph) -> list:
    ts = TopologicalSorter({v: g.predecessors(v) for v in g.sorted_vertices()})
    try:
        return list(ts.static_order())
    except CycleError as exc:
        cycle = " -> ".join(label_text(v) for v in exc.args[1])
        raise NotADAGError(f"graph has a cycle: {cycle}") from None


def descendants(g: Digraph) -> Dict[Label, frozenset]:
    """Strict reachability sets of a DAG (v not included in its own set)."""
    reach: Dict[Label, frozenset] = {}
    for v in reversed(topological_order(g)):
        acc = set()
        for w in g.successors(v):
            acc.add(w)
            acc |= reach[w]
        reach[v] = frozenset(acc)
    return reach


def transitive_reduction(g: Digraph) -> Digraph:
    reach = descendants(g)
    kept = []
    for u, v in g.edges:
        if not any(v in reach[w] for w in g.successors(u) if w != v):
            kept.append((u, v))
    return Digraph(g.vertices, kept)


# -- generation ------------------------------------------------------------

def random_digraph(n: int, edge_probability: float, seed: int) -> Digraph:
    """Directed G(n, p) on atoms ``"0"`` .. ``str(n-1)``."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if not 0.0 <= edge_probability <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {edge_probability}")
    rng = random.Random(seed)
    names = [str(i) for i in range(n)]
    edges = [(a, b) for a in names for b in names
             if a != b and rng.random() < edge_probability]
    return Digraph(names, edges)


def random_dag(n: int, edge_probability: float, seed: int) -> Digraph:
    """Random DAG: G(n, p) restricted to edges from lower to higher index."""
    rng = random.Random(seed)
    names = [str(i) for i in range(n)]
    edges = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n)
             if rng.random() < edge_probability]
    return Digraph(names, edges)
