"""Partial Cartesian products of directed graphs.

``pcgp`` builds the partial product directly from the four edge classes,
``gsp`` builds it by contracting clusters of the full Cartesian product, and
``yero`` is the rival partial product that keeps every vertex pair but
restricts which factor edges are copied.
"""
from __future__ import annotations

from typing import Iterable

from .graph import (
    Digraph,
    Label,
    _check_subset,
    cartesian_product,
    disjoint_union,
    edge_partition,
    induced_subgraph,
)


def pcgp(g1: Digraph, vp: Iterable[Label], g2: Digraph) -> Digraph:
    """Partial Cartesian product of ``g1`` and ``g2`` relative to ``vp``.

    Product vertices ``u`` in ``vp`` become pairs ``(u, v)`` for every ``v``
    in ``g2``; every other vertex of ``g1`` survives as itself. Edges between
    the two sides are replicated once per vertex of ``g2``.
    """
    vp = _check_subset(g1, vp, "product vertex set")
    vn = g1.vertices - vp
    parts = edge_partition(g1, vp)

    core = cartesian_product(induced_subgraph(g1, vp), g2)
    g = disjoint_union(core, induced_subgraph(g1, vn))

    cross = [((u1, v), u2) for u1, u2 in parts.e_pn for v in g2.vertices]
    cross += [(u1, (u2, v)) for u1, u2 in parts.e_np for v in g2.vertices]
    return Digraph(g.vertices, g.edges | frozenset(cross))


def gsp(g1: Digraph, vp: Iterable[Label], g2: Digraph) -> Digraph:
    """Partial product via contraction of the full Cartesian product.

    Each non-product vertex ``u`` has its copies ``(u, v)`` merged back into
    ``u``. Edges inside a cluster become loops and are dropped; parallel
    edges produced by the merge collapse into one.
    """
    vp = _check_subset(g1, vp, "product vertex set")
    full = cartesian_product(g1, g2)

    def merged(x):
        u = x[0]
        return x if u in vp else u

    edges = set()
    for s, t in full.edges:
        s, t = merged(s), merged(t)
        if s != t:
            edges.add((s, t))
    return Digraph({merged(x) for x in full.vertices}, edges)


def yero(g2: Digraph, s: Iterable[Label], g1: Digraph) -> Digraph:
    """The partial product ``g2 □_S g1``, with ``s`` a vertex subset of ``g1``.

    Vertices are all pairs ``(a, u)``. Copies of ``g1`` edges exist in every
    layer; a ``g2`` edge ``a -> b`` is copied only at coordinates ``u`` in ``s``.
    """
    s = _check_subset(g1, s, "product vertex set")
    vertices = [(a, u) for a in g2.vertices for u in g1.vertices]
    edges = [((a, u), (a, w)) for a in g2.vertices for u, w in g1.edges]
    edges += [((a, u), (b, u)) for a, b in g2.edges for u in s]
    return Digraph(vertices, edges)
