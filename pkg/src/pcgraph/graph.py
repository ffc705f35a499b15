"""Simple directed graphs with structured vertex labels.

A label is either an atom (a non-empty ``str``) or a pair ``(left, right)``
of labels, so iterated products keep their provenance as nested tuples.
Objects exposing a ``sort_key()`` method (type terms, wildcard arguments)
are accepted as opaque atoms.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Hashable, Iterable, Iterator, Tuple

Label = Hashable
Edge = Tuple[Label, Label]


class GraphError(ValueError):
    """Raised when vertex/edge data does not describe a simple digraph."""


class NotASubsetError(ValueError):
    """Raised when a vertex set that must lie inside a graph does not."""

    def __init__(self, missing: Iterable[Label], what: str = "vertex set"):
        self.missing = sorted(missing, key=label_key)
        names = ", ".join(label_text(m) for m in self.missing)
        super().__init__(f"{what} contains labels not in the graph: {names}")


def is_label(x: Any) -> bool:
    if isinstance(x, str):
        return bool(x)
    if isinstance(x, tuple):
        return len(x) == 2 and is_label(x[0]) and is_label(x[1])
    return callable(getattr(x, "sort_key", None))


def label_key(x: Label) -> tuple:
    """Total order on labels: atoms, then pairs, then opaque terms."""
    if isinstance(x, str):
        return (0, x)
    if isinstance(x, tuple):
        return (1, label_key(x[0]), label_key(x[1]))
    return (2, type(x).__name__, x.sort_key())


def label_text(x: Label) -> str:
    """Human-readable rendering: ``a``, ``(a,x)``, ``C<?>``."""
    if isinstance(x, str):
        return x
    if isinstance(x, tuple):
        return f"({label_text(x[0])},{label_text(x[1])})"
    return str(x)


class Digraph:
    """Immutable simple digraph (no loops, no parallel edges)."""

    __slots__ = ("_vertices", "_edges", "_succ", "_pred")

    def __init__(self, vertices: Iterable[Label] = (), edges: Iterable[Edge] = ()):
        vs = frozenset(vertices)
        es = frozenset((s, t) for s, t in edges)
        for v in vs:
            if not is_label(v):
                raise GraphError(f"invalid vertex label: {v!r}")
        succ: dict = {v: set() for v in vs}
        pred: dict = {v: set() for v in vs}
        for s, t in es:
            if s not in vs or t not in vs:
                bad = s if s not in vs else t
                raise GraphError(
                    f"edge {label_text(s)} -> {label_text(t)} uses unknown vertex {label_text(bad)}"
                )
            if s == t:
                raise GraphError(f"self-loop on {label_text(s)} is not allowed")
            succ[s].add(t)
            pred[t].add(s)
        self._vertices = vs
        self._edges = es
        self._succ = {v: frozenset(n) for v, n in succ.items()}
        self._pred = {v: frozenset(n) for v, n in pred.items()}

    @property
    def vertices(self) -> frozenset:
        return self._vertices

    @property
    def edges(self) -> frozenset:
        return self._edges

    @property
    def num_vertices(self) -> int:
        return len(self._vertices)

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def successors(self, v: Label) -> frozenset:
        return self._succ[v]

    def predecessors(self, v: Label) -> frozenset:
        return self._pred[v]

    def out_degree(self, v: Label) -> int:
        return len(self._succ[v])

    def in_degree(self, v: Label) -> int:
        return len(self._pred[v])

    def has_edge(self, s: Label, t: Label) -> bool:
        return (s, t) in self._edges

    def sorted_vertices(self) -> list:
        return sorted(self._vertices, key=label_key)

    def sorted_edges(self) -> list:
        return sorted(self._edges, key=lambda e: (label_key(e[0]), label_key(e[1])))

    def relabel(self, mapping) -> Digraph:
        """Apply an injective relabeling (dict or callable)."""
        f = mapping.__getitem__ if isinstance(mapping, dict) else mapping
        new = {v: f(v) for v in self._vertices}
        if len(set(new.values())) != len(new):
            raise GraphError("relabeling is not injective")
        return Digraph(new.values(), ((new[s], new[t]) for s, t in self._edges))

    def __contains__(self, v: object) -> bool:
        return v in self._vertices

    def __iter__(self) -> Iterator[Label]:
        return iter(self.sorted_vertices())

    def __len__(self) -> int:
        return len(self._vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, self._edges))

    def __repr__(self) -> str:
        return f"Digraph(|V|={self.num_vertices}, |E|={self.num_edges})"


@dataclass(frozen=True)
class EdgePartition:
    """Edges of a graph split by whether each endpoint is a product vertex."""

    e_pp: frozenset
    e_pn: frozenset
    e_np: frozenset
    e_nn: frozenset

    @property
    def product_side(self) -> int:
        """Edges touching at least one product vertex."""
        return len(self.e_pp) + len(self.e_pn) + len(self.e_np)


def _check_subset(g: Digraph, s: Iterable[Label], what: str = "vertex set") -> frozenset:
    s = frozenset(s)
    missing = s - g.vertices
    if missing:
        raise NotASubsetError(missing, what)
    return s


def induced_subgraph(g: Digraph, s: Iterable[Label]) -> Digraph:
    s = _check_subset(g, s)
    return Digraph(s, ((u, v) for u, v in g.edges if u in s and v in s))


def edge_partition(g1: Digraph, vp: Iterable[Label]) -> EdgePartition:
    vp = _check_subset(g1, vp, "product vertex set")
    buckets: dict = {(True, True): set(), (True, False): set(),
                     (False, True): set(), (False, False): set()}
    for u, v in g1.edges:
        buckets[(u in vp, v in vp)].add((u, v))
    return EdgePartition(
        e_pp=frozenset(buckets[(True, True)]),
        e_pn=frozenset(buckets[(True, False)]),
        e_np=frozenset(buckets[(False, True)]),
        e_nn=frozenset(buckets[(False, False)]),
    )


def cartesian_product(g1: Digraph, g2: Digraph) -> Digraph:
    """Standard Cartesian product on pair labels ``(u, v)``."""
    vertices = [(u, v) for u in g1.vertices for v in g2.vertices]
    edges = [((u, a), (u, b)) for u in g1.vertices for a, b in g2.edges]
    edges += [((a, v), (b, v)) for a, b in g1.edges for v in g2.vertices]
    return Digraph(vertices, edges)


def disjoint_union(g1: Digraph, g2: Digraph) -> Digraph:
    common = g1.vertices & g2.vertices
    if common:
        names = ", ".join(label_text(v) for v in sorted(common, key=label_key))
        raise GraphError(f"vertex sets overlap: {names}")
    return Digraph(g1.vertices | g2.vertices, g1.edges | g2.edges)
