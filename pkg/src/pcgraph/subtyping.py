"""Finite unrollings of the generic subtyping relation.

Each round pairs the generic classes of the subclassing graph with the
wildcard arguments over the previous round's types, ordered by
containment::

    S[i+1] = pcgp(C, generic classes, containment_graph(S[i]))

starting from the one-vertex containment graph holding only ``?``.
Non-generic classes pass through every round unchanged.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Tuple, Union

from .analysis import descendants, predicted_edge_count, predicted_vertex_count
from .classdecl import ClassTable, subclassing_graph
from .graph import Digraph, label_text
from .products import pcgp


# -- terms -----------------------------------------------------------------

class _Term:
    """Structural equality with a cached hash; terms nest deeply and are hashed often."""

    def _parts(self) -> tuple:
        return tuple([getattr(self, name) for name in self.__match_args__])

    def __eq__(self, other):
        if self is other:
            return True
        if type(other) is not type(self):
            return NotImplemented
        return hash(self) == hash(other) and self._parts() == other._parts()

    def __hash__(self):
        try:
            return self.__dict__["_hash"]
        except KeyError:
            h = hash((type(self).__name__, *self._parts()))
            object.__setattr__(self, "_hash", h)
            return h

    def sort_key(self):
        return (str(self),)


@dataclass(frozen=True, eq=False)
class NonGeneric(_Term):
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, eq=False)
class GenericApp(_Term):
    name: str
    arg: "WildcardArg"

    def __str__(self) -> str:
        return f"{self.name}<{self.arg}>"


TypeLabel = Union[NonGeneric, GenericApp]


@dataclass(frozen=True, eq=False)
class Default(_Term):
    """The unbounded wildcard ``?``."""

    def __str__(self) -> str:
        return "?"


@dataclass(frozen=True, eq=False)
class Invariant(_Term):
    t: TypeLabel

    def __str__(self) -> str:
        return str(self.t)


@dataclass(frozen=True, eq=False)
class Covariant(_Term):
    t: TypeLabel

    def __str__(self) -> str:
        return f"? extends {self.t}"


@dataclass(frozen=True, eq=False)
class Contravariant(_Term):
    t: TypeLabel

    def __str__(self) -> str:
        return f"? super {self.t}"


WildcardArg = Union[Default, Invariant, Covariant, Contravariant]
DEFAULT = Default()


# -- containment -----------------------------------------------------------

def _unique_top(s: Digraph):
    tops = [v for v in s.sorted_vertices() if s.out_degree(v) == 0]
    if len(tops) != 1:
        names = ", ".join(label_text(t) for t in tops) or "none"
        raise ValueError(f"identify_top needs a unique top type, found: {names}")
    return tops[0]


def containment_graph(s: Digraph, identify_top: bool = False) -> Digraph:
    """Wildcard arguments over the types of ``s``, ordered by containment.

    An edge ``a -> b`` means ``a`` is contained in ``b``. Covariant bounds
    follow the (transitively closed) subtype order, contravariant bounds
    run against it, an exact argument sits below both of its bounded
    forms, and the outermost bounds feed into ``?``. With ``identify_top``
    the bound ``? extends Top`` is the same argument as ``?``.
    """
    reach = descendants(s)  # rejects cycles
    vertices = {DEFAULT}
    edges = set()
    for t in s.vertices:
        vertices |= {Invariant(t), Covariant(t), Contravariant(t)}
        edges.add((Invariant(t), Covariant(t)))
        edges.add((Invariant(t), Contravariant(t)))
        for u in reach[t]:
            edges.add((Covariant(t), Covariant(u)))
            edges.add((Contravariant(u), Contravariant(t)))
        if s.out_degree(t) == 0:
            edges.add((Covariant(t), DEFAULT))
        if s.in_degree(t) == 0:
            edges.add((Contravariant(t), DEFAULT))
    if not identify_top or not s.vertices:
        return Digraph(vertices, edges)

    top = Covariant(_unique_top(s))

    def merge(x):
        return DEFAULT if x == top else x

    merged = {(merge(a), merge(b)) for a, b in edges}
    return Digraph({merge(v) for v in vertices}, {(a, b) for a, b in merged if a != b})


def empty_containment() -> Digraph:
    """Containment graph over no types: the single vertex ``?``."""
    return Digraph([DEFAULT])


# -- iteration -------------------------------------------------------------

def to_type_label(x) -> TypeLabel:
    if isinstance(x, tuple):
        return GenericApp(x[0], x[1])
    return NonGeneric(x)


@dataclass
class SubtypingResult:
    graph: Digraph
    iteration: int
    per_iteration_counts: List[Tuple[int, int]] = field(default_factory=list)
    predicted_counts: List[Tuple[int, int]] = field(default_factory=list)
    stages: List[Digraph] = field(default_factory=list)
    arguments: List[Digraph] = field(default_factory=list)


def subtyping_iterate(table: ClassTable, depth: int, identify_top: bool = False) -> SubtypingResult:
    """Build ``S[depth]``; ``stages[i]`` holds ``S[i+1]``.

    ``arguments[i]`` is the containment graph that fed round ``i + 1``.
    """
    if depth < 0:
        raise ValueError(f"depth must be non-negative, got {depth}")
    classes, generic = subclassing_graph(table)
    if depth == 0:
        if generic:
            raise ValueError(
                "depth 0 is undefined when generic classes are declared; use depth >= 1")
        return SubtypingResult(classes.relabel(to_type_label), 0)

    result = SubtypingResult(Digraph(), depth)
    args = empty_containment()
    for i in range(depth):
        if i:
            args = containment_graph(result.stages[-1], identify_top)
        raw = pcgp(classes, generic, args)
        s = raw.relabel(to_type_label)
        result.stages.append(s)
        result.per_iteration_counts.append((s.num_vertices, s.num_edges))
        result.predicted_counts.append((predicted_vertex_count(classes, generic, args),
                                        predicted_edge_count(classes, generic, args)))
        result.arguments.append(args)
    result.graph = result.stages[-1]
    return result


def check_nongeneric_preservation(result: SubtypingResult, table: ClassTable) -> bool:
    expected = {NonGeneric(n) for n in table.nongeneric}
    stages = result.stages or [result.graph]
    return all(expected <= s.vertices for s in stages)


def product_correspondence(stage: Digraph, table: ClassTable, args: Digraph) -> bool:
    """Generic applications are exactly generic classes x arguments; the rest are the non-generic classes."""
    apps = {v for v in stage.vertices if isinstance(v, GenericApp)}
    plain = {v for v in stage.vertices if isinstance(v, NonGeneric)}
    want_apps = {GenericApp(c, a) for c in table.generic for a in args.vertices}
    return (apps == want_apps and plain == {NonGeneric(c) for c in table.nongeneric}
            and len(apps) + len(plain) == stage.num_vertices)

