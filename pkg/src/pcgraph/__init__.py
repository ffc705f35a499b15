"""Partial Cartesian products of directed graphs and generic subtyping graphs."""
from .analysis import (
    CountReport,
    NotADAGError,
    is_isomorphic,
    predicted_edge_count,
    predicted_vertex_count,
    random_digraph,
    transitive_reduction,
)
from .graph import (
    Digraph,
    EdgePartition,
    GraphError,
    NotASubsetError,
    cartesian_product,
    disjoint_union,
    edge_partition,
    induced_subgraph,
)
from .products import gsp, pcgp, yero

__version__ = "0.1.0"
