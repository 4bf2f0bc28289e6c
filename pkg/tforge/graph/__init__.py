"""Multigraphs with loops, parallel edges and terminal lists."""

from tforge.graph.io import parse_graph, read_graph, render_graph, write_graph
from tforge.graph.models import EdgeId, EdgeSubset, Multigraph, VertexId, pair
from tforge.graph.ops import (
    MergeRecord,
    UnionRecord,
    add_edges,
    add_vertices,
    contract_edge,
    contract_edges,
    delete_edges,
    disjoint_union,
    identify_vertices,
    identify_with_record,
    induced_subgraph,
    rank_and_components,
    relabel,
    remove_vertices,
)
from tforge.graph.structure import (
    GraphStructure,
    is_connected,
    separates,
    structure_queries,
    to_networkx,
)

__all__ = [
    "EdgeId",
    "EdgeSubset",
    "GraphStructure",
    "MergeRecord",
    "Multigraph",
    "UnionRecord",
    "VertexId",
    "add_edges",
    "add_vertices",
    "contract_edge",
    "contract_edges",
    "delete_edges",
    "disjoint_union",
    "identify_vertices",
    "identify_with_record",
    "induced_subgraph",
    "is_connected",
    "pair",
    "parse_graph",
    "rank_and_components",
    "read_graph",
    "relabel",
    "remove_vertices",
    "render_graph",
    "separates",
    "structure_queries",
    "to_networkx",
    "write_graph",
]
