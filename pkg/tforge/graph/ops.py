"""Primitive multigraph operations: deletion, contraction, identification, rank.

All functions are pure; surviving edges keep their EdgeIds.
"""

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from networkx.utils import UnionFind

from tforge.graph.models import EdgeId, Multigraph, VertexId
from tforge.runtime.exceptions import InvalidReferenceError, PreconditionError


@dataclass(frozen=True)
class MergeRecord:
    """Where every vertex of the source graph went.

    Vertices not merged map to themselves; merged vertices map to the
    smallest id of their group.
    """

    mapping: dict[VertexId, VertexId] = field(default_factory=dict)

    def __call__(self, v: VertexId) -> VertexId:
        return self.mapping.get(v, v)

    @property
    def merged_vertex(self) -> Optional[VertexId]:
        """The surviving id of the (single) merged group, if any merge happened."""
        targets = {t for s, t in self.mapping.items() if s != t}
        return min(targets) if targets else None

    def compose(self, later: "MergeRecord") -> "MergeRecord":
        """Record equivalent to applying self and then later."""
        keys = set(self.mapping) | set(later.mapping)
        return MergeRecord({v: later(self(v)) for v in keys})


@dataclass(frozen=True)
class UnionRecord:
    """Where the vertices and edges of the attached graph went in a union."""

    vertex_map: dict[VertexId, VertexId]
    edge_map: dict[EdgeId, EdgeId]


def _check_edges(g: Multigraph, edges: Iterable[EdgeId]) -> frozenset[EdgeId]:
    subset = frozenset(edges)
    for e in subset:
        if not g.has_edge(e):
            raise InvalidReferenceError("edge", e, g.name)
    return subset


def delete_edges(g: Multigraph, a: Iterable[EdgeId]) -> Multigraph:
    """G \\ A: same vertex set, every edge outside A kept with its id."""
    subset = _check_edges(g, a)
    if not subset:
        return g
    edges = {e: ends for e, ends in g.edges.items() if e not in subset}
    return Multigraph(g.vertex_set, edges, name=g.name, terminals=g.terminals)


def identify_vertices(g: Multigraph, vs: Iterable[VertexId]) -> Multigraph:
    """G . V': merge all of vs into its smallest id.

    Every edge between two members of vs becomes a loop on the merged vertex.
    """
    merged, _ = identify_with_record(g, vs)
    return merged


def identify_with_record(g: Multigraph, vs: Iterable[VertexId]) -> tuple[Multigraph, MergeRecord]:
    """identify_vertices plus the vertex merge record."""
    group = set(vs)
    if not group:
        raise PreconditionError("cannot identify an empty vertex set")
    for v in group:
        if not g.has_vertex(v):
            raise InvalidReferenceError("vertex", v, g.name)
    if len(group) == 1:
        return g, MergeRecord()

    target = min(group)
    record = MergeRecord({v: target for v in group})
    vertices = (g.vertex_set - group) | {target}
    edges = {e: (record(u), record(v)) for e, (u, v) in g.edges.items()}

    terminals = {}
    for tname, seq in g.terminals.items():
        mapped = tuple(record(v) for v in seq)
        if len(set(mapped)) == len(mapped):
            terminals[tname] = mapped

    return Multigraph(vertices, edges, name=g.name, terminals=terminals), record


def contract_edge(g: Multigraph, e: EdgeId) -> tuple[Multigraph, MergeRecord]:
    """G / e: delete e and identify its ends.

    Contracting a loop deletes it. Other edges parallel to e become loops.
    """
    u, v = g.endpoints(e)
    without = delete_edges(g, [e])
    if u == v:
        return without, MergeRecord()
    return identify_with_record(without, (u, v))


def contract_edges(g: Multigraph, edges: Iterable[EdgeId]) -> tuple[Multigraph, MergeRecord]:
    """Contract several edges one after another (ids of later edges survive)."""
    record = MergeRecord()
    current = g
    for e in edges:
        current, step = contract_edge(current, e)
        record = record.compose(step)
    return current, record


def rank_and_components(g: Multigraph, a: Iterable[EdgeId]) -> tuple[int, int]:
    """(r(A), c(A)) for the spanning subgraph (V, A): c components, r = |V| - c."""
    subset = _check_edges(g, a)
    forest = UnionFind(g.vertices)
    for e in subset:
        u, v = g.endpoints(e)
        forest.union(u, v)
    components = len({forest[v] for v in g.vertices})
    return g.num_vertices - components, components


def add_edges(
    g: Multigraph,
    pairs: Iterable[tuple[VertexId, VertexId]],
    first_edge_id: Optional[int] = None,
) -> tuple[Multigraph, list[EdgeId]]:
    """Add fresh edges numbered above the current maximum edge id."""
    next_id = g.max_edge_id + 1 if first_edge_id is None else first_edge_id
    edges = g.edges
    new_ids = []
    for u, v in pairs:
        while next_id in edges:
            next_id += 1
        edges[next_id] = (u, v)
        new_ids.append(next_id)
        next_id += 1
    return Multigraph(g.vertex_set, edges, name=g.name, terminals=g.terminals), new_ids


def add_vertices(g: Multigraph, vs: Iterable[VertexId]) -> Multigraph:
    return Multigraph(g.vertex_set | set(vs), g.edges, name=g.name, terminals=g.terminals)


def remove_vertices(g: Multigraph, vs: Iterable[VertexId]) -> Multigraph:
    """Delete vertices together with every edge incident to them."""
    gone = set(vs)
    for v in gone:
        if not g.has_vertex(v):
            raise InvalidReferenceError("vertex", v, g.name)
    edges = {e: (u, v) for e, (u, v) in g.edges.items() if u not in gone and v not in gone}
    terminals = {t: seq for t, seq in g.terminals.items() if not gone.intersection(seq)}
    return Multigraph(g.vertex_set - gone, edges, name=g.name, terminals=terminals)


def induced_subgraph(g: Multigraph, vs: Iterable[VertexId]) -> Multigraph:
    keep = set(vs)
    return remove_vertices(g, g.vertex_set - keep)


def relabel(
    g: Multigraph, mapping: Mapping[VertexId, VertexId], name: Optional[str] = None
) -> Multigraph:
    """Rename vertices through an injective mapping (unmapped ids stay)."""
    image = {v: mapping.get(v, v) for v in g.vertices}
    if len(set(image.values())) != len(image):
        raise PreconditionError("relabelling is not injective")
    edges = {e: (image[u], image[v]) for e, (u, v) in g.edges.items()}
    terminals = {t: tuple(image[v] for v in seq) for t, seq in g.terminals.items()}
    return Multigraph(image.values(), edges, name=name or g.name, terminals=terminals)


def disjoint_union(host: Multigraph, other: Multigraph) -> tuple[Multigraph, UnionRecord]:
    """Place other next to host, renumbering other's ids above host's maxima."""
    v_offset = host.max_vertex_id + 1
    e_offset = host.max_edge_id + 1
    vertex_map = {v: v + v_offset for v in other.vertices}
    edge_map = {e: e + e_offset for e in other.edge_ids}

    edges = host.edges
    for e, (u, v) in other.edges.items():
        edges[edge_map[e]] = (vertex_map[u], vertex_map[v])
    vertices = host.vertex_set | set(vertex_map.values())
    return Multigraph(vertices, edges, name=host.name), UnionRecord(vertex_map, edge_map)
