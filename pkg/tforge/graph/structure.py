"""Structural queries: bridges, loops, blocks, components and parallel classes."""

from dataclasses import dataclass, field
from typing import Hashable, Iterable

import networkx as nx

from tforge.graph.models import EdgeId, Endpoints, Multigraph, VertexId


@dataclass
class GraphStructure:
    """Result of structure_queries; every graph value keeps the original ids."""

    bridges: frozenset[EdgeId]
    loops: frozenset[EdgeId]
    blocks: list[Multigraph] = field(default_factory=list)
    components: list[Multigraph] = field(default_factory=list)
    parallel_classes: dict[Endpoints, frozenset[EdgeId]] = field(default_factory=dict)
    is_connected: bool = True

    def to_dict(self) -> dict:
        return {
            "bridges": sorted(self.bridges),
            "loops": sorted(self.loops),
            "blocks": [list(b.edge_ids) for b in self.blocks],
            "components": [list(c.vertices) for c in self.components],
            "parallel_classes": {
                f"{u}-{v}": sorted(ids) for (u, v), ids in sorted(self.parallel_classes.items())
            },
            "is_connected": self.is_connected,
        }


def to_networkx(g: Multigraph) -> nx.MultiGraph:
    """Export to networkx, edge ids stored as keys."""
    graph = nx.MultiGraph(name=g.name or "")
    graph.add_nodes_from(g.vertices)
    for eid, u, v in g.iter_edges():
        graph.add_edge(u, v, key=eid)
    return graph


def simple_skeleton(g: Multigraph) -> nx.Graph:
    """Underlying simple graph: loops dropped, parallel classes collapsed."""
    graph = nx.Graph()
    graph.add_nodes_from(g.vertices)
    graph.add_edges_from((u, v) for _, u, v in g.iter_edges() if u != v)
    return graph


def parallel_classes(g: Multigraph) -> dict[Endpoints, frozenset[EdgeId]]:
    """Non-loop endpoint pair -> ids of all edges joining that pair."""
    classes: dict[Endpoints, set[EdgeId]] = {}
    for eid, u, v in g.iter_edges():
        if u != v:
            classes.setdefault((u, v), set()).add(eid)
    return {key: frozenset(ids) for key, ids in classes.items()}


def _subgraph_on_edges(g: Multigraph, edge_ids: Iterable[EdgeId]) -> Multigraph:
    ids = set(edge_ids)
    edges = {e: ends for e, ends in g.edges.items() if e in ids}
    vertices = {v for ends in edges.values() for v in ends}
    return Multigraph(vertices, edges, name=g.name)


def structure_queries(g: Multigraph) -> GraphStructure:
    """Bridges, loops, blocks, components and parallel classes of g.

    Blocks are the maximal 2-connected pieces plus bridge edges; each loop
    forms a block on its own. Isolated vertices belong to no block but do
    form components.
    """
    skeleton = simple_skeleton(g)
    classes = parallel_classes(g)

    bridges = frozenset(
        next(iter(classes[key]))
        for key in (tuple(sorted(b)) for b in nx.bridges(skeleton))
        if len(classes[key]) == 1
    )

    blocks = []
    for block_pairs in nx.biconnected_component_edges(skeleton):
        ids = set()
        for u, v in block_pairs:
            ids |= classes[(min(u, v), max(u, v))]
        blocks.append(_subgraph_on_edges(g, ids))
    loops = g.loops()
    blocks.extend(_subgraph_on_edges(g, [e]) for e in sorted(loops))
    blocks.sort(key=lambda b: b.edge_ids[0])

    components = []
    for vertex_group in nx.connected_components(skeleton):
        edges = {e: (u, v) for e, (u, v) in g.edges.items() if u in vertex_group}
        components.append(Multigraph(vertex_group, edges, name=g.name))
    components.sort(key=lambda c: c.vertices[0])

    return GraphStructure(
        bridges=bridges,
        loops=loops,
        blocks=blocks,
        components=components,
        parallel_classes=classes,
        is_connected=len(components) <= 1,
    )


def is_connected(g: Multigraph) -> bool:
    if g.num_vertices == 0:
        return True
    return nx.is_connected(simple_skeleton(g))


def separates(g: Multigraph, cut: Iterable[VertexId], side: Iterable[VertexId]) -> bool:
    """True when no edge of g joins side to a vertex outside side and cut."""
    cut_set = set(cut)
    side_set = set(side)
    for _, u, v in g.iter_edges():
        if (u in side_set) != (v in side_set):
            other = v if u in side_set else u
            if other not in cut_set:
                return False
    return True


def block_edge_groups(adjacency: dict[Hashable, set[Hashable]]) -> list[list[tuple]]:
    """Biconnected components of a simple graph given as an adjacency map.

    Iterative Tarjan lowpoint search with an edge stack; returns one list
    of (u, v) pairs per block, in discovery order. Used on the engine's hot
    path where building a networkx graph per recursion node is too slow.
    """
    discovery: dict[Hashable, int] = {}
    low: dict[Hashable, int] = {}
    groups: list[list[tuple]] = []

    for root in adjacency:
        if root in discovery:
            continue
        discovery[root] = low[root] = 0
        counter = 1
        edge_stack: list[tuple] = []
        stack = [(root, None, iter(adjacency[root]))]

        while stack:
            node, parent, neighbours = stack[-1]
            advanced = False
            for nxt in neighbours:
                if nxt == parent:
                    continue
                if nxt not in discovery:
                    discovery[nxt] = low[nxt] = counter
                    counter += 1
                    edge_stack.append((node, nxt))
                    stack.append((nxt, node, iter(adjacency[nxt])))
                    advanced = True
                    break
                if discovery[nxt] < discovery[node]:
                    edge_stack.append((node, nxt))
                    low[node] = min(low[node], discovery[nxt])
            if advanced:
                continue

            stack.pop()
            if parent is None:
                continue
            low[parent] = min(low[parent], low[node])
            if low[node] >= discovery[parent]:
                group = []
                while True:
                    edge = edge_stack.pop()
                    group.append(edge)
                    if edge == (parent, node):
                        break
                groups.append(group)

    return groups
