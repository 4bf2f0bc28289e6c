"""Terminal gluing, G_S, partition quotients and Whitney twists."""

import logging
from dataclasses import dataclass
from typing import Iterable, Optional

from tforge.constructions.terminals import PairSet, Partition, TerminalList
from tforge.graph.models import EdgeId, Multigraph, VertexId
from tforge.graph.ops import add_edges, identify_vertices
from tforge.graph.structure import separates
from tforge.runtime.exceptions import ArityError, InvalidCutError, InvalidReferenceError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GlueRecord:
    """Where the attached graph's vertices and edges landed in a glued graph."""

    vertex_map: dict[VertexId, VertexId]
    edge_map: dict[EdgeId, EdgeId]

    def vertex(self, v: VertexId) -> VertexId:
        return self.vertex_map[v]

    def edge(self, e: EdgeId) -> EdgeId:
        return self.edge_map[e]


def _check_arity(gt: TerminalList, wt: TerminalList) -> None:
    if gt.k != wt.k:
        raise ArityError("terminal list lengths", gt.k, wt.k)
    if gt.k < 1:
        raise ArityError("terminal list length (at least)", 1, gt.k)


def attach_with_record(
    gt: TerminalList, wt: TerminalList, name: Optional[str] = None
) -> tuple[Multigraph, GlueRecord]:
    """Attach W(w_1..w_k) to G(u_1..u_k) keeping every id of G.

    Each w_i lands on u_i and every other id of W is shifted above G's
    maxima; the record maps W's ids. Rotor attachment relies on this so that
    marked edges and vertex labels of the host survive each step.
    """
    _check_arity(gt, wt)
    host, other = gt.graph, wt.graph
    v_offset = host.max_vertex_id + 1
    e_offset = host.max_edge_id + 1

    vertex_map = {v: v + v_offset for v in other.vertices}
    for u, w in zip(gt.vertices, wt.vertices):
        vertex_map[w] = u
    edge_map = {e: e + e_offset for e in other.edge_ids}

    edges = host.edges
    for e, (a, b) in other.edges.items():
        edges[edge_map[e]] = (vertex_map[a], vertex_map[b])
    vertices = host.vertex_set | set(vertex_map.values())

    glued = Multigraph(vertices, edges, name=name or host.name, terminals=host.terminals)
    return glued, GlueRecord(vertex_map, edge_map)


def glue_with_record(
    gt: TerminalList, wt: TerminalList, name: Optional[str] = None
) -> tuple[Multigraph, GlueRecord]:
    """G(u_1..u_k) ⊔ W(w_1..w_k) where each merged vertex carries its w_i id.

    W keeps all of its ids and the rest of G is shifted above W's maxima.
    The record maps G's ids; G's named terminal lists are carried through it
    and take precedence over W's lists of the same name.
    """
    _check_arity(gt, wt)
    glued, record = attach_with_record(wt, gt, name=name or gt.graph.name)
    carried = {
        tname: tuple(record.vertex(v) for v in seq)
        for tname, seq in gt.graph.terminals.items()
    }
    return glued.with_terminals(**carried), record


def glue(gt: TerminalList, wt: TerminalList, name: Optional[str] = None) -> Multigraph:
    """Disjoint union of the two graphs with u_i merged into w_i for every i.

    The result has |V_G| + |V_W| - k vertices and |E_G| + |E_W| edges.
    """
    glued, _ = glue_with_record(gt, wt, name)
    return glued


def add_edges_S(gt: TerminalList, s: PairSet) -> Multigraph:  # noqa: N802
    """G_S: one fresh edge u_i u_j for each {i, j} in S."""
    if s.k != gt.k:
        raise ArityError("pair set index range", gt.k, s.k)
    graph, _ = add_edges(gt.graph, [(gt[i], gt[j]) for i, j in s.sorted_pairs()])
    return graph


def quotient(gt: TerminalList, p: Partition) -> Multigraph:
    """G(P): for each block of p, the terminals it indexes merged into one vertex."""
    if p.k != gt.k:
        raise ArityError("partition index range", gt.k, p.k)
    graph = gt.graph
    for block in p.blocks:
        if len(block) > 1:
            graph = identify_vertices(graph, [gt[i] for i in block])
    return graph


def whitney_twist(
    g: Multigraph, cut: tuple[VertexId, VertexId], side: Iterable[VertexId]
) -> Multigraph:
    """Re-attach side's edges at the 2-cut with the two cut vertices swapped."""
    u1, u2 = cut
    side_set = set(side)
    for v in (u1, u2, *side_set):
        if not g.has_vertex(v):
            raise InvalidReferenceError("vertex", v, g.name)
    if u1 == u2:
        raise InvalidCutError("cut vertices must be distinct")
    if not side_set:
        raise InvalidCutError("side is empty")
    if u1 in side_set or u2 in side_set:
        raise InvalidCutError("side contains a cut vertex")
    if not separates(g, cut, side_set):
        raise InvalidCutError("an edge joins the side to a vertex outside the cut")

    swap = {u1: u2, u2: u1}
    edges = {}
    for e, a, b in g.iter_edges():
        if a in side_set and b in swap:
            b = swap[b]
        elif b in side_set and a in swap:
            a = swap[a]
        edges[e] = (a, b)
    logger.debug(f"Whitney twist of {g!r} at {cut} moved side {sorted(side_set)}")
    return Multigraph(g.vertex_set, edges, name=g.name, terminals=g.terminals)
