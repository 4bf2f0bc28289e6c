"""Triangles as edge triples, and the isolated-triangle invariant."""

import itertools

from tforge.graph.models import EdgeId, Multigraph


def find_triangles(g: Multigraph) -> list[frozenset[EdgeId]]:
    """Every triple of distinct edges forming a 3-cycle on three distinct vertices.

    Parallel edges give several triangles on one vertex triple.
    """
    by_pair: dict[tuple[int, int], list[EdgeId]] = {}
    for e, u, v in g.iter_edges():
        if u != v:
            by_pair.setdefault((u, v), []).append(e)

    triangles = []
    for a, b, c in itertools.combinations(g.vertices, 3):
        ab, bc, ac = by_pair.get((a, b), []), by_pair.get((b, c), []), by_pair.get((a, c), [])
        for triple in itertools.product(ab, bc, ac):
            triangles.append(frozenset(triple))
    return triangles


def triangle_edge_distinguisher(g: Multigraph) -> bool:
    """True iff some triangle shares no edge with any other triangle."""
    triangles = find_triangles(g)
    for i, t in enumerate(triangles):
        if all(not (t & other) for j, other in enumerate(triangles) if j != i):
            return True
    return False
