"""Multigraph value type with loops, parallel edges and named terminal lists."""

from collections import defaultdict
from typing import Iterable, Iterator, Mapping, Optional, Union

from tforge.runtime.exceptions import InvalidReferenceError, PreconditionError

VertexId = int
EdgeId = int
Endpoints = tuple[VertexId, VertexId]
EdgeSubset = frozenset[EdgeId]

EdgeSpec = Union[
    Mapping[EdgeId, tuple[VertexId, VertexId]], Iterable[tuple[EdgeId, VertexId, VertexId]]
]


def pair(u: VertexId, v: VertexId) -> Endpoints:
    """Unordered endpoint pair in normal form (smaller id first)."""
    return (u, v) if u <= v else (v, u)


class Multigraph:
    """Immutable multigraph: vertex ids plus identified edges.

    Edges map an EdgeId to an unordered endpoint pair stored as (min, max);
    u == v is a loop. Every operation on a graph returns a new value.
    Terminal lists (ordered distinct vertices under a name) travel with the
    graph so constructions can refer to them by name.
    """

    __slots__ = ("_vertices", "_edges", "name", "_terminals", "_incidence")

    def __init__(
        self,
        vertices: Iterable[VertexId],
        edges: EdgeSpec = (),
        name: Optional[str] = None,
        terminals: Optional[Mapping[str, Iterable[VertexId]]] = None,
    ):
        vertex_set = frozenset(vertices)
        for v in vertex_set:
            if not isinstance(v, int) or v < 0:
                raise PreconditionError(f"vertex ids must be non-negative integers, got {v!r}")

        items = edges.items() if isinstance(edges, Mapping) else ((e, (u, v)) for e, u, v in edges)
        edge_map: dict[EdgeId, Endpoints] = {}
        for eid, (u, v) in items:
            if not isinstance(eid, int) or eid < 0:
                raise PreconditionError(f"edge ids must be non-negative integers, got {eid!r}")
            if eid in edge_map:
                raise PreconditionError(f"duplicate edge id {eid}")
            for end in (u, v):
                if end not in vertex_set:
                    raise InvalidReferenceError("vertex", end, name)
            edge_map[eid] = pair(u, v)

        terminal_map: dict[str, tuple[VertexId, ...]] = {}
        for tname, seq in (terminals or {}).items():
            seq = tuple(seq)
            for v in seq:
                if v not in vertex_set:
                    raise InvalidReferenceError("vertex", v, name)
            if len(set(seq)) != len(seq):
                raise PreconditionError(f"terminal list '{tname}' repeats a vertex")
            terminal_map[tname] = seq

        self._vertices = vertex_set
        self._edges = edge_map
        self.name = name
        self._terminals = terminal_map
        self._incidence: Optional[dict[VertexId, list[EdgeId]]] = None

    # ------------------------------------------------------------------
    # Builders
    # ------------------------------------------------------------------

    @classmethod
    def from_edges(
        cls,
        pairs: Iterable[tuple[VertexId, VertexId]],
        vertices: Iterable[VertexId] = (),
        name: Optional[str] = None,
        first_edge_id: int = 0,
    ) -> "Multigraph":
        """Build a graph numbering edges consecutively in the given order."""
        pairs = list(pairs)
        vertex_set = set(vertices)
        for u, v in pairs:
            vertex_set.update((u, v))
        edges = {first_edge_id + i: (u, v) for i, (u, v) in enumerate(pairs)}
        return cls(vertex_set, edges, name=name)

    def with_name(self, name: Optional[str]) -> "Multigraph":
        return Multigraph(self._vertices, self._edges, name=name, terminals=self._terminals)

    def with_terminals(self, **lists: Iterable[VertexId]) -> "Multigraph":
        terminals = dict(self._terminals)
        terminals.update({k: tuple(v) for k, v in lists.items()})
        return Multigraph(self._vertices, self._edges, name=self.name, terminals=terminals)

    # ------------------------------------------------------------------
    # Accessors
    # ------------------------------------------------------------------

    @property
    def vertices(self) -> tuple[VertexId, ...]:
        """Vertex ids in increasing order."""
        return tuple(sorted(self._vertices))

    @property
    def vertex_set(self) -> frozenset[VertexId]:
        return self._vertices

    @property
    def edges(self) -> dict[EdgeId, Endpoints]:
        """Copy of the edge map (EdgeId -> (min endpoint, max endpoint))."""
        return dict(self._edges)

    @property
    def edge_ids(self) -> tuple[EdgeId, ...]:
        return tuple(sorted(self._edges))

    @property
    def terminals(self) -> dict[str, tuple[VertexId, ...]]:
        return dict(self._terminals)

    def terminal(self, tname: str) -> tuple[VertexId, ...]:
        if tname not in self._terminals:
            raise InvalidReferenceError("terminal list", tname, self.name)
        return self._terminals[tname]

    @property
    def num_vertices(self) -> int:
        return len(self._vertices)

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def has_vertex(self, v: VertexId) -> bool:
        return v in self._vertices

    def has_edge(self, e: EdgeId) -> bool:
        return e in self._edges

    def endpoints(self, e: EdgeId) -> Endpoints:
        if e not in self._edges:
            raise InvalidReferenceError("edge", e, self.name)
        return self._edges[e]

    def iter_edges(self) -> Iterator[tuple[EdgeId, VertexId, VertexId]]:
        """Yield (eid, u, v) in increasing edge id order."""
        for eid in sorted(self._edges):
            u, v = self._edges[eid]
            yield eid, u, v

    def is_loop(self, e: EdgeId) -> bool:
        u, v = self.endpoints(e)
        return u == v

    def loops(self) -> frozenset[EdgeId]:
        return frozenset(e for e, (u, v) in self._edges.items() if u == v)

    def loop_count(self, v: Optional[VertexId] = None) -> int:
        """Number of loops, in the whole graph or at one vertex."""
        if v is None:
            return sum(1 for u, w in self._edges.values() if u == w)
        self._check_vertex(v)
        return sum(1 for u, w in self._edges.values() if u == w == v)

    def multiplicity(self, u: VertexId, v: VertexId) -> int:
        """epsilon(u, v): number of edges with endpoints {u, v}."""
        self._check_vertex(u)
        self._check_vertex(v)
        key = pair(u, v)
        return sum(1 for ends in self._edges.values() if ends == key)

    def multiplicities(self) -> dict[Endpoints, int]:
        """epsilon for every endpoint pair that carries at least one edge."""
        counts: dict[Endpoints, int] = defaultdict(int)
        for ends in self._edges.values():
            counts[ends] += 1
        return dict(counts)

    def incident_edges(self, v: VertexId) -> list[EdgeId]:
        self._check_vertex(v)
        return list(self._incidence_map().get(v, []))

    def degree(self, v: VertexId) -> int:
        """Number of non-loop edges at v; loops are counted by loop_count."""
        return sum(1 for e in self.incident_edges(v) if not self.is_loop(e))

    def neighbors(self, v: VertexId) -> list[VertexId]:
        """Distinct vertices joined to v by a non-loop edge, sorted."""
        result = set()
        for e in self.incident_edges(v):
            a, b = self._edges[e]
            if a != b:
                result.add(b if a == v else a)
        return sorted(result)

    @property
    def max_vertex_id(self) -> int:
        return max(self._vertices) if self._vertices else -1

    @property
    def max_edge_id(self) -> int:
        return max(self._edges) if self._edges else -1

    # ------------------------------------------------------------------
    # Internals
    # ------------------------------------------------------------------

    def _check_vertex(self, v: VertexId) -> None:
        if v not in self._vertices:
            raise InvalidReferenceError("vertex", v, self.name)

    def _incidence_map(self) -> dict[VertexId, list[EdgeId]]:
        if self._incidence is None:
            incidence: dict[VertexId, list[EdgeId]] = defaultdict(list)
            for eid in sorted(self._edges):
                u, v = self._edges[eid]
                incidence[u].append(eid)
                if v != u:
                    incidence[v].append(eid)
            self._incidence = dict(incidence)
        return self._incidence

    def __eq__(self, other: object) -> bool:
        """Labelled equality: same vertex ids and the same edge map."""
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, frozenset(self._edges.items())))

    def __repr__(self) -> str:
        label = f" '{self.name}'" if self.name else ""
        return f"<Multigraph{label} |V|={self.num_vertices} |E|={self.num_edges}>"
