"""Witnesses (G, e, H, f, phi, psi) of membership in the class of quaternions with
G\\e ≅ H\\f and G/e ≅ H/f.

Index convention: u_i is the i-th smallest vertex id of G and v_i := phi(u_i).
e joins u_{s1}, u_{s2} and f joins v_{t1}, v_{t2} with s1 < s2 and t1 < t2.
In G/e the ends of e survive as the smaller id (u_{s1s2}); likewise v_{t1t2}
in H/f.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Optional

from tforge.graph.models import EdgeId, Multigraph, VertexId
from tforge.graph.ops import contract_edge, delete_edges
from tforge.graph.structure import is_connected
from tforge.iso.mapping import VertexMapping
from tforge.iso.search import DEFAULT_MAX_VERTICES, is_isomorphism, iter_isomorphisms
from tforge.runtime.exceptions import InvalidReferenceError, PreconditionError

logger = logging.getLogger(__name__)

MERGED = 0
"""Index used for u_{s1s2} / v_{t1t2} when translating contracted ids."""


@dataclass
class PhiWitness:
    """A certified quaternion: phi: G\\e -> H\\f and psi: G/e -> H/f."""

    g: Multigraph
    e: EdgeId
    h: Multigraph
    f: EdgeId
    phi: VertexMapping
    psi: VertexMapping
    psi_index: int = 0
    notes: list[str] = field(default_factory=list)

    @cached_property
    def g_deleted(self) -> Multigraph:
        return delete_edges(self.g, [self.e])

    @cached_property
    def h_deleted(self) -> Multigraph:
        return delete_edges(self.h, [self.f])

    @cached_property
    def g_contracted(self) -> Multigraph:
        return contract_edge(self.g, self.e)[0]

    @cached_property
    def h_contracted(self) -> Multigraph:
        return contract_edge(self.h, self.f)[0]

    @property
    def n(self) -> int:
        return self.g.num_vertices

    @cached_property
    def _u_index(self) -> dict[VertexId, int]:
        return {v: i for i, v in enumerate(self.g.vertices, start=1)}

    @cached_property
    def _v_index(self) -> dict[VertexId, int]:
        return {self.phi(v): i for v, i in self._u_index.items()}

    def u(self, i: int) -> VertexId:
        return self.g.vertices[i - 1]

    def v(self, j: int) -> VertexId:
        return self.phi(self.u(j))

    def u_index(self, vertex: VertexId) -> int:
        return self._u_index[vertex]

    def v_index(self, vertex: VertexId) -> int:
        return self._v_index[vertex]

    @property
    def s(self) -> tuple[int, int]:
        a, b = self.g.endpoints(self.e)
        return tuple(sorted((self.u_index(a), self.u_index(b))))

    @property
    def t(self) -> tuple[int, int]:
        a, b = self.h.endpoints(self.f)
        return tuple(sorted((self.v_index(a), self.v_index(b))))

    @property
    def merged_g(self) -> VertexId:
        """The id of u_{s1s2} in G/e."""
        return min(self.g.endpoints(self.e))

    @property
    def merged_h(self) -> VertexId:
        return min(self.h.endpoints(self.f))

    def psi_target_index(self, i: int) -> int:
        """Index j with psi(u_i) = v_j, or MERGED when psi(u_i) = v_{t1t2}.

        For i in {s1, s2} the source is u_{s1s2}.
        """
        source = self.merged_g if i in self.s else self.u(i)
        image = self.psi(source)
        if image == self.merged_h:
            return MERGED
        return self.v_index(image)

    def verify(self) -> bool:
        """Both mappings preserve every edge multiplicity."""
        return is_isomorphism(self.g_deleted, self.h_deleted, self.phi) and is_isomorphism(
            self.g_contracted, self.h_contracted, self.psi
        )

    def to_dict(self) -> dict:
        return {
            "g": self.g.name,
            "e": self.e,
            "h": self.h.name,
            "f": self.f,
            "phi": self.phi.render(),
            "psi": self.psi.render(),
            "psi_index": self.psi_index,
            "s": list(self.s),
            "t": list(self.t),
        }


def _check_inputs(g: Multigraph, e: EdgeId, h: Multigraph, f: EdgeId) -> None:
    for graph, edge in ((g, e), (h, f)):
        if not graph.has_edge(edge):
            raise InvalidReferenceError("edge", edge, graph.name)
        if graph.loop_count():
            raise PreconditionError(f"{graph!r} has loops; quaternions need loopless graphs")
        if not is_connected(graph):
            raise PreconditionError(f"{graph!r} is not connected")


def iter_phi_witnesses(
    g: Multigraph,
    e: EdgeId,
    h: Multigraph,
    f: EdgeId,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> Iterator[PhiWitness]:
    """Lazily yield witnesses: phi outermost, each in canonical search order."""
    _check_inputs(g, e, h, f)
    g_del, h_del = delete_edges(g, [e]), delete_edges(h, [f])
    g_con, h_con = contract_edge(g, e)[0], contract_edge(h, f)[0]

    psis = list(iter_isomorphisms(g_con, h_con, max_vertices=max_vertices))
    if not psis:
        return
    for phi in iter_isomorphisms(g_del, h_del, max_vertices=max_vertices):
        for index, psi in enumerate(psis):
            yield PhiWitness(g, e, h, f, phi, psi, psi_index=index)


def enumerate_phi_witnesses(
    g: Multigraph,
    e: EdgeId,
    h: Multigraph,
    f: EdgeId,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    phi: Optional[VertexMapping] = None,
) -> list[PhiWitness]:
    """Every (phi, psi) choice; with phi given, only the psi choices for it."""
    if phi is None:
        found = list(iter_phi_witnesses(g, e, h, f, max_vertices))
    else:
        _check_inputs(g, e, h, f)
        if not is_isomorphism(delete_edges(g, [e]), delete_edges(h, [f]), phi):
            raise PreconditionError("supplied phi is not an isomorphism G\\e -> H\\f")
        g_con, h_con = contract_edge(g, e)[0], contract_edge(h, f)[0]
        found = [
            PhiWitness(g, e, h, f, phi, psi, psi_index=index)
            for index, psi in enumerate(iter_isomorphisms(g_con, h_con, max_vertices=max_vertices))
        ]
    logger.debug(f"{len(found)} witnesses for ({g!r}, {e}, {h!r}, {f})")
    return found


def certify_phi_prime(
    g: Multigraph,
    e: EdgeId,
    h: Multigraph,
    f: EdgeId,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> Optional[PhiWitness]:
    """The first witness in deterministic order, or None."""
    witness = next(iter_phi_witnesses(g, e, h, f, max_vertices), None)
    if witness is not None:
        logger.info(f"Certified ({g!r}, {e}, {h!r}, {f}) with phi={witness.phi}")
    return witness


def path_seed(n: int) -> tuple[Multigraph, EdgeId, Multigraph, EdgeId]:
    """P_n on 1..n with e its second-rightmost edge, and the partner H.

    H keeps G\\e and joins 1 to n instead, so H is again a path and phi can be
    the identity.
    """
    if n < 4:
        raise PreconditionError(f"path seeds need n >= 4, got {n}")
    path_edges = [(i, i + 1) for i in range(1, n)]
    g = Multigraph.from_edges(path_edges, name=f"P{n}")
    e = n - 3
    h_edges = {i: ends for i, ends in enumerate(path_edges) if i != e}
    h_edges[e] = (1, n)
    h = Multigraph(range(1, n + 1), h_edges, name=f"P{n}'")
    return g, e, h, e
