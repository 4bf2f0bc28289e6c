"""Rotor flips and reflection-induced isomorphisms."""

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

from tforge.constructions.gluing import attach_with_record, glue
from tforge.constructions.terminals import TerminalList
from tforge.graph.models import Multigraph, VertexId
from tforge.graph.ops import induced_subgraph, remove_vertices
from tforge.iso.mapping import VertexMapping
from tforge.iso.search import (
    DEFAULT_MAX_VERTICES,
    check_cyclic_orbit,
    check_reflection,
    is_isomorphism,
)
from tforge.runtime.exceptions import HypothesisError, PreconditionError

logger = logging.getLogger(__name__)


def require_orbit(
    rt: TerminalList, force: bool = False, max_vertices: int = DEFAULT_MAX_VERTICES
) -> VertexMapping:
    """The rotating automorphism of rt's graph, or HypothesisError.

    With force the identity on the orbit is returned instead of failing.
    """
    psi = check_cyclic_orbit(rt.graph, rt.vertices, max_vertices)
    if psi is not None:
        return psi
    if force:
        logger.warning(
            f"Orbit hypothesis fails for {rt.graph!r}; building anyway, "
            "T-equivalence is not guaranteed"
        )
        return VertexMapping.identity(rt.graph.vertices)
    raise HypothesisError(f"{list(rt.vertices)} is not a cyclic vertex orbit of {rt.graph!r}")


def rotor_flip_pair(
    rt: TerminalList,
    wt: TerminalList,
    force: bool = False,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> tuple[Multigraph, Multigraph]:
    """(R(u_1..u_k) ⊔ W(w_1..w_k), R(u_k..u_1) ⊔ W(w_1..w_k))."""
    require_orbit(rt, force, max_vertices)
    return glue(rt, wt), glue(rt.reversed(), wt)


@dataclass
class ReflectionPair:
    """The two glued graphs of a rotor flip and an explicit isomorphism between them."""

    straight: Multigraph
    flipped: Multigraph
    mapping: VertexMapping

    @property
    def verified(self) -> bool:
        return is_isomorphism(self.flipped, self.straight, self.mapping)


def reflection_isomorphic_pair(
    rt: TerminalList,
    wt: TerminalList,
    a: int,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> ReflectionPair:
    """Build both flips when W has rho(w_{1+s}) = w_{a-s}; they are isomorphic.

    The isomorphism flipped -> straight is psi^a on the R side and rho on
    the W side. For a = k no rotation of R is needed.
    """
    rho = check_reflection(wt.graph, wt.vertices, a, max_vertices)
    if rho is None:
        raise HypothesisError(f"no reflection of {wt.graph!r} with a={a}")
    k = rt.k
    if a % k == 0:
        r_map = VertexMapping.identity(rt.graph.vertices)
    else:
        r_map = require_orbit(rt, max_vertices=max_vertices).power(a)

    straight, rec_straight = attach_with_record(rt, wt)
    flipped, rec_flipped = attach_with_record(rt.reversed(), wt)

    table = {v: r_map(v) for v in rt.graph.vertices}
    terminals = set(wt.vertices)
    for z in wt.graph.vertices:
        if z not in terminals:
            table[rec_flipped.vertex(z)] = rec_straight.vertex(rho(z))
    pair = ReflectionPair(straight, flipped, VertexMapping.from_dict(table))
    if not pair.verified:
        raise HypothesisError("constructed reflection mapping is not an isomorphism")
    return pair


def flip_rotor(
    host: Multigraph,
    rotor_vertices: Iterable[VertexId],
    orbit: Sequence[VertexId],
    force: bool = False,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> Multigraph:
    """Flip the rotor induced on rotor_vertices whose border is orbit.

    Every edge at an interior rotor vertex must stay inside the rotor.
    Edges between two orbit vertices belong to the rotor.
    """
    rotor_set = set(rotor_vertices)
    orbit = list(orbit)
    if not set(orbit) <= rotor_set:
        raise PreconditionError("orbit must lie inside the rotor")
    interior = rotor_set - set(orbit)
    for _, u, v in host.iter_edges():
        if (u in interior) != (v in interior) and not (u in rotor_set and v in rotor_set):
            raise PreconditionError(f"edge {u}-{v} leaves the rotor through an interior vertex")

    rotor = induced_subgraph(host, rotor_set)
    rotor_edges = set(rotor.edge_ids)
    rest_edges = {e: ends for e, ends in host.edges.items() if e not in rotor_edges}
    rest = remove_vertices(
        Multigraph(host.vertex_set, rest_edges, name=host.name), interior
    )

    rt = TerminalList(rotor, tuple(orbit))
    require_orbit(rt, force, max_vertices)
    flipped, _ = attach_with_record(TerminalList(rest, tuple(orbit)), rt.reversed(), host.name)
    return flipped
