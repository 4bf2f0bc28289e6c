"""Rotor attachment along directed cycles of D_psi and re-certification of the output."""

import logging
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from tforge.constructions.gluing import attach_with_record
from tforge.constructions.terminals import TerminalList
from tforge.graph.models import EdgeId, Multigraph, VertexId
from tforge.iso.mapping import VertexMapping
from tforge.iso.search import DEFAULT_MAX_VERTICES, are_isomorphic, check_cyclic_orbit
from tforge.phigen.digraph import (
    IndexCycle,
    build_psi_digraph,
    check_cycle_pairing,
    cycle_arcs,
    directed_cycles,
)
from tforge.phigen.witness import PhiWitness, certify_phi_prime, enumerate_phi_witnesses
from tforge.runtime.exceptions import (
    ArityError,
    FalsifiedPropositionError,
    HypothesisError,
    PreconditionError,
    SizeLimitError,
)
from tforge.tutte.engine import TutteEngine

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CycleRotorAssignment:
    """Rotor W glued along a cycle: u_{cycle[j]} meets orbit[j]; xi rotates the orbit."""

    cycle: IndexCycle
    rotor: Multigraph
    orbit: tuple[VertexId, ...]
    xi: VertexMapping

    @classmethod
    def build(
        cls,
        cycle: Sequence[int],
        rotor: Multigraph,
        orbit: Sequence[VertexId],
        max_vertices: int = DEFAULT_MAX_VERTICES,
    ) -> "CycleRotorAssignment":
        if len(cycle) != len(orbit):
            raise ArityError("rotor orbit length (cycle length)", len(cycle), len(orbit))
        xi = check_cyclic_orbit(rotor, orbit, max_vertices)
        if xi is None:
            raise HypothesisError(f"{list(orbit)} is not a cyclic vertex orbit of {rotor!r}")
        return cls(tuple(cycle), rotor, tuple(orbit), xi)

    @property
    def k(self) -> int:
        return len(self.cycle)

    def to_dict(self) -> dict:
        return {"cycle": list(self.cycle), "rotor": self.rotor.name, "orbit": list(self.orbit)}


# ----------------------------------------------------------------------
# Rotor menu
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class RotorChoice:
    """A named rotor graph with a rotating orbit of a given size."""

    name: str
    graph: Multigraph
    orbit: tuple[VertexId, ...]

    @property
    def size(self) -> int:
        return len(self.orbit)


def cycle_rotor(k: int) -> RotorChoice:
    """C_k with its vertices in cyclic order (k >= 3)."""
    g = Multigraph.from_edges([(i, i % k + 1) for i in range(1, k + 1)], name=f"C{k}")
    return RotorChoice(f"C{k}", g, tuple(range(1, k + 1)))


def triangle_rotor() -> RotorChoice:
    return RotorChoice("K3", Multigraph.from_edges([(1, 2), (2, 3), (3, 1)], name="K3"), (1, 2, 3))


def claw_rotor() -> RotorChoice:
    """K1,3 with its three leaves as the orbit."""
    g = Multigraph.from_edges([(0, 1), (0, 2), (0, 3)], name="K1,3")
    return RotorChoice("K1,3", g, (1, 2, 3))


def path_rotor() -> RotorChoice:
    """P3 with its two leaves as the orbit."""
    g = Multigraph.from_edges([(1, 0), (0, 2)], name="P3")
    return RotorChoice("P3", g, (1, 2))


def pendant_triangle_rotor() -> RotorChoice:
    g = Multigraph.from_edges([(1, 2), (2, 3), (3, 1)], name="K3-pendant")
    return RotorChoice("K3-pendant", g, (1,))


DEFAULT_MENU_NAMES = {1: "K3-pendant", 2: "P3", 3: "K3", 4: "C4"}

_BUILDERS = {
    "K3": triangle_rotor,
    "K1,3": claw_rotor,
    "P3": path_rotor,
    "K3-pendant": pendant_triangle_rotor,
}


def rotor_by_name(name: str) -> RotorChoice:
    """K3, K1,3, P3, K3-pendant or C<k>."""
    if name in _BUILDERS:
        return _BUILDERS[name]()
    if name.startswith("C") and name[1:].isdigit() and int(name[1:]) >= 3:
        return cycle_rotor(int(name[1:]))
    raise PreconditionError(f"unknown rotor {name!r}")


def default_menu(overrides: Optional[Mapping[int, str]] = None) -> dict[int, RotorChoice]:
    names = dict(DEFAULT_MENU_NAMES)
    names.update(overrides or {})
    menu = {}
    for size, name in names.items():
        choice = rotor_by_name(name)
        if choice.size != size:
            raise ArityError(f"orbit size of rotor {name}", size, choice.size)
        menu[size] = choice
    return menu


def choose_rotor(menu: Mapping[int, RotorChoice], k: int) -> RotorChoice:
    """Menu entry for orbit size k, falling back to C_k for k >= 3."""
    if k in menu:
        return menu[k]
    if k >= 3:
        return cycle_rotor(k)
    raise PreconditionError(f"no rotor with orbit size {k} in the menu")


# ----------------------------------------------------------------------
# Step-by-step attachment
# ----------------------------------------------------------------------


def _require_cycle(w: PhiWitness, cycle: IndexCycle) -> None:
    digraph = build_psi_digraph(w)
    missing = [a for a in cycle_arcs(cycle) if not digraph.has_arc(*a)]
    if missing:
        raise PreconditionError(f"{cycle} is not a directed cycle of D_psi (missing {missing})")


def extend_witness(w: PhiWitness, assignment: CycleRotorAssignment) -> PhiWitness:
    """Glue the rotor on both sides and extend phi by the identity, psi by xi on it.

    Raises FalsifiedPropositionError when an extension fails to be an isomorphism.
    """
    _require_cycle(w, assignment.cycle)
    orbit = assignment.orbit
    g_terms = TerminalList(w.g, tuple(w.u(i) for i in assignment.cycle))
    h_terms = TerminalList(w.h, tuple(w.v(i) for i in assignment.cycle))
    rotor_terms = TerminalList(assignment.rotor, orbit)
    g_new, rec_g = attach_with_record(g_terms, rotor_terms)
    h_new, rec_h = attach_with_record(h_terms, rotor_terms)

    inner = [z for z in assignment.rotor.vertices if z not in set(orbit)]
    phi = w.phi.extend({rec_g.vertex(z): rec_h.vertex(z) for z in inner})
    psi = w.psi.extend({rec_g.vertex(z): rec_h.vertex(assignment.xi(z)) for z in inner})

    extended = PhiWitness(g_new, w.e, h_new, w.f, phi, psi, psi_index=w.psi_index)
    extended.notes = list(w.notes)
    if assignment.k == 1:
        extended.notes.append(f"fixed point {assignment.cycle[0]} used as a 1-cycle")
    if not extended.verify():
        raise FalsifiedPropositionError(
            f"extension along {assignment.cycle} with {assignment.rotor!r} is not a witness"
        )
    logger.info(f"Attached {assignment.rotor!r} along cycle {assignment.cycle}")
    return extended


def attach_rotors_with_witness(
    w: PhiWitness, assignments: Sequence[CycleRotorAssignment]
) -> PhiWitness:
    """Apply assignments in order; each cycle must still be a cycle of the refreshed D_psi."""
    current = w
    for assignment in assignments:
        current = extend_witness(current, assignment)
    return current


def attach_rotors(
    w: PhiWitness, assignments: Sequence[CycleRotorAssignment]
) -> tuple[Multigraph, Multigraph]:
    """(G_r, H_r) after attaching every assignment in order."""
    final = attach_rotors_with_witness(w, assignments)
    return final.g, final.h


# ----------------------------------------------------------------------
# Verification
# ----------------------------------------------------------------------


@dataclass
class NewMemberVerdict:
    """Findings on (G_r, e, H_r, f). None marks a check skipped by the size guard."""

    in_phi_prime: Optional[bool]
    t_equivalent: bool
    isomorphic: Optional[bool]
    witness: Optional[PhiWitness] = None
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.in_phi_prime) and self.t_equivalent

    def to_dict(self) -> dict:
        return {
            "in_phi_prime": self.in_phi_prime,
            "t_equivalent": self.t_equivalent,
            "isomorphic": self.isomorphic,
            "passed": self.passed,
            "notes": list(self.notes),
        }


def verify_new_member(
    g_r: Multigraph,
    h_r: Multigraph,
    e: EdgeId,
    f: EdgeId,
    witness: Optional[PhiWitness] = None,
    engine: Optional[TutteEngine] = None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> NewMemberVerdict:
    """Re-certify membership, compare Tutte polynomials and test isomorphism.

    A supplied witness whose mappings check out certifies membership without search.
    """
    engine = engine or TutteEngine()
    notes = []

    in_phi: Optional[bool]
    if witness is not None and witness.g is g_r and witness.h is h_r and witness.verify():
        in_phi, found = True, witness
    else:
        try:
            found = certify_phi_prime(g_r, e, h_r, f, max_vertices)
            in_phi = found is not None
        except SizeLimitError as err:
            found, in_phi = None, None
            notes.append(f"membership not searched: {err}")

    t_eq = engine.compute(g_r) == engine.compute(h_r)

    isomorphic: Optional[bool]
    try:
        isomorphic = are_isomorphic(g_r, h_r, max_vertices)
    except SizeLimitError as err:
        isomorphic = None
        notes.append(f"isomorphism not tested: {err}")

    verdict = NewMemberVerdict(in_phi, t_eq, isomorphic, found, notes)
    logger.debug(f"New member verdict for ({g_r!r}, {h_r!r}): {verdict.to_dict()}")
    return verdict


# ----------------------------------------------------------------------
# Generation
# ----------------------------------------------------------------------


@dataclass
class GeneratedPair:
    """One pipeline run for one psi choice."""

    seed: PhiWitness
    cycles: list[IndexCycle]
    assignments: list[CycleRotorAssignment]
    result: PhiWitness
    verdict: NewMemberVerdict

    def to_dict(self) -> dict:
        return {
            "psi_index": self.seed.psi_index,
            "psi": self.seed.psi.render(),
            "cycles": [list(c) for c in self.cycles],
            "assignments": [a.to_dict() for a in self.assignments],
            "g_vertices": self.result.g.num_vertices,
            "g_edges": self.result.g.num_edges,
            "verdict": self.verdict.to_dict(),
        }


def assignments_for(
    w: PhiWitness,
    menu: Mapping[int, RotorChoice],
    cycles: Optional[Sequence[IndexCycle]] = None,
) -> list[CycleRotorAssignment]:
    """One menu rotor for each cycle (all cycles of D_psi by default)."""
    chosen = list(cycles) if cycles is not None else directed_cycles(build_psi_digraph(w))
    assignments = []
    for cycle in chosen:
        check_cycle_pairing(w, cycle)
        rotor = choose_rotor(menu, len(cycle))
        assignments.append(CycleRotorAssignment.build(cycle, rotor.graph, rotor.orbit))
    return assignments


def run_pipeline(
    w: PhiWitness,
    menu: Optional[Mapping[int, RotorChoice]] = None,
    cycles: Optional[Sequence[IndexCycle]] = None,
    engine: Optional[TutteEngine] = None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> GeneratedPair:
    """Attach rotors along the chosen cycles of D_psi and verify the output."""
    menu = menu if menu is not None else default_menu()
    assignments = assignments_for(w, menu, cycles)
    result = attach_rotors_with_witness(w, assignments)
    verdict = verify_new_member(
        result.g, result.h, w.e, w.f, witness=result, engine=engine, max_vertices=max_vertices
    )
    verdict.notes.extend(result.notes)
    return GeneratedPair(w, [a.cycle for a in assignments], assignments, result, verdict)


def generate(
    g: Multigraph,
    e: EdgeId,
    h: Multigraph,
    f: EdgeId,
    menu: Optional[Mapping[int, RotorChoice]] = None,
    psi_index: Optional[int] = None,
    phi: Optional[VertexMapping] = None,
    engine: Optional[TutteEngine] = None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> list[GeneratedPair]:
    """Run the pipeline once per psi for the first phi (or the given one).

    psi_index selects a single psi from the deterministic enumeration.
    """
    if phi is None:
        first = certify_phi_prime(g, e, h, f, max_vertices)
        if first is None:
            raise PreconditionError(f"({g!r}, {e}, {h!r}, {f}) is not a certified quaternion")
        phi = first.phi
    witnesses = enumerate_phi_witnesses(g, e, h, f, max_vertices, phi=phi)
    if psi_index is not None:
        if not 0 <= psi_index < len(witnesses):
            raise PreconditionError(f"psi index {psi_index} outside [0, {len(witnesses) - 1}]")
        witnesses = [witnesses[psi_index]]

    engine = engine or TutteEngine()
    pairs = [run_pipeline(w, menu, engine=engine, max_vertices=max_vertices) for w in witnesses]
    distinct = sum(1 for p in pairs if p.verdict.isomorphic is False)
    logger.info(f"Generated {len(pairs)} pairs, {distinct} non-isomorphic")
    return pairs
