"""Corpus entries: example graphs plus the properties they must satisfy.

The assertions double as transcription checksums: a mis-read edge breaks
an isomorphism or a polynomial equality.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Optional

from tforge.constructions.gluing import whitney_twist
from tforge.constructions.terminals import TerminalList
from tforge.constructions.w0 import (
    W0Spec,
    partition_symmetries,
    validate_w0,
    w0_flip_pair,
    w0_reversed_pair,
)
from tforge.corpus import gallery
from tforge.corpus.triangles import triangle_edge_distinguisher
from tforge.graph.models import EdgeId, Multigraph
from tforge.graph.ops import contract_edge, delete_edges
from tforge.iso.mapping import VertexMapping
from tforge.iso.search import are_isomorphic, check_cyclic_orbit
from tforge.phigen.attach import (
    CycleRotorAssignment,
    attach_rotors_with_witness,
    claw_rotor,
    triangle_rotor,
    verify_new_member,
)
from tforge.phigen.digraph import build_psi_digraph, check_cycle_pairing, directed_cycles
from tforge.phigen.witness import (
    PhiWitness,
    certify_phi_prime,
    enumerate_phi_witnesses,
    path_seed,
)
from tforge.runtime.exceptions import ForgeError, InvalidReferenceError
from tforge.tutte.engine import TutteEngine

logger = logging.getLogger(__name__)

Check = Callable[[TutteEngine], bool]


@dataclass
class CorpusAssertion:
    """A named property check run against a shared engine."""

    name: str
    check: Check


@dataclass
class CorpusEntry:
    """Example graphs with marked edges and the assertions they must pass."""

    name: str
    topic: str
    description: str
    graphs: dict[str, Multigraph] = field(default_factory=dict)
    marked_edges: dict[str, EdgeId] = field(default_factory=dict)
    assertions: list[CorpusAssertion] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "topic": self.topic,
            "description": self.description,
            "graphs": {k: repr(g) for k, g in self.graphs.items()},
            "marked_edges": dict(self.marked_edges),
            "assertions": [a.name for a in self.assertions],
        }


@dataclass
class AssertionOutcome:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class CorpusResult:
    entry: str
    outcomes: list[AssertionOutcome] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(o.passed for o in self.outcomes)

    def to_dict(self) -> dict:
        return {
            "entry": self.entry,
            "passed": self.passed,
            "outcomes": [
                {"name": o.name, "passed": o.passed, "detail": o.detail} for o in self.outcomes
            ],
        }


# ----------------------------------------------------------------------
# Entries
# ----------------------------------------------------------------------


def _t_equal(g: Multigraph, h: Multigraph) -> Check:
    return lambda engine: engine.compute(g) == engine.compute(h)


def _whitney_pair() -> CorpusEntry:
    g, g_prime = gallery.whitney_g(), gallery.whitney_g_prime()
    twisted = whitney_twist(g, gallery.WHITNEY_CUT, gallery.WHITNEY_SIDE)
    return CorpusEntry(
        "whitney-pair",
        "Whitney twist",
        "Two graphs related by a Whitney twist at a 2-vertex cut",
        graphs={"G": g, "G'": g_prime},
        assertions=[
            CorpusAssertion("T-equal", _t_equal(g, g_prime)),
            CorpusAssertion("twist reproduces G'", lambda _: are_isomorphic(twisted, g_prime)),
        ],
    )


def _gray_pair() -> CorpusEntry:
    (g, e), (h, f) = gallery.gray_g(), gallery.gray_h()

    def shape(_: TutteEngine) -> bool:
        def parallel_pairs(x: Multigraph) -> int:
            return sum(1 for k in x.multiplicities().values() if k == 2)

        return all(
            x.num_vertices == 6 and x.num_edges == 10 and parallel_pairs(x) == 1 for x in (g, h)
        )

    return CorpusEntry(
        "gray-pair",
        "quaternion pair",
        "Non-isomorphic T-equivalent pair with G*\\e ≅ H*\\f and G*/e ≅ H*/f",
        graphs={"G*": g, "H*": h},
        marked_edges={"e": e, "f": f},
        assertions=[
            CorpusAssertion("6 vertices, 10 edges, one parallel pair", shape),
            CorpusAssertion("T-equal", _t_equal(g, h)),
            CorpusAssertion("non-isomorphic", lambda _: not are_isomorphic(g, h)),
            CorpusAssertion(
                "G\\e ≅ H\\f",
                lambda _: are_isomorphic(delete_edges(g, [e]), delete_edges(h, [f])),
            ),
            CorpusAssertion(
                "G/e ≅ H/f",
                lambda _: are_isomorphic(contract_edge(g, e)[0], contract_edge(h, f)[0]),
            ),
            CorpusAssertion(
                "isolated triangle in H* only",
                lambda _: triangle_edge_distinguisher(h) and not triangle_edge_distinguisher(g),
            ),
        ],
    )


def _seed_witness(psi: VertexMapping) -> PhiWitness:
    g, e, h, f = path_seed(5)
    return PhiWitness(g, e, h, f, VertexMapping.identity(g.vertices), psi)


def _path_seed() -> CorpusEntry:
    g, e, h, f = path_seed(5)

    def certified(_: TutteEngine) -> bool:
        w = certify_phi_prime(g, e, h, f)
        return w is not None and w.phi == VertexMapping.identity(g.vertices)

    def labels(_: TutteEngine) -> bool:
        w = _seed_witness(gallery.PSI_CHOICE_1)
        return w.s == gallery.SEED_S and w.t == gallery.SEED_T

    return CorpusEntry(
        "path-seed",
        "path seed",
        "P5 and its partner, marked at the second-rightmost edge",
        graphs={"G0": g, "H0": h},
        marked_edges={"e": e, "f": f},
        assertions=[
            CorpusAssertion("certified with phi = identity", certified),
            CorpusAssertion("s = (3, 4), t = (1, 5)", labels),
        ],
    )


def _psi_choices() -> CorpusEntry:
    g, e, h, f = path_seed(5)

    def both_listed(_: TutteEngine) -> bool:
        identity = VertexMapping.identity(g.vertices)
        listed = {w.psi for w in enumerate_phi_witnesses(g, e, h, f, phi=identity)}
        return gallery.PSI_CHOICE_1 in listed and gallery.PSI_CHOICE_2 in listed

    return CorpusEntry(
        "psi-choices",
        "psi choices",
        "Two isomorphisms G0/e -> H0/f",
        graphs={"G0": g, "H0": h},
        marked_edges={"e": e, "f": f},
        assertions=[
            CorpusAssertion(
                "both psi are witnesses",
                lambda _: all(
                    _seed_witness(p).verify()
                    for p in (gallery.PSI_CHOICE_1, gallery.PSI_CHOICE_2)
                ),
            ),
            CorpusAssertion("both psi appear in the enumeration", both_listed),
        ],
    )


def _dpsi_example() -> CorpusEntry:
    w = _seed_witness(gallery.PSI_CHOICE_1)

    def cycles_hold(_: TutteEngine) -> bool:
        cycles = directed_cycles(build_psi_digraph(w))
        return all(check_cycle_pairing(w, c, strict=False).holds for c in cycles)

    return CorpusEntry(
        "dpsi-example",
        "psi digraph",
        "Digraph D_psi with two directed cycles sharing vertex 2",
        graphs={"G0": w.g, "H0": w.h},
        assertions=[
            CorpusAssertion("arcs", lambda _: build_psi_digraph(w).arcs == gallery.DPSI_ARCS),
            CorpusAssertion("n+1 arcs", lambda _: build_psi_digraph(w).num_arcs == w.n + 1),
            CorpusAssertion(
                "cycles (1,4,2) and (2,5,3)",
                lambda _: directed_cycles(build_psi_digraph(w)) == gallery.DPSI_CYCLES,
            ),
            CorpusAssertion("cycle proposition holds", cycles_hold),
        ],
    )


def _rotor_w1_w2() -> CorpusEntry:
    k3, claw = triangle_rotor(), claw_rotor()
    return CorpusEntry(
        "rotor-w1-w2",
        "rotors",
        "Rotors W1 = K3 and W2 = K1,3 with 3-vertex orbits",
        graphs={"W1": k3.graph, "W2": claw.graph},
        assertions=[
            CorpusAssertion(
                "K3 orbit rotates", lambda _: check_cyclic_orbit(k3.graph, k3.orbit) is not None
            ),
            CorpusAssertion(
                "K1,3 leaves rotate",
                lambda _: check_cyclic_orbit(claw.graph, claw.orbit) is not None,
            ),
        ],
    )


def w0_spec(w0: Multigraph) -> W0Spec:
    return W0Spec(w0, gallery.W0_W_LIST, gallery.W0_X_LIST, gallery.W0_R, gallery.W0_G)


def _w0_examples() -> CorpusEntry:
    spec_a, spec_b = w0_spec(gallery.w0_centred()), w0_spec(gallery.w0_doubled())
    rt = TerminalList(gallery.cycle_graph(6, "R"), tuple(range(1, 7)))
    yt = TerminalList(gallery.complete_graph(3), (1, 2, 3))

    def flip_equal(engine: TutteEngine) -> bool:
        straight, flipped = w0_flip_pair(rt, spec_a, yt)
        return engine.compute(straight) == engine.compute(flipped)

    def remark_isomorphic(_: TutteEngine) -> bool:
        left, right = w0_reversed_pair(rt, spec_b, yt)
        return are_isomorphic(left, right)

    return CorpusEntry(
        "w0-examples",
        "W0 assemblies",
        "W0 graphs with r = 3, g = 2",
        graphs={"W0-a": spec_a.w0, "W0-b": spec_b.w0},
        assertions=[
            CorpusAssertion("W0-a valid", lambda _: validate_w0(spec_a).valid),
            CorpusAssertion("W0-b valid", lambda _: validate_w0(spec_b).valid),
            CorpusAssertion(
                "every partition of [3] has a pi",
                lambda _: all(v is not None for v in partition_symmetries(spec_a).values()),
            ),
            CorpusAssertion("C6 flip with Y = K3 is T-equal", flip_equal),
            CorpusAssertion("reversed x-list variant is isomorphic", remark_isomorphic),
        ],
    )


def generated_witness() -> PhiWitness:
    """P5 seed with K3 on (1,4,2) and K1,3 on (2,5,3)."""
    w = _seed_witness(gallery.PSI_CHOICE_1)
    k3, claw = triangle_rotor(), claw_rotor()
    assignments = [
        CycleRotorAssignment.build(gallery.DPSI_CYCLES[0], k3.graph, k3.orbit),
        CycleRotorAssignment.build(gallery.DPSI_CYCLES[1], claw.graph, claw.orbit),
    ]
    return attach_rotors_with_witness(w, assignments)


def _generated_pair() -> CorpusEntry:
    result = generated_witness()
    (g_star, _), (h_star, _) = gallery.gray_g(), gallery.gray_h()

    def new_member(engine: TutteEngine) -> bool:
        verdict = verify_new_member(result.g, result.h, result.e, result.f, result, engine)
        return verdict.passed and verdict.isomorphic is False

    return CorpusEntry(
        "generated-pair",
        "generated pair",
        "Rotors attached along both cycles reproduce the gray pair",
        graphs={"G2": result.g, "H2": result.h},
        marked_edges={"e": result.e, "f": result.f},
        assertions=[
            CorpusAssertion("G2 ≅ G*", lambda _: are_isomorphic(result.g, g_star)),
            CorpusAssertion("H2 ≅ H*", lambda _: are_isomorphic(result.h, h_star)),
            CorpusAssertion("new member, T-equal, non-isomorphic", new_member),
        ],
    )


_BUILDERS = [
    _whitney_pair,
    _gray_pair,
    _path_seed,
    _psi_choices,
    _dpsi_example,
    _rotor_w1_w2,
    _w0_examples,
    _generated_pair,
]


def corpus() -> list[CorpusEntry]:
    return [build() for build in _BUILDERS]


def get_entry(name: str) -> CorpusEntry:
    for entry in corpus():
        if entry.name == name:
            return entry
    raise InvalidReferenceError("corpus entry", name)


def run_entry(entry: CorpusEntry, engine: Optional[TutteEngine] = None) -> CorpusResult:
    """Run every assertion; errors count as failures with their message."""
    engine = engine or TutteEngine()
    result = CorpusResult(entry.name)
    for assertion in entry.assertions:
        try:
            passed, detail = bool(assertion.check(engine)), ""
        except ForgeError as e:
            passed, detail = False, str(e)
        result.outcomes.append(AssertionOutcome(assertion.name, passed, detail))
        if not passed:
            logger.warning(f"Corpus {entry.name}: '{assertion.name}' failed {detail}")
    return result

