"""Tests for quaternion witnesses, the psi digraph and rotor attachment."""

import pytest
import yaml

from tforge.corpus import gallery
from tforge.corpus.entries import generated_witness
from tforge.graph.models import Multigraph
from tforge.iso.mapping import VertexMapping
from tforge.iso.search import are_isomorphic
from tforge.phigen import check_dig1
from tforge.phigen.attach import (
    CycleRotorAssignment,
    attach_rotors,
    choose_rotor,
    claw_rotor,
    default_menu,
    extend_witness,
    generate,
    rotor_by_name,
    run_pipeline,
    triangle_rotor,
    verify_new_member,
)
from tforge.phigen.digraph import build_psi_digraph, check_cycle_pairing, directed_cycles
from tforge.phigen.files import WitnessDocument, read_witness, write_witness
from tforge.phigen.witness import (
    MERGED,
    PhiWitness,
    certify_phi_prime,
    enumerate_phi_witnesses,
    path_seed,
)
from tforge.runtime.exceptions import (
    ArityError,
    FalsifiedPropositionError,
    GraphFormatError,
    HypothesisError,
    PreconditionError,
)


def seed_witness(psi: VertexMapping) -> PhiWitness:
    g, e, h, f = path_seed(5)
    return PhiWitness(g, e, h, f, VertexMapping.identity(g.vertices), psi)


@pytest.fixture
def choice_one():
    return seed_witness(gallery.PSI_CHOICE_1)


class TestWitness:
    """Tests for witnesses and their certification."""

    def test_path_seed_shape(self):
        g, e, h, f = path_seed(5)
        assert g.num_edges == h.num_edges == 4
        assert g.endpoints(e) == (3, 4)
        assert h.endpoints(f) == (1, 5)

    def test_path_seed_minimum(self):
        with pytest.raises(PreconditionError):
            path_seed(3)

    def test_certify_seed(self):
        w = certify_phi_prime(*path_seed(5))
        assert w is not None
        assert w.verify()
        assert w.phi == VertexMapping.identity(range(1, 6))

    def test_index_labels(self, choice_one):
        assert choice_one.s == gallery.SEED_S
        assert choice_one.t == gallery.SEED_T
        assert choice_one.psi_target_index(1) == 4
        assert choice_one.psi_target_index(3) == choice_one.psi_target_index(4) == 2

    def test_merged_target(self):
        w = seed_witness(gallery.PSI_CHOICE_2)
        assert w.psi_target_index(3) == MERGED

    def test_both_psi_choices_enumerated(self):
        g, e, h, f = path_seed(5)
        found = enumerate_phi_witnesses(g, e, h, f, phi=VertexMapping.identity(g.vertices))
        assert {w.psi for w in found} == {gallery.PSI_CHOICE_1, gallery.PSI_CHOICE_2}
        assert sorted(w.psi_index for w in found) == [0, 1]

    def test_non_quaternion(self, k3, c4):
        assert certify_phi_prime(k3, 0, c4, 0) is None

    def test_rejects_loops_and_bad_edges(self, digon_with_loop, k3):
        with pytest.raises(PreconditionError):
            certify_phi_prime(digon_with_loop, 0, k3, 0)
        with pytest.raises(PreconditionError):
            enumerate_phi_witnesses(k3, 0, k3, 0, phi=VertexMapping.from_dict({1: 1, 2: 3, 3: 2}))


class TestPsiDigraph:
    """Tests for D_psi and the cycle proposition."""

    def test_arcs_and_cycles(self, choice_one):
        d = build_psi_digraph(choice_one)
        assert d.arcs == gallery.DPSI_ARCS
        assert d.num_arcs == choice_one.n + 1
        assert directed_cycles(d) == gallery.DPSI_CYCLES

    def test_merged_target_adds_two_arcs(self):
        w = seed_witness(gallery.PSI_CHOICE_2)
        d = build_psi_digraph(w)
        assert d.num_arcs == w.n + 2
        assert d.has_arc(3, 1) and d.has_arc(4, 5)

    def test_networkx_view(self, choice_one):
        nx_graph = build_psi_digraph(choice_one).to_networkx()
        assert nx_graph.number_of_nodes() == 5
        assert nx_graph.number_of_edges() == 6

    def test_cycles_satisfy_pairing(self, choice_one):
        for cycle in gallery.DPSI_CYCLES:
            assert check_cycle_pairing(choice_one, cycle).holds

    def test_check_dig1_alias(self, choice_one):
        assert check_dig1 is check_cycle_pairing
        assert all(check_dig1(choice_one, c).holds for c in gallery.DPSI_CYCLES)

    def test_pairing_violation(self, choice_one):
        verdict = check_cycle_pairing(choice_one, (3, 4, 5), strict=False)
        assert not verdict.holds
        assert verdict.s_on_cycle and not verdict.t_on_cycle
        with pytest.raises(FalsifiedPropositionError):
            check_cycle_pairing(choice_one, (3, 4, 5))


class TestAttachment:
    """Tests for rotor menus, attachment and verification."""

    def test_generated_pair_matches_gray_pair(self, gray_pair):
        (g_star, _), (h_star, _) = gray_pair
        result = generated_witness()
        assert result.verify()
        assert are_isomorphic(result.g, g_star)
        assert are_isomorphic(result.h, h_star)

    def test_attach_rotors_returns_both_graphs(self, choice_one, gray_pair):
        (g_star, _), (h_star, _) = gray_pair
        k3, claw = triangle_rotor(), claw_rotor()
        g2, h2 = attach_rotors(
            choice_one,
            [
                CycleRotorAssignment.build(gallery.DPSI_CYCLES[0], k3.graph, k3.orbit),
                CycleRotorAssignment.build(gallery.DPSI_CYCLES[1], claw.graph, claw.orbit),
            ],
        )
        assert are_isomorphic(g2, g_star)
        assert are_isomorphic(h2, h_star)

    def test_new_member_verdict(self, engine):
        result = generated_witness()
        verdict = verify_new_member(result.g, result.h, result.e, result.f, result, engine)
        assert verdict.passed
        assert verdict.isomorphic is False
        assert verdict.to_dict()["in_phi_prime"] is True

    def test_extend_needs_a_cycle(self, choice_one):
        k3 = triangle_rotor()
        assignment = CycleRotorAssignment.build((1, 2, 3), k3.graph, k3.orbit)
        with pytest.raises(PreconditionError):
            extend_witness(choice_one, assignment)

    def test_assignment_validation(self):
        k3 = triangle_rotor()
        with pytest.raises(ArityError):
            CycleRotorAssignment.build((1, 2), k3.graph, k3.orbit)
        path = Multigraph.from_edges([(1, 2), (2, 3)])
        with pytest.raises(HypothesisError):
            CycleRotorAssignment.build((1, 4, 2), path, (1, 2, 3))

    def test_default_menu(self):
        menu = default_menu()
        assert {k: r.name for k, r in menu.items()} == {
            1: "K3-pendant",
            2: "P3",
            3: "K3",
            4: "C4",
        }
        assert default_menu({3: "K1,3"})[3].name == "K1,3"
        assert choose_rotor(menu, 7).size == 7
        with pytest.raises(ArityError):
            default_menu({3: "C4"})

    def test_rotor_by_name(self):
        assert rotor_by_name("C5").size == 5
        with pytest.raises(PreconditionError):
            rotor_by_name("petersen")

    def test_pipeline_with_triangles(self, choice_one, engine):
        pair = run_pipeline(choice_one, engine=engine)
        assert pair.cycles == gallery.DPSI_CYCLES
        assert pair.verdict.passed
        assert pair.to_dict()["g_vertices"] == 5

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [5, 6, 7])
    @pytest.mark.parametrize("overrides", [None, {3: "K1,3"}])
    def test_generate_every_psi(self, n, overrides, engine):
        pairs = generate(*path_seed(n), menu=default_menu(overrides), engine=engine)
        assert len(pairs) >= 1
        if n == 5:
            assert len(pairs) == 2
        assert len({p.seed.psi_index for p in pairs}) == len(pairs)
        assert all(p.verdict.passed for p in pairs)
        # isomorphism is reported, not required
        assert all("isomorphic" in p.verdict.to_dict() for p in pairs)

    def test_generate_requires_quaternion(self, k3, c4):
        with pytest.raises(PreconditionError):
            generate(k3, 0, c4, 0)


class TestWitnessFiles:
    """Tests for YAML witness documents."""

    def test_write_and_read(self, tmp_path):
        result = generated_witness()
        doc = WitnessDocument(result, g_source="g.g")
        path = write_witness(doc, tmp_path / "out" / "w.yaml")
        again = read_witness(path)
        assert again.witness.g == result.g
        assert again.witness.psi == result.psi
        assert again.g_source == "g.g"

    def test_assignments_replay(self, tmp_path, choice_one):
        k3 = triangle_rotor()
        doc = WitnessDocument(
            choice_one,
            [CycleRotorAssignment.build(c, k3.graph, k3.orbit) for c in gallery.DPSI_CYCLES],
        )
        again = read_witness(write_witness(doc, tmp_path / "w.yaml"))
        assert [a.cycle for a in again.assignments] == gallery.DPSI_CYCLES

    def test_tampered_psi(self, tmp_path, choice_one):
        data = WitnessDocument(choice_one).to_dict()
        data["psi"] = "1->1,2->2,3->3,5->5"
        path = tmp_path / "bad.yaml"
        path.write_text(yaml.safe_dump(data))
        with pytest.raises(GraphFormatError):
            read_witness(path)

    @pytest.mark.parametrize("text", ["- a list\n", "g: [unclosed\n", "version: 1\n"])
    def test_malformed_documents(self, tmp_path, text):
        path = tmp_path / "bad.yaml"
        path.write_text(text)
        with pytest.raises(GraphFormatError):
            read_witness(path)
