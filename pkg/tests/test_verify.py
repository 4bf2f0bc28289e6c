"""Tests for the gluing checkers, the forest expansion and random probes."""

import pytest

from tforge.constructions.terminals import PairSet, Partition, TerminalList
from tforge.graph.models import Multigraph
from tforge.graph.ops import delete_edges, relabel
from tforge.poly.text import parse
from tforge.runtime.exceptions import ArityError, BudgetError, HypothesisError, PreconditionError
from tforge.tutte.identities import corollary_two_of_three
from tforge.verify.expansion import (
    check_expansion_all,
    check_expansion_identity,
    forest_coefficients,
    pair_graph,
    partition_weight,
)
from tforge.verify.probe import random_connected_multigraph, random_glue_probe
from tforge.verify.report import EquivalenceReport
from tforge.verify.theorems import (
    check_corollary,
    check_necessary,
    check_theorem_partitions,
    check_theorem_subsets,
)


@pytest.fixture
def deleted_pair(gray_pair):
    """G*\\e and H*\\f with the ends of the deleted edges as terminals."""
    (g, e), (h, f) = gray_pair
    return (
        TerminalList(delete_edges(g, [e]), g.endpoints(e)),
        TerminalList(delete_edges(h, [f]), h.endpoints(f)),
    )


@pytest.fixture
def p3_ends():
    return TerminalList(Multigraph.from_edges([(1, 2), (2, 3)]), (1, 3))


class TestConditions:
    """Tests for the subset, partition and necessary checks."""

    def test_deleted_pair_passes_both_conditions(self, deleted_pair, engine):
        gt, ht = deleted_pair
        subsets = check_theorem_subsets(gt, ht, engine)
        partitions = check_theorem_partitions(gt, ht, engine)
        assert subsets.passed and subsets.instances_checked == 2
        assert partitions.passed and partitions.instances_checked == 2
        assert "recursion_nodes" in partitions.counters

    def test_unequal_pair_fails(self, k3, p3_ends, engine):
        report = check_theorem_partitions(TerminalList(k3, (1, 2)), p3_ends, engine)
        assert not report.passed
        assert report.verdict == "fail"
        assert report.failures[0].lhs is not None

    def test_arity(self, k3, p3_ends):
        with pytest.raises(ArityError):
            check_theorem_subsets(TerminalList(k3, (1, 2, 3)), p3_ends)

    def test_budget(self, k4):
        t = TerminalList(k4, (1, 2, 3, 4))
        with pytest.raises(BudgetError):
            check_theorem_subsets(t, t, max_k=3)
        with pytest.raises(BudgetError):
            check_theorem_partitions(t, t, max_k=3)

    def test_necessary(self, k3, p3_ends):
        report = check_necessary(TerminalList(k3, (1, 2)), p3_ends)
        assert not report.passed
        assert [f.instance for f in report.failures] == ["1-2"]

    def test_necessary_counts_loops(self, digon_with_loop):
        plain = Multigraph.from_edges([(1, 2), (1, 2)])
        report = check_necessary(
            TerminalList(digon_with_loop, (1, 2)), TerminalList(plain, (1, 2))
        )
        assert [f.instance for f in report.failures] == ["loops"]

    def test_corollary_batch(self):
        g = Multigraph.from_edges([(1, 2), (1, 2), (2, 3), (1, 3)], name="G")
        h = Multigraph.from_edges([(1, 2), (1, 2), (2, 3), (3, 4), (4, 1)], name="H")
        report = check_corollary([(g, 0, 1, h, 0, 1), (g, 0, 2, h, 0, 1)])
        assert report.passed
        assert report.instances_checked == 1
        assert len(report.notes) == 1
        assert corollary_two_of_three(g, 0, 1, h, 0, 1).consistent

    @pytest.mark.slow
    def test_subsets_and_partitions_agree_on_seeded_pairs(self, rng, engine):
        outcomes = []
        for trial in range(30):
            k = 1 + trial % 3
            g = random_connected_multigraph(rng, rng.randint(k, 5), loop_probability=0.1)
            gt = TerminalList(g, tuple(rng.sample(list(g.vertices), k)))
            case = (trial // 3) % 3
            if case == 0:
                h = random_connected_multigraph(rng, rng.randint(k, 5), loop_probability=0.1)
                ht = TerminalList(h, tuple(rng.sample(list(h.vertices), k)))
            elif case == 1:
                images = list(range(11, 11 + g.num_vertices))
                rng.shuffle(images)
                mapping = dict(zip(g.vertices, images))
                moved = relabel(g, mapping, name="moved")
                ht = TerminalList(moved, tuple(mapping[v] for v in gt.vertices))
            else:
                ht = gt.reversed()
            subsets = check_theorem_subsets(gt, ht, engine)
            partitions = check_theorem_partitions(gt, ht, engine)
            assert subsets.passed == partitions.passed, (trial, g.edges)
            if partitions.passed:
                report = random_glue_probe(gt, ht, trials=25, seed=trial, engine=engine)
                assert report.passed, (trial, report.to_dict())
            outcomes.append(partitions.passed)
        assert any(outcomes) and not all(outcomes)


class TestExpansion:
    """Tests for the partition expansion of T(G_S)."""

    def test_triangle_single_block(self):
        s, p = PairSet.complete(3), Partition.single(3)
        assert forest_coefficients(s, p, 3) == (3, 1)
        assert partition_weight(s, p, 3) == parse("y + 2")

    def test_disconnected_block_has_zero_weight(self):
        s = PairSet.of(3, [(1, 2)])
        assert partition_weight(s, Partition.single(3), 3).is_zero()
        assert forest_coefficients(s, Partition.single(3), 3) == (0, -1)
        assert partition_weight(s, Partition.of(3, [[1, 2], [3]]), 3) == parse("1")

    def test_pair_graph(self):
        n_s = pair_graph(PairSet.of(4, [(1, 2), (3, 4)]))
        assert n_s.vertices == (1, 2, 3, 4)
        assert n_s.num_edges == 2

    def test_identity_on_k4(self, k4, engine):
        report = check_expansion_all(TerminalList(k4, (1, 2, 3)), engine)
        assert report.passed
        assert report.instances_checked == 8

    @pytest.mark.slow
    def test_identity_on_random_graphs(self, rng, engine):
        for trial in range(50):
            k = 2 + trial % 2
            g = random_connected_multigraph(rng, rng.randint(k, 6))
            terminals = tuple(rng.sample(list(g.vertices), k))
            report = check_expansion_all(TerminalList(g, terminals), engine)
            assert report.passed, report.to_dict()
            assert report.instances_checked == 2 ** (k * (k - 1) // 2)

    def test_single_identity(self, c4):
        report = check_expansion_identity(TerminalList(c4, (1, 3)), PairSet.complete(2))
        assert report.passed and report.instances_checked == 1

    def test_requires_connected_graph(self):
        g = Multigraph([1, 2, 3], {0: (1, 2)})
        with pytest.raises(PreconditionError):
            check_expansion_identity(TerminalList(g, (1, 3)), PairSet.complete(2))

    def test_budget(self, k4):
        with pytest.raises(BudgetError):
            check_expansion_all(TerminalList(k4, (1, 2, 3, 4)), max_k=3)


class TestProbe:
    """Tests for random gluing probes."""

    def test_deleted_pair_survives_probe(self, deleted_pair, engine):
        gt, ht = deleted_pair
        report = random_glue_probe(gt, ht, trials=5, seed=7, engine=engine)
        assert report.passed
        assert report.counters == {"trials": 5, "seed": 7}

    def test_probe_is_deterministic(self, k3, p3_ends):
        gt = TerminalList(k3, (1, 2))
        first = random_glue_probe(gt, p3_ends, trials=4, seed=3, precheck=False)
        second = random_glue_probe(gt, p3_ends, trials=4, seed=3, precheck=False)
        assert first.to_dict() == second.to_dict()
        assert not first.passed

    def test_precheck_rejects(self, k3, p3_ends):
        with pytest.raises(HypothesisError):
            random_glue_probe(TerminalList(k3, (1, 2)), p3_ends, trials=1)


class TestReport:
    """Tests for EquivalenceReport."""

    def test_record_and_dict(self):
        report = EquivalenceReport("demo")
        assert report.record("same", parse("x"), parse("x"))
        assert not report.record("differ", parse("x"), parse("y"), detail="swap")
        report.fail("extra", "no polynomial")
        data = report.to_dict()
        assert data["verdict"] == "fail"
        assert data["instances_checked"] == 3
        assert data["failures"][0] == {
            "instance": "differ",
            "lhs": "x",
            "rhs": "y",
            "detail": "swap",
        }
        assert data["failures"][1]["lhs"] is None

    def test_render_truncates(self):
        report = EquivalenceReport("demo")
        for i in range(4):
            report.fail(f"#{i}", "bad")
        table = report.render(max_failures=2)
        assert table.row_count == 3
        assert "4 instances" in table.caption
