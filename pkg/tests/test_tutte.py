"""Tests for the Tutte polynomial engines and identities."""

import pytest

from tforge.graph.models import Multigraph
from tforge.graph.ops import add_edges, contract_edge, delete_edges, disjoint_union
from tforge.graph.structure import is_connected, structure_queries
from tforge.poly.polynomial import BivariatePolynomial
from tforge.poly.text import parse
from tforge.runtime.exceptions import ConfigurationError, OracleLimitError, PreconditionError
from tforge.tutte.cache import MemoCache
from tforge.tutte.engine import EdgePickPolicy, EngineConfig, TutteEngine, tutte_dc
from tforge.tutte.identities import (
    corollary_two_of_three,
    loop_count_from_polynomial,
    parallel_pair_identity,
    t_equivalent,
)
from tforge.tutte.oracle import spanning_tree_count, tutte_subset_expansion
from tforge.verify.probe import random_connected_multigraph, random_multigraph

K3_TEXT = "x^2 + x + y"
K4_TEXT = "x^3 + 3*x^2 + 2*x + 4*x*y + 2*y + 3*y^2 + y^3"


class TestKnownPolynomials:
    """Closed forms on small graphs."""

    @pytest.mark.parametrize(
        "edges,expected",
        [
            ([], "1"),
            ([(1, 1)], "y"),
            ([(1, 2)], "x"),
            ([(1, 2), (1, 2)], "x + y"),
            ([(1, 2), (2, 3), (3, 4)], "x^3"),
            ([(1, 2), (2, 3), (3, 4), (4, 1)], "x^3 + x^2 + x + y"),
        ],
    )
    def test_small_graphs(self, edges, expected):
        g = Multigraph.from_edges(edges, vertices=[1])
        assert str(tutte_dc(g)) == expected

    def test_k3_and_k4(self, k3, k4):
        assert str(tutte_dc(k3)) == K3_TEXT
        assert str(tutte_dc(k4)) == K4_TEXT

    def test_loops_factor_out(self, digon_with_loop):
        assert tutte_dc(digon_with_loop) == parse("x*y + y^2")

    def test_disjoint_union_multiplies(self, k3, k4):
        union, _ = disjoint_union(k3, k4)
        assert tutte_dc(union) == tutte_dc(k3) * tutte_dc(k4)


class TestOracle:
    """The subset expansion against deletion-contraction."""

    def test_oracle_matches_on_k4(self, k4):
        assert tutte_subset_expansion(k4) == parse(K4_TEXT)

    def test_edge_limit(self, k4):
        with pytest.raises(OracleLimitError):
            tutte_subset_expansion(k4, edge_limit=5)

    @pytest.mark.slow
    def test_exhaustive_catalogue(self, small_catalogue):
        engine = TutteEngine()
        assert len(small_catalogue) > 1000
        for g in small_catalogue:
            assert engine.compute(g) == tutte_subset_expansion(g), g.edges

    @pytest.mark.slow
    def test_seeded_random_graphs(self, rng):
        engine = TutteEngine()
        accepted = 0
        while accepted < 500:
            g = random_multigraph(rng, rng.randint(1, 5), edge_probability=0.4)
            if g.num_edges > 10:
                continue
            accepted += 1
            assert engine.compute(g) == tutte_subset_expansion(g), g.edges

    @pytest.mark.slow
    def test_evaluations_over_catalogue(self, small_catalogue):
        engine = TutteEngine()
        for g in small_catalogue:
            t = engine.compute(g)
            assert t.evaluate(2, 2) == 2**g.num_edges, g.edges
            if is_connected(g):
                assert t.evaluate(1, 1) == spanning_tree_count(g, "brute"), g.edges

    def test_evaluations(self, k4, rng):
        g = random_multigraph(rng, 5, edge_probability=0.6)
        assert tutte_dc(g).evaluate(2, 2) == 2**g.num_edges
        assert tutte_dc(k4).evaluate(1, 1) == spanning_tree_count(k4, "brute")

    def test_tree_counters_agree(self, k4, c4):
        assert spanning_tree_count(k4, "brute") == spanning_tree_count(k4, "kirchhoff") == 16
        assert spanning_tree_count(c4, "kirchhoff") == 4

    def test_tree_count_needs_connected_graph(self):
        with pytest.raises(PreconditionError):
            spanning_tree_count(Multigraph([1, 2]))


class TestEngineConfig:
    """Engine knobs never change the result."""

    @pytest.mark.parametrize(
        "cfg",
        [
            EngineConfig(memo_enabled=False),
            EngineConfig(memo_canonical_max_vertices=0),
            EngineConfig(parallel_tasks=3),
            EngineConfig(edge_pick_policy=EdgePickPolicy.FIRST_ID),
        ],
    )
    def test_same_polynomial(self, cfg, gray_pair, k4):
        (g, _), _ = gray_pair
        reference = TutteEngine()
        for graph in (g, k4):
            assert TutteEngine(cfg).compute(graph) == reference.compute(graph)

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "cfg",
        [EngineConfig(memo_enabled=False), EngineConfig(memo_canonical_max_vertices=0)],
    )
    def test_memo_settings_over_catalogue(self, cfg, small_catalogue):
        reference = TutteEngine()
        candidate = TutteEngine(cfg)
        for g in small_catalogue:
            assert candidate.compute(g) == reference.compute(g), g.edges

    def test_invalid_config(self):
        with pytest.raises(ConfigurationError):
            EngineConfig(parallel_tasks=0)

    def test_stats_and_cache(self, k4):
        engine = TutteEngine()
        engine.compute(k4)
        engine.compute(k4)
        report = engine.report()
        assert report["stats"]["recursion_nodes"] > 0
        assert report["cache"]["hits"] > 0
        assert set(report) == {"config", "stats", "cache"}

    def test_bounded_cache_evicts(self):
        cache = MemoCache(max_size=1)
        cache.put("a", parse("x"))
        cache.put("b", parse("y"))
        assert "a" not in cache
        assert cache.get("b") == parse("y")
        assert cache.stats()["evictions"] == 1


class TestIdentities:
    """T-equivalence helpers and the parallel-edge relations."""

    def test_gray_pair_is_t_equivalent(self, gray_pair):
        (g, _), (h, _) = gray_pair
        assert t_equivalent(g, h)

    def test_loop_count_from_polynomial(self, digon_with_loop):
        assert loop_count_from_polynomial(tutte_dc(digon_with_loop)) == 1

    def test_parallel_pair_identity(self):
        g = Multigraph.from_edges([(1, 2), (1, 2), (2, 3), (1, 3)])
        assert parallel_pair_identity(g, 0, 1).holds

    @pytest.mark.slow
    def test_parallel_pair_identity_sweep(self, rng, engine):
        for _ in range(100):
            base = random_connected_multigraph(rng, rng.randint(2, 6))
            u, v = rng.sample(list(base.vertices), 2)
            g, (e1, e2) = add_edges(base, [(u, v), (u, v)])
            assert parallel_pair_identity(g, e1, e2, engine).holds, g.edges

    @pytest.mark.slow
    def test_block_product_sweep(self, rng, engine):
        for _ in range(100):
            g = random_connected_multigraph(
                rng, rng.randint(2, 7), edge_probability=0.25, loop_probability=0.1
            )
            product = BivariatePolynomial.one()
            for block in structure_queries(g).blocks:
                product = product * engine.compute(block)
            assert engine.compute(g) == product, g.edges

    @pytest.mark.slow
    def test_loop_and_bridge_laws_sweep(self, rng, engine):
        x, y = BivariatePolynomial.x(), BivariatePolynomial.y()
        checked = 0
        while checked < 100:
            g = random_multigraph(rng, rng.randint(2, 6), edge_probability=0.3)
            t = engine.compute(g)
            shape = structure_queries(g)
            for e in shape.loops:
                assert t == y * engine.compute(delete_edges(g, [e])), g.edges
                checked += 1
            for e in shape.bridges:
                contracted, _ = contract_edge(g, e)
                assert t == x * engine.compute(contracted), g.edges
                checked += 1

    def test_parallel_pair_needs_parallel_edges(self, k3):
        with pytest.raises(PreconditionError):
            parallel_pair_identity(k3, 0, 1)

    def test_two_of_three_is_consistent(self):
        g = Multigraph.from_edges([(1, 2), (1, 2), (2, 3), (1, 3)])
        h = Multigraph.from_edges([(1, 2), (1, 2), (2, 3), (3, 4), (4, 1)])
        check = corollary_two_of_three(g, 0, 1, h, 0, 1)
        assert check.consistent
        assert check.equal_count != 2
