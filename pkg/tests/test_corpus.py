"""Tests for the built-in corpus and the triangle invariant."""

import pytest

from tforge.corpus import (
    corpus,
    find_triangles,
    get_entry,
    run_entry,
    triangle_edge_distinguisher,
)
from tforge.corpus.entries import CorpusAssertion, CorpusEntry
from tforge.graph.models import Multigraph
from tforge.runtime.exceptions import InvalidReferenceError, PreconditionError

ENTRY_NAMES = [
    "whitney-pair",
    "gray-pair",
    "path-seed",
    "psi-choices",
    "dpsi-example",
    "rotor-w1-w2",
    "w0-examples",
    "generated-pair",
]


class TestCorpus:
    """Tests for corpus lookup and execution."""

    def test_entry_names(self):
        assert [e.name for e in corpus()] == ENTRY_NAMES

    def test_every_entry_has_graphs_and_assertions(self):
        for entry in corpus():
            assert entry.graphs, entry.name
            assert entry.assertions, entry.name
            assert entry.to_dict()["name"] == entry.name

    def test_unknown_entry(self):
        with pytest.raises(InvalidReferenceError):
            get_entry("petersen")

    @pytest.mark.parametrize(
        "name", [n for n in ENTRY_NAMES if n not in ("w0-examples", "generated-pair")]
    )
    def test_fast_entries_pass(self, name, engine):
        result = run_entry(get_entry(name), engine)
        assert result.passed, result.to_dict()

    @pytest.mark.slow
    @pytest.mark.parametrize("name", ["w0-examples", "generated-pair"])
    def test_heavy_entries_pass(self, name, engine):
        result = run_entry(get_entry(name), engine)
        assert result.passed, result.to_dict()

    def test_errors_become_failures(self, k3):
        def boom(_):
            raise PreconditionError("no")

        entry = CorpusEntry("broken", "test", "raises", graphs={"K3": k3})
        entry.assertions.append(CorpusAssertion("raises", boom))
        result = run_entry(entry)
        assert not result.passed
        assert "no" in result.outcomes[0].detail


class TestTriangles:
    """Tests for the isolated-triangle distinguisher."""

    def test_parallel_edges_give_several_triangles(self):
        g = Multigraph.from_edges([(1, 2), (1, 2), (2, 3), (1, 3)])
        assert len(find_triangles(g)) == 2
        assert not triangle_edge_distinguisher(g)

    def test_k3_and_k4(self, k3, k4):
        assert triangle_edge_distinguisher(k3)
        assert len(find_triangles(k4)) == 4
        assert not triangle_edge_distinguisher(k4)

    def test_tells_the_gray_pair_apart(self, gray_pair):
        (g, _), (h, _) = gray_pair
        assert triangle_edge_distinguisher(h)
        assert not triangle_edge_distinguisher(g)

    def test_triangle_free(self, c4):
        assert find_triangles(c4) == []
        assert not triangle_edge_distinguisher(c4)
