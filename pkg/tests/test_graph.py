"""Tests for the multigraph value type, its operations and the text format."""

import pytest

from tforge.graph.io import parse_graph, read_graph, render_graph, write_graph
from tforge.graph.models import Multigraph
from tforge.graph.ops import (
    add_edges,
    contract_edge,
    delete_edges,
    disjoint_union,
    identify_vertices,
    rank_and_components,
    relabel,
    remove_vertices,
)
from tforge.graph.structure import is_connected, separates, structure_queries, to_networkx
from tforge.runtime.exceptions import GraphFormatError, InvalidReferenceError, PreconditionError


class TestMultigraph:
    """Tests for Multigraph construction and accessors."""

    def test_from_edges_numbers_edges_in_order(self):
        g = Multigraph.from_edges([(1, 2), (2, 3), (1, 2)])
        assert g.edge_ids == (0, 1, 2)
        assert g.endpoints(2) == (1, 2)
        assert g.multiplicity(1, 2) == 2

    def test_endpoints_are_normalised(self):
        g = Multigraph.from_edges([(5, 2)])
        assert g.endpoints(0) == (2, 5)

    def test_loops_and_degree(self, digon_with_loop):
        assert digon_with_loop.loop_count() == 1
        assert digon_with_loop.loop_count(2) == 1
        assert digon_with_loop.loops() == frozenset({2})
        assert digon_with_loop.degree(2) == 2
        assert digon_with_loop.neighbors(1) == [2]

    def test_unknown_vertex_in_edge_rejected(self):
        with pytest.raises(InvalidReferenceError):
            Multigraph([1, 2], {0: (1, 3)})

    def test_negative_ids_rejected(self):
        with pytest.raises(PreconditionError):
            Multigraph([-1])

    def test_terminal_lists_travel_with_graph(self, k3):
        g = k3.with_terminals(t=(3, 1))
        assert g.terminal("t") == (3, 1)
        with pytest.raises(InvalidReferenceError):
            g.terminal("missing")

    def test_labelled_equality_ignores_name(self, k3):
        assert k3 == k3.with_name("other")
        assert k3 != Multigraph.from_edges([(1, 2), (2, 3)])


class TestOperations:
    """Tests for deletion, contraction and friends."""

    def test_delete_keeps_ids(self, k3):
        g = delete_edges(k3, [1])
        assert g.edge_ids == (0, 2)
        assert g.vertices == k3.vertices

    def test_delete_unknown_edge(self, k3):
        with pytest.raises(InvalidReferenceError):
            delete_edges(k3, [7])

    def test_contract_merges_into_smaller_id(self, k3):
        g, record = contract_edge(k3, 0)
        assert g.vertices == (1, 3)
        assert record.merged_vertex == 1
        assert record(2) == 1
        assert g.multiplicity(1, 3) == 2

    def test_contract_parallel_edge_makes_loop(self, digon_with_loop):
        g, _ = contract_edge(digon_with_loop, 0)
        assert g.num_vertices == 1
        assert g.loop_count() == 2

    def test_contract_loop_deletes_it(self, digon_with_loop):
        g, record = contract_edge(digon_with_loop, 2)
        assert g.loop_count() == 0
        assert record.merged_vertex is None

    def test_identify_vertices(self, c4):
        g = identify_vertices(c4, [1, 3])
        assert g.num_vertices == 3
        assert g.multiplicity(1, 2) == 2

    def test_rank_and_components(self, k4):
        assert rank_and_components(k4, []) == (0, 4)
        assert rank_and_components(k4, k4.edge_ids) == (3, 1)

    def test_add_edges_above_max_id(self, k3):
        g, new = add_edges(k3, [(1, 2)])
        assert new == [3]
        assert g.multiplicity(1, 2) == 2

    def test_relabel_must_be_injective(self, k3):
        assert relabel(k3, {1: 10}).vertices == (2, 3, 10)
        with pytest.raises(PreconditionError):
            relabel(k3, {1: 2})

    def test_remove_vertices_drops_incident_edges(self, k4):
        g = remove_vertices(k4, [4])
        assert g.num_edges == 3

    def test_disjoint_union_offsets_ids(self, k3):
        g, record = disjoint_union(k3, k3)
        assert g.num_vertices == 6
        assert record.vertex_map[1] == 5
        assert record.edge_map[0] == 3


class TestStructure:
    """Tests for bridges, blocks and components."""

    def test_bridges_and_blocks(self):
        # triangle 1-2-3 with a pendant edge 3-4 and a loop at 4
        g = Multigraph.from_edges([(1, 2), (2, 3), (1, 3), (3, 4), (4, 4)])
        s = structure_queries(g)
        assert s.bridges == frozenset({3})
        assert s.loops == frozenset({4})
        assert len(s.blocks) == 3
        assert s.is_connected

    def test_parallel_edge_is_not_a_bridge(self, digon_with_loop):
        assert structure_queries(digon_with_loop).bridges == frozenset()

    def test_components(self):
        g = Multigraph([1, 2, 3], {0: (1, 2)})
        s = structure_queries(g)
        assert [c.vertices for c in s.components] == [(1, 2), (3,)]
        assert not is_connected(g)

    def test_separates(self, c4):
        assert separates(c4, (1, 3), (2,))
        assert not separates(c4, (1,), (2,))

    def test_to_networkx_keeps_edge_ids(self, digon_with_loop):
        nx_graph = to_networkx(digon_with_loop)
        assert nx_graph.number_of_edges() == 3
        assert nx_graph.has_edge(1, 2, key=1)


class TestTextFormat:
    """Tests for reading and writing the line format."""

    def test_parse_with_forward_references_and_terminals(self):
        text = "# sample\ne 0 1 2\nv 1\nv 2\nt ends 2 1\n"
        g = parse_graph(text)
        assert g.edges == {0: (1, 2)}
        assert g.terminal("ends") == (2, 1)

    def test_render_parse_round_trip(self, digon_with_loop):
        g = digon_with_loop.with_terminals(a=(2, 1))
        again = parse_graph(render_graph(g))
        assert again == g
        assert again.terminals == g.terminals

    def test_file_round_trip(self, tmp_path, k4):
        path = write_graph(k4, tmp_path / "k4.g")
        g = read_graph(path)
        assert g == k4
        assert g.name == "k4"

    @pytest.mark.parametrize(
        "text,line",
        [
            ("v 1\nv 1\n", 2),
            ("v 1\ne 0 1 2\n", 2),
            ("v 1\nq 3\n", 2),
            ("v x\n", 1),
            ("v 1\nv 2\ne 0 1 2\ne 0 2 1\n", 4),
        ],
    )
    def test_format_errors_carry_line(self, text, line):
        with pytest.raises(GraphFormatError) as exc:
            parse_graph(text)
        assert exc.value.line == line

    def test_missing_file(self, tmp_path):
        with pytest.raises(GraphFormatError):
            read_graph(tmp_path / "nope.g")
