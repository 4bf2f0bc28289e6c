"""Tests for vertex mappings, isomorphism search and canonical codes."""

import itertools
import random
from collections import Counter, defaultdict

import pytest

from tforge.corpus import gallery
from tforge.graph.models import Multigraph
from tforge.graph.ops import relabel
from tforge.iso.canon import canonical_code
from tforge.iso.mapping import VertexMapping
from tforge.iso.search import (
    are_isomorphic,
    automorphisms,
    check_cyclic_orbit,
    check_reflection,
    extend_isomorphism,
    find_isomorphism,
    is_isomorphism,
)
from tforge.runtime.exceptions import GraphFormatError, PreconditionError, SizeLimitError


class TestVertexMapping:
    """Tests for the mapping value type."""

    def test_render_and_parse(self):
        m = VertexMapping.from_dict({3: 1, 1: 2, 2: 3})
        assert m.render() == "1->2,2->3,3->1"
        assert VertexMapping.parse(" 1->2, 2->3,3->1 ") == m

    def test_parse_rejects_garbage(self):
        with pytest.raises(GraphFormatError):
            VertexMapping.parse("1->a")

    def test_repeated_source_rejected(self):
        with pytest.raises(PreconditionError):
            VertexMapping(((1, 2), (1, 3)))

    def test_composition_inverse_and_power(self):
        rot = VertexMapping.from_dict({1: 2, 2: 3, 3: 1})
        assert rot.then(rot) == VertexMapping.from_dict({1: 3, 2: 1, 3: 2})
        assert rot.compose(rot.inverse()) == VertexMapping.identity([1, 2, 3])
        assert rot.power(3) == VertexMapping.identity([1, 2, 3])
        assert rot.power(-1) == rot.inverse()


class TestSearch:
    """Tests for isomorphism search."""

    def test_relabelled_copy_is_isomorphic(self, gray_pair):
        (g, _), _ = gray_pair
        h = relabel(g, {1: 11, 2: 12, 3: 13, 4: 14, 5: 15, 6: 16})
        mapping = find_isomorphism(g, h)
        assert mapping is not None
        assert is_isomorphism(g, h, mapping)

    def test_gray_pair_not_isomorphic(self, gray_pair):
        (g, _), (h, _) = gray_pair
        assert not are_isomorphic(g, h)

    def test_multiplicities_matter(self):
        g = Multigraph.from_edges([(1, 2), (1, 2), (2, 3)])
        h = Multigraph.from_edges([(1, 2), (2, 3), (2, 3)])
        k = Multigraph.from_edges([(1, 2), (2, 3), (3, 3)])
        assert are_isomorphic(g, h)
        assert not are_isomorphic(g, k)

    def test_is_isomorphism_rejects_non_bijection(self, k3):
        assert not is_isomorphism(k3, k3, VertexMapping.from_dict({1: 1, 2: 1, 3: 3}))

    def test_automorphism_count(self, k4, c4):
        assert len(automorphisms(k4)) == 24
        assert len(automorphisms(c4)) == 8

    def test_extend_respects_partial_map(self, c4):
        m = extend_isomorphism(c4, c4, {1: 2, 2: 3})
        assert m is not None
        assert m(1) == 2 and m(2) == 3
        assert extend_isomorphism(c4, c4, {1: 1, 2: 3}) is None

    def test_size_limit(self, k4):
        with pytest.raises(SizeLimitError):
            find_isomorphism(k4, k4, max_vertices=3)


class TestOrbitsAndReflections:
    """Tests for the rotor hypothesis checks."""

    def test_cycle_rotation(self):
        c6 = gallery.cycle_graph(6)
        psi = check_cyclic_orbit(c6, [1, 2, 3, 4, 5, 6])
        assert psi is not None
        assert [psi(i) for i in range(1, 7)] == [2, 3, 4, 5, 6, 1]

    def test_non_orbit(self):
        path = Multigraph.from_edges([(1, 2), (2, 3)])
        assert check_cyclic_orbit(path, [1, 2, 3]) is None

    def test_chiral_rotor_rotates_but_does_not_reflect(self):
        r = gallery.chiral_rotor(6)
        orbit = list(range(1, 7))
        assert check_cyclic_orbit(r, orbit) is not None
        assert all(check_reflection(r, orbit, a) is None for a in range(1, 7))

    def test_c4_reflection_fixing_first_vertex(self, c4):
        rho = check_reflection(c4, [1, 2, 3, 4], 1)
        assert rho is not None
        assert [rho(i) for i in (1, 2, 3, 4)] == [1, 4, 3, 2]

    def test_reflection_index_range(self, c4):
        with pytest.raises(PreconditionError):
            check_reflection(c4, [1, 2, 3, 4], 5)


class TestCanonicalCode:
    """Tests for canonical codes."""

    def test_equal_exactly_for_isomorphic_graphs(self, gray_pair):
        (g, _), (h, _) = gray_pair
        shuffled = relabel(g, {1: 6, 6: 1, 2: 4, 4: 2})
        assert canonical_code(g) == canonical_code(shuffled)
        assert canonical_code(g) != canonical_code(h)

    def test_code_is_bytes_and_deterministic(self, k4):
        code = canonical_code(k4)
        assert isinstance(code, bytes)
        assert code == canonical_code(k4)


class TestCatalogue:
    """Search and canonical codes over every simple graph on at most 6 vertices."""

    @pytest.mark.slow
    def test_class_counts(self, simple_catalogue):
        counts = Counter(g.num_vertices for g in simple_catalogue)
        assert [counts[n] for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]

    @pytest.mark.slow
    def test_shuffled_copies_are_found(self, simple_catalogue):
        rng = random.Random(6)
        for g in simple_catalogue:
            images = list(range(101, 101 + g.num_vertices))
            rng.shuffle(images)
            shuffled = relabel(g, dict(zip(g.vertices, images)))
            mapping = find_isomorphism(g, shuffled)
            assert mapping is not None and is_isomorphism(g, shuffled, mapping), g.edges
            assert canonical_code(shuffled) == canonical_code(g)

    @pytest.mark.slow
    def test_distinct_classes_stay_apart(self, simple_catalogue):
        groups = defaultdict(list)
        for g in simple_catalogue:
            degrees = tuple(sorted(g.degree(v) for v in g.vertices))
            groups[g.num_vertices, g.num_edges, degrees].append(g)
        for members in groups.values():
            for g, h in itertools.combinations(members, 2):
                assert find_isomorphism(g, h) is None, (g.edges, h.edges)
                assert canonical_code(g) != canonical_code(h)


class TestAutomorphismGroup:
    """automorphisms() returns a whole group."""

    @pytest.mark.parametrize("name", ["k4", "c4", "gray", "digon"])
    def test_closed_under_composition_and_inverse(self, name, k4, c4, gray_pair, digon_with_loop):
        g = {"k4": k4, "c4": c4, "gray": gray_pair[0][0], "digon": digon_with_loop}[name]
        auts = automorphisms(g)
        group = {frozenset(a.pairs) for a in auts}
        assert len(group) == len(auts)
        assert frozenset(VertexMapping.identity(g.vertices).pairs) in group
        for a in auts:
            assert frozenset(a.inverse().pairs) in group
            for b in auts:
                assert frozenset(a.then(b).pairs) in group
