"""Pytest configuration and fixtures."""

import random
from pathlib import Path

import pytest

from tforge.corpus import gallery
from tforge.graph.io import write_graph
from tforge.graph.models import Multigraph
from tforge.iso.canon import canonical_code
from tforge.tutte.engine import TutteEngine


def multigraph_catalogue(max_vertices: int, max_edges: int, simple: bool = False):
    """One representative of every graph class on 1..max_vertices vertices.

    Edge sets grow one slot at a time and each layer is deduplicated by
    canonical code, so isomorphic copies never survive.
    """
    catalogue = []
    for n in range(1, max_vertices + 1):
        vertices = range(1, n + 1)
        slots = [
            (u, v) for u in vertices for v in vertices if u < v or (u == v and not simple)
        ]
        layer = {canonical_code(Multigraph(vertices)): ()}
        catalogue.append(Multigraph(vertices, name=f"n{n}m0"))
        for m in range(1, max_edges + 1):
            grown = {}
            for pairs in layer.values():
                for slot in slots:
                    if simple and slot in pairs:
                        continue
                    candidate = pairs + (slot,)
                    g = Multigraph.from_edges(candidate, vertices=vertices, name=f"n{n}m{m}")
                    grown.setdefault(canonical_code(g), candidate)
            catalogue.extend(
                Multigraph.from_edges(pairs, vertices=vertices, name=f"n{n}m{m}")
                for pairs in grown.values()
            )
            layer = grown
    return catalogue


@pytest.fixture
def k3():
    return gallery.complete_graph(3)


@pytest.fixture
def k4():
    return gallery.complete_graph(4)


@pytest.fixture
def c4():
    return gallery.cycle_graph(4)


@pytest.fixture
def digon_with_loop():
    """Two parallel edges 1-2 and a loop at 2."""
    return Multigraph(range(1, 3), {0: (1, 2), 1: (1, 2), 2: (2, 2)}, name="digon+loop")


@pytest.fixture
def gray_pair():
    """((G*, e), (H*, f))."""
    return gallery.gray_g(), gallery.gray_h()


@pytest.fixture
def engine():
    return TutteEngine()


@pytest.fixture
def rng():
    """Seeded RNG; tests never touch the global one."""
    return random.Random(20240611)


@pytest.fixture
def graph_file(tmp_path):
    """Write a graph into tmp_path and return its path."""

    def write(graph: Multigraph, name: str) -> Path:
        return write_graph(graph, tmp_path / f"{name}.g")

    return write


@pytest.fixture(scope="session")
def small_catalogue():
    """Multigraphs up to isomorphism: at most 5 vertices and 8 edges, loops allowed."""
    return multigraph_catalogue(5, 8)


@pytest.fixture(scope="session")
def simple_catalogue():
    """Simple graphs up to isomorphism on at most 6 vertices."""
    return multigraph_catalogue(6, 15, simple=True)
