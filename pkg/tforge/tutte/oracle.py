"""Brute-force Tutte polynomial and spanning-tree counters.

These are deliberately independent of the deletion-contraction engine and
serve as its reference.
"""

import itertools
import logging
from math import comb

from tforge.graph.models import Multigraph
from tforge.graph.ops import rank_and_components
from tforge.graph.structure import is_connected
from tforge.poly.polynomial import BivariatePolynomial
from tforge.runtime.exceptions import OracleLimitError, PreconditionError
from tforge.runtime.performance import timed

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_EDGE_LIMIT = 20


class _RollbackForest:
    """Union-find with union by size and undo, no path compression."""

    def __init__(self, vertices):
        self.parent = {v: v for v in vertices}
        self.size = {v: 1 for v in vertices}
        self.history: list = []

    def find(self, v):
        while self.parent[v] != v:
            v = self.parent[v]
        return v

    def union(self, u, v) -> bool:
        a, b = self.find(u), self.find(v)
        if a == b:
            self.history.append(None)
            return False
        if self.size[a] < self.size[b]:
            a, b = b, a
        self.parent[b] = a
        self.size[a] += self.size[b]
        self.history.append((a, b))
        return True

    def undo(self) -> None:
        step = self.history.pop()
        if step is not None:
            a, b = step
            self.parent[b] = b
            self.size[a] -= self.size[b]


def rank_size_counts(g: Multigraph) -> dict[tuple[int, int], int]:
    """Number of edge subsets A for every (r(A), |A|)."""
    edges = [(u, v) for _, u, v in g.iter_edges()]
    forest = _RollbackForest(g.vertices)
    counts: dict[tuple[int, int], int] = {}

    def walk(i: int, rank: int, size: int) -> None:
        if i == len(edges):
            counts[(rank, size)] = counts.get((rank, size), 0) + 1
            return
        walk(i + 1, rank, size)
        u, v = edges[i]
        merged = forest.union(u, v)
        walk(i + 1, rank + (1 if merged else 0), size + 1)
        forest.undo()

    walk(0, 0, 0)
    return counts


def _shifted_power(n: int, var: int) -> BivariatePolynomial:
    """(x - 1)^n when var == 0, (y - 1)^n when var == 1."""
    terms = {}
    for i in range(n + 1):
        coefficient = comb(n, i) * (-1) ** (n - i)
        terms[(i, 0) if var == 0 else (0, i)] = coefficient
    return BivariatePolynomial(terms)


@timed("tutte.subset_expansion")
def tutte_subset_expansion(
    g: Multigraph, edge_limit: int = DEFAULT_ORACLE_EDGE_LIMIT
) -> BivariatePolynomial:
    """Sum over all edge subsets A of (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A))."""
    if g.num_edges > edge_limit:
        raise OracleLimitError(g.num_edges, edge_limit)

    full_rank, _ = rank_and_components(g, g.edge_ids)
    counts = rank_size_counts(g)
    logger.debug(f"Subset expansion of {g!r}: {len(counts)} (rank, size) classes")

    total = BivariatePolynomial.zero()
    for (rank, size), count in counts.items():
        term = _shifted_power(full_rank - rank, 0) * _shifted_power(size - rank, 1)
        total = total + term.scale(count)
    return total


def brute_force_tree_count(g: Multigraph) -> int:
    """Count (|V|-1)-edge subsets that form a spanning tree."""
    n = g.num_vertices
    candidates = [e for e in g.edge_ids if not g.is_loop(e)]
    count = 0
    for subset in itertools.combinations(candidates, n - 1):
        rank, _ = rank_and_components(g, subset)
        if rank == n - 1:
            count += 1
    return count


def kirchhoff_tree_count(g: Multigraph) -> int:
    """Matrix-tree theorem: determinant of a reduced Laplacian (Bareiss, exact)."""
    vertices = g.vertices
    n = len(vertices)
    if n <= 1:
        return 1
    index = {v: i for i, v in enumerate(vertices)}
    laplacian = [[0] * n for _ in range(n)]
    for _, u, v in g.iter_edges():
        if u == v:
            continue
        a, b = index[u], index[v]
        laplacian[a][a] += 1
        laplacian[b][b] += 1
        laplacian[a][b] -= 1
        laplacian[b][a] -= 1

    m = [row[1:] for row in laplacian[1:]]
    size = n - 1
    sign = 1
    previous = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if m[r][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // previous
        previous = m[k][k]
    return sign * m[size - 1][size - 1]


def spanning_tree_count(g: Multigraph, method: str = "brute") -> int:
    """Number of spanning trees of a connected multigraph.

    method is "brute" (subset enumeration) or "kirchhoff" (matrix-tree).
    """
    if not is_connected(g) or g.num_vertices == 0:
        raise PreconditionError("spanning trees need a connected, non-empty graph")
    if method == "brute":
        return brute_force_tree_count(g)
    if method == "kirchhoff":
        return kirchhoff_tree_count(g)
    raise PreconditionError(f"unknown tree-count method {method!r}")
