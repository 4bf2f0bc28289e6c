"""Canonical codes by individualisation and refinement.

The code is the lexicographically smallest (loop row, upper multiplicity
triangle) over the leaves of the search tree. Branches on twin vertices
are skipped since swapping twins is an automorphism.
"""

from tforge.graph.models import Multigraph
from tforge.iso.matrix import (
    Cells,
    MultiplicityMatrix,
    individualise,
    initial_cells,
    refine,
    target_cell,
)
from tforge.iso.search import DEFAULT_MAX_VERTICES, check_size

CanonicalCode = bytes


def _leaf(m: MultiplicityMatrix, cells: Cells) -> tuple[int, ...]:
    order = [cell[0] for cell in cells]
    n = len(order)
    loops = tuple(m.loops[v] for v in order)
    upper = tuple(m.matrix[order[i]][order[j]] for i in range(n) for j in range(i + 1, n))
    return loops + upper


def _representatives(m: MultiplicityMatrix, cell: list[int]) -> list[int]:
    reps: list[int] = []
    for v in sorted(cell):
        if not any(m.twins(v, r) for r in reps):
            reps.append(v)
    return reps


def canonical_form(m: MultiplicityMatrix) -> tuple[int, ...]:
    """Smallest leaf over the pruned search tree."""
    best: list[tuple[int, ...]] = []
    start, _ = initial_cells(m)
    start, _ = refine(m, start)

    stack = [start]
    while stack:
        cells = stack.pop()
        t = target_cell(cells)
        if t < 0:
            leaf = _leaf(m, cells)
            if not best or leaf < best[0]:
                best[:] = [leaf]
            continue
        for v in reversed(_representatives(m, cells[t])):
            refined, _ = refine(m, individualise(cells, t, v))
            stack.append(refined)

    return best[0] if best else ()


def encode(n: int, form: tuple[int, ...]) -> CanonicalCode:
    loops = ",".join(str(c) for c in form[:n])
    upper = ",".join(str(c) for c in form[n:])
    return f"{n}|{loops}|{upper}".encode("ascii")


def canonical_code_of_matrix(m: MultiplicityMatrix) -> CanonicalCode:
    return encode(m.size, canonical_form(m))


def canonical_code(g: Multigraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> CanonicalCode:
    """Isomorphism-complete code: equal iff the graphs are isomorphic."""
    check_size(g, max_vertices)
    return canonical_code_of_matrix(MultiplicityMatrix.from_graph(g))
