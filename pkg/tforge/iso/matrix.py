"""Dense multiplicity-matrix form and colour refinement shared by search and canon."""

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from tforge.graph.models import Multigraph, VertexId

Cells = list[list[int]]


@dataclass(frozen=True)
class MultiplicityMatrix:
    """Graph over indices 0..n-1: symmetric edge multiplicities plus loop counts.

    labels[i] is the VertexId behind index i (labels are sorted ascending).
    """

    labels: tuple[VertexId, ...]
    matrix: tuple[tuple[int, ...], ...]
    loops: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.labels)

    @classmethod
    def from_graph(cls, g: Multigraph) -> "MultiplicityMatrix":
        loops = {}
        counts = {}
        for _, u, v in g.iter_edges():
            if u == v:
                loops[u] = loops.get(u, 0) + 1
            else:
                counts[(u, v)] = counts.get((u, v), 0) + 1
        return cls.from_counts(g.vertices, counts, loops)

    @classmethod
    def from_counts(
        cls,
        vertices: Iterable[VertexId],
        counts: Mapping[tuple[VertexId, VertexId], int],
        loops: Optional[Mapping[VertexId, int]] = None,
    ) -> "MultiplicityMatrix":
        labels = tuple(sorted(vertices))
        index = {v: i for i, v in enumerate(labels)}
        rows = [[0] * len(labels) for _ in labels]
        for (u, v), k in counts.items():
            a, b = index[u], index[v]
            rows[a][b] += k
            rows[b][a] += k
        loop_row = tuple((loops or {}).get(v, 0) for v in labels)
        return cls(labels, tuple(tuple(r) for r in rows), loop_row)

    def degree(self, i: int) -> int:
        return sum(self.matrix[i])

    def twins(self, a: int, b: int) -> bool:
        """Swapping a and b is an automorphism."""
        if self.loops[a] != self.loops[b]:
            return False
        row_a, row_b = self.matrix[a], self.matrix[b]
        return all(row_a[w] == row_b[w] for w in range(self.size) if w != a and w != b)


def initial_cells(m: MultiplicityMatrix) -> tuple[Cells, list[tuple]]:
    """Cells by (loop count, weighted degree), ordered by that key."""
    groups: dict[tuple, list[int]] = {}
    for i in range(m.size):
        groups.setdefault((m.loops[i], m.degree(i)), []).append(i)
    keys = sorted(groups)
    return [groups[k] for k in keys], [("init", tuple(keys), tuple(len(groups[k]) for k in keys))]


def refine(m: MultiplicityMatrix, cells: Sequence[Sequence[int]]) -> tuple[Cells, list[tuple]]:
    """Split cells until equitable; return the cells and a trace.

    A vertex's signature is, per current cell, the sorted multiplicities of
    its edges into that cell. The trace records each split, so two graphs
    whose traces differ cannot be isomorphic under the same individualisation.
    """
    cells = [list(c) for c in cells]
    trace: list[tuple] = []
    changed = True
    while changed:
        changed = False
        new_cells: Cells = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                row = m.matrix[v]
                signature = tuple(
                    tuple(sorted(row[w] for w in other if row[w])) for other in cells
                )
                groups.setdefault(signature, []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
                continue
            keys = sorted(groups)
            trace.append((len(new_cells), tuple(keys), tuple(len(groups[k]) for k in keys)))
            new_cells.extend(groups[k] for k in keys)
            changed = True
        cells = new_cells
    return cells, trace


def individualise(cells: Cells, cell_index: int, v: int) -> Cells:
    """Split v off into its own cell placed just before the rest of its cell."""
    rest = [w for w in cells[cell_index] if w != v]
    if not rest:
        return [list(c) for c in cells]
    return cells[:cell_index] + [[v], rest] + cells[cell_index + 1:]


def target_cell(cells: Cells) -> int:
    """Index of the first smallest non-singleton cell, or -1 when discrete."""
    best = -1
    for i, cell in enumerate(cells):
        if len(cell) > 1 and (best < 0 or len(cell) < len(cells[best])):
            best = i
    return best
