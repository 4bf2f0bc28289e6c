"""Backtracking isomorphism search over refined vertex classes."""

import logging
from typing import Iterator, Mapping, Optional, Sequence

from tforge.graph.models import Multigraph, VertexId
from tforge.iso.mapping import VertexMapping
from tforge.iso.matrix import (
    Cells,
    MultiplicityMatrix,
    individualise,
    initial_cells,
    refine,
)
from tforge.runtime.exceptions import (
    InvalidReferenceError,
    PreconditionError,
    SizeLimitError,
)

logger = logging.getLogger(__name__)

DEFAULT_MAX_VERTICES = 12


def check_size(g: Multigraph, max_vertices: int) -> None:
    if g.num_vertices > max_vertices:
        raise SizeLimitError(g.num_vertices, max_vertices)


def _cell_index(cells: Cells) -> dict[int, int]:
    return {v: i for i, cell in enumerate(cells) for v in cell}


def _aligned_cells(
    mg: MultiplicityMatrix,
    mh: MultiplicityMatrix,
    fixed: Sequence[tuple[int, int]],
) -> Optional[tuple[Cells, Cells]]:
    """Refine both graphs in lockstep, individualising each fixed pair.

    Returns None as soon as the refinement traces diverge.
    """
    cells_g, trace_g = initial_cells(mg)
    cells_h, trace_h = initial_cells(mh)
    if trace_g != trace_h:
        return None
    cells_g, trace_g = refine(mg, cells_g)
    cells_h, trace_h = refine(mh, cells_h)
    if trace_g != trace_h:
        return None

    for a, b in fixed:
        idx_g, idx_h = _cell_index(cells_g), _cell_index(cells_h)
        if idx_g[a] != idx_h[b]:
            return None
        cells_g, trace_g = refine(mg, individualise(cells_g, idx_g[a], a))
        cells_h, trace_h = refine(mh, individualise(cells_h, idx_h[b], b))
        if trace_g != trace_h:
            return None
    return cells_g, cells_h


def _search(
    mg: MultiplicityMatrix,
    mh: MultiplicityMatrix,
    fixed: Sequence[tuple[int, int]] = (),
) -> Iterator[dict[int, int]]:
    """Yield index bijections g -> h in lexicographic order of image labels."""
    n = mg.size
    if n != mh.size:
        return
    if sorted(mg.loops) != sorted(mh.loops):
        return
    if sorted(mg.degree(i) for i in range(n)) != sorted(mh.degree(i) for i in range(n)):
        return

    aligned = _aligned_cells(mg, mh, fixed)
    if aligned is None:
        return
    cells_g, cells_h = aligned
    class_g = _cell_index(cells_g)
    members_h = {i: sorted(cell) for i, cell in enumerate(cells_h)}

    mapping: dict[int, int] = {}
    for a, b in fixed:
        if mg.loops[a] != mh.loops[b]:
            return
        for c, d in mapping.items():
            if mg.matrix[a][c] != mh.matrix[b][d]:
                return
        mapping[a] = b
    used = set(mapping.values())
    order = [v for v in range(n) if v not in mapping]

    def extend(depth: int) -> Iterator[dict[int, int]]:
        if depth == len(order):
            yield dict(mapping)
            return
        v = order[depth]
        row_g = mg.matrix[v]
        for w in members_h[class_g[v]]:
            if w in used or mg.loops[v] != mh.loops[w]:
                continue
            row_h = mh.matrix[w]
            if any(row_g[c] != row_h[d] for c, d in mapping.items()):
                continue
            mapping[v] = w
            used.add(w)
            yield from extend(depth + 1)
            del mapping[v]
            used.discard(w)

    yield from extend(0)


def _as_vertex_mapping(
    mg: MultiplicityMatrix, mh: MultiplicityMatrix, index_map: dict[int, int]
) -> VertexMapping:
    return VertexMapping(tuple((mg.labels[a], mh.labels[b]) for a, b in index_map.items()))


def iter_isomorphisms(
    g: Multigraph,
    h: Multigraph,
    partial: Optional[Mapping[VertexId, VertexId]] = None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> Iterator[VertexMapping]:
    """Lazily yield isomorphisms g -> h extending partial, in canonical order."""
    check_size(g, max_vertices)
    check_size(h, max_vertices)
    mg, mh = MultiplicityMatrix.from_graph(g), MultiplicityMatrix.from_graph(h)
    index_g = {v: i for i, v in enumerate(mg.labels)}
    index_h = {v: i for i, v in enumerate(mh.labels)}

    fixed = []
    for a, b in (partial or {}).items():
        if a not in index_g:
            raise InvalidReferenceError("vertex", a, g.name)
        if b not in index_h:
            raise InvalidReferenceError("vertex", b, h.name)
        fixed.append((index_g[a], index_h[b]))
    if len({b for _, b in fixed}) != len(fixed):
        return

    for index_map in _search(mg, mh, fixed):
        yield _as_vertex_mapping(mg, mh, index_map)


def find_isomorphism(
    g: Multigraph, h: Multigraph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> Optional[VertexMapping]:
    """Some multiplicity-preserving bijection g -> h, or None."""
    return next(iter_isomorphisms(g, h, max_vertices=max_vertices), None)


def extend_isomorphism(
    g: Multigraph,
    h: Multigraph,
    partial: Mapping[VertexId, VertexId],
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> Optional[VertexMapping]:
    return next(iter_isomorphisms(g, h, partial, max_vertices), None)


def enumerate_isomorphisms(
    g: Multigraph, h: Multigraph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> list[VertexMapping]:
    """Every isomorphism g -> h, ordered lexicographically by image sequence."""
    found = list(iter_isomorphisms(g, h, max_vertices=max_vertices))
    logger.debug(f"Enumerated {len(found)} isomorphisms {g!r} -> {h!r}")
    return found


def automorphisms(g: Multigraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> list[VertexMapping]:
    return enumerate_isomorphisms(g, g, max_vertices)


def are_isomorphic(g: Multigraph, h: Multigraph, max_vertices: int = DEFAULT_MAX_VERTICES) -> bool:
    return find_isomorphism(g, h, max_vertices) is not None


def is_isomorphism(g: Multigraph, h: Multigraph, mapping: VertexMapping) -> bool:
    """Check that mapping is a bijection V(g) -> V(h) preserving every multiplicity."""
    if set(mapping.domain) != g.vertex_set or set(mapping.image_sequence) != h.vertex_set:
        return False
    if not mapping.is_bijective():
        return False
    if g.num_edges != h.num_edges:
        return False
    h_counts = h.multiplicities()
    for (u, v), k in g.multiplicities().items():
        a, b = mapping(u), mapping(v)
        if h_counts.get((min(a, b), max(a, b)), 0) != k:
            return False
    return True


def _check_sequence(g: Multigraph, seq: Sequence[VertexId], what: str) -> None:
    if len(set(seq)) != len(seq):
        raise PreconditionError(f"{what} repeats a vertex")
    for v in seq:
        if not g.has_vertex(v):
            raise InvalidReferenceError("vertex", v, g.name)


def check_cyclic_orbit(
    r: Multigraph, orbit: Sequence[VertexId], max_vertices: int = DEFAULT_MAX_VERTICES
) -> Optional[VertexMapping]:
    """An automorphism psi of r with psi(u_i) = u_{i+1} cyclically, or None."""
    orbit = list(orbit)
    _check_sequence(r, orbit, "orbit")
    if not orbit:
        raise PreconditionError("orbit is empty")
    k = len(orbit)
    partial = {orbit[i]: orbit[(i + 1) % k] for i in range(k)}
    psi = extend_isomorphism(r, r, partial, max_vertices)
    if psi is None:
        logger.debug(f"No automorphism of {r!r} rotates orbit {orbit}")
    return psi


def reflection_targets(ws: Sequence[VertexId], a: int) -> dict[VertexId, VertexId]:
    """The prescribed values rho(w_{1+s}) = w_{a-s}, indices mod k and 1-based."""
    k = len(ws)
    return {ws[s]: ws[(a - s - 1) % k] for s in range(k)}


def check_reflection(
    w: Multigraph,
    ws: Sequence[VertexId],
    a: int,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> Optional[VertexMapping]:
    """An automorphism rho with rho(w_{1+s}) = w_{a-s} for all s, or None."""
    ws = list(ws)
    _check_sequence(w, ws, "terminal list")
    k = len(ws)
    if not 1 <= a <= k:
        raise PreconditionError(f"reflection index a={a} outside [1, {k}]")
    return extend_isomorphism(w, w, reflection_targets(ws, a), max_vertices)
