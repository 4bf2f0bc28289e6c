"""Line-oriented text format for multigraphs.

    # comment
    v <id>
    e <eid> <u> <v>
    t <name> <id> <id> ...

Edges may reference vertices declared later in the file. Duplicate vertex,
edge or terminal-list declarations are errors.
"""

import logging
from pathlib import Path
from typing import Optional, Union

from tforge.graph.models import Multigraph
from tforge.runtime.exceptions import ForgeError, GraphFormatError

logger = logging.getLogger(__name__)


def _parse_id(token: str, line_no: int, path: Optional[str]) -> int:
    if not token.isdigit():
        raise GraphFormatError(f"expected a non-negative integer, got {token!r}", line_no, path)
    return int(token)


def parse_graph(text: str, name: Optional[str] = None, path: Optional[str] = None) -> Multigraph:
    """Parse the text format into a Multigraph."""
    vertices: set[int] = set()
    edges: dict[int, tuple[int, int]] = {}
    edge_lines: dict[int, int] = {}
    terminals: dict[str, tuple[int, ...]] = {}

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        kind, args = tokens[0], tokens[1:]

        if kind == "v":
            if len(args) != 1:
                raise GraphFormatError("'v' takes exactly one id", line_no, path)
            vid = _parse_id(args[0], line_no, path)
            if vid in vertices:
                raise GraphFormatError(f"duplicate vertex {vid}", line_no, path)
            vertices.add(vid)
        elif kind == "e":
            if len(args) != 3:
                raise GraphFormatError("'e' takes an edge id and two endpoints", line_no, path)
            eid, u, v = (_parse_id(a, line_no, path) for a in args)
            if eid in edges:
                raise GraphFormatError(f"duplicate edge {eid}", line_no, path)
            edges[eid] = (u, v)
            edge_lines[eid] = line_no
        elif kind == "t":
            if len(args) < 2:
                raise GraphFormatError("'t' takes a name and at least one id", line_no, path)
            tname = args[0]
            if tname in terminals:
                raise GraphFormatError(f"duplicate terminal list '{tname}'", line_no, path)
            terminals[tname] = tuple(_parse_id(a, line_no, path) for a in args[1:])
        else:
            raise GraphFormatError(f"unknown record type {kind!r}", line_no, path)

    for eid, (u, v) in edges.items():
        for end in (u, v):
            if end not in vertices:
                raise GraphFormatError(
                    f"edge {eid} uses undeclared vertex {end}", edge_lines[eid], path
                )

    try:
        return Multigraph(vertices, edges, name=name, terminals=terminals)
    except ForgeError as e:
        raise GraphFormatError(str(e), path=path) from e


def render_graph(g: Multigraph) -> str:
    """Render g in the text format; parse_graph(render_graph(g)) == g."""
    lines = []
    if g.name:
        lines.append(f"# {g.name}")
    lines.extend(f"v {v}" for v in g.vertices)
    lines.extend(f"e {eid} {u} {v}" for eid, u, v in g.iter_edges())
    for tname in sorted(g.terminals):
        ids = " ".join(str(v) for v in g.terminal(tname))
        lines.append(f"t {tname} {ids}")
    return "\n".join(lines) + "\n"


def read_graph(path: Union[str, Path]) -> Multigraph:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise GraphFormatError(f"cannot read file: {e.strerror}", path=str(path)) from e
    graph = parse_graph(text, name=path.stem, path=str(path))
    logger.debug(f"Read {graph!r} from {path}")
    return graph


def write_graph(g: Multigraph, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render_graph(g), encoding="utf-8")
    logger.debug(f"Wrote {g!r} to {path}")
    return path
