"""YAML witness documents: seed graphs, marked edges, phi, psi and rotor assignments.

Graphs are embedded in the text graph format so a document replays on its
own; ``source`` fields only record where a graph was read from.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

import yaml

from tforge.graph.io import parse_graph, render_graph
from tforge.iso.mapping import VertexMapping
from tforge.phigen.attach import CycleRotorAssignment
from tforge.phigen.witness import PhiWitness
from tforge.runtime.exceptions import ForgeError, GraphFormatError, PreconditionError

logger = logging.getLogger(__name__)

WITNESS_FORMAT_VERSION = 1


@dataclass
class WitnessDocument:
    """A witness plus the rotor assignments to replay on it."""

    witness: PhiWitness
    assignments: list[CycleRotorAssignment] = field(default_factory=list)
    g_source: Optional[str] = None
    h_source: Optional[str] = None

    def to_dict(self) -> dict:
        w = self.witness
        return {
            "version": WITNESS_FORMAT_VERSION,
            "g": {"source": self.g_source, "name": w.g.name, "graph": render_graph(w.g)},
            "h": {"source": self.h_source, "name": w.h.name, "graph": render_graph(w.h)},
            "e": w.e,
            "f": w.f,
            "phi": w.phi.render(),
            "psi": w.psi.render(),
            "psi_index": w.psi_index,
            "assignments": [
                {
                    "cycle": list(a.cycle),
                    "rotor": {"name": a.rotor.name, "graph": render_graph(a.rotor)},
                    "orbit": list(a.orbit),
                }
                for a in self.assignments
            ],
        }

    @classmethod
    def from_dict(cls, data: dict, path: Optional[str] = None) -> "WitnessDocument":
        try:
            version = data.get("version", WITNESS_FORMAT_VERSION)
            if version != WITNESS_FORMAT_VERSION:
                raise GraphFormatError(f"unsupported witness version {version}", path=path)
            g_doc, h_doc = data["g"], data["h"]
            g = parse_graph(g_doc["graph"], name=g_doc.get("name"), path=path)
            h = parse_graph(h_doc["graph"], name=h_doc.get("name"), path=path)
            witness = PhiWitness(
                g,
                int(data["e"]),
                h,
                int(data["f"]),
                VertexMapping.parse(str(data["phi"])),
                VertexMapping.parse(str(data["psi"])),
                psi_index=int(data.get("psi_index", 0)),
            )
            assignments = []
            for entry in data.get("assignments") or []:
                rotor_doc = entry["rotor"]
                rotor = parse_graph(rotor_doc["graph"], name=rotor_doc.get("name"), path=path)
                assignments.append(
                    CycleRotorAssignment.build(entry["cycle"], rotor, entry["orbit"])
                )
        except (KeyError, TypeError, ValueError, AttributeError) as e:
            raise GraphFormatError(f"malformed witness document: {e}", path=path) from e

        if not witness.verify():
            raise PreconditionError("witness mappings are not isomorphisms")
        return cls(witness, assignments, g_doc.get("source"), h_doc.get("source"))


def write_witness(document: WitnessDocument, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        yaml.safe_dump(document.to_dict(), f, default_flow_style=False, sort_keys=False)
    logger.info(f"Wrote witness to {path}")
    return path


def read_witness(path: Union[str, Path]) -> WitnessDocument:
    """Load and re-verify a witness document."""
    path = Path(path)
    try:
        with open(path) as f:
            data = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise GraphFormatError(f"invalid YAML: {e}", path=str(path)) from e
    except OSError as e:
        raise GraphFormatError(f"cannot read witness: {e}", path=str(path)) from e
    if not isinstance(data, dict):
        raise GraphFormatError("expected a YAML mapping", path=str(path))
    try:
        return WitnessDocument.from_dict(data, path=str(path))
    except GraphFormatError:
        raise
    except ForgeError as e:
        raise GraphFormatError(str(e), path=str(path)) from e
