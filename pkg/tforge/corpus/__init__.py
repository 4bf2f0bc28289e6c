"""Built-in example graphs with runnable property assertions."""

from tforge.corpus.entries import (
    AssertionOutcome,
    CorpusAssertion,
    CorpusEntry,
    CorpusResult,
    corpus,
    generated_witness,
    get_entry,
    run_entry,
    w0_spec,
)
from tforge.corpus.triangles import find_triangles, triangle_edge_distinguisher

__all__ = [
    "AssertionOutcome",
    "CorpusAssertion",
    "CorpusEntry",
    "CorpusResult",
    "corpus",
    "find_triangles",
    "generated_witness",
    "get_entry",
    "run_entry",
    "triangle_edge_distinguisher",
    "w0_spec",
]
