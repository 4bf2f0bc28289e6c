"""Exact isomorphism, automorphisms, orbit checks and canonical codes."""

from tforge.iso.canon import CanonicalCode, canonical_code, canonical_code_of_matrix
from tforge.iso.mapping import VertexMapping
from tforge.iso.matrix import MultiplicityMatrix
from tforge.iso.search import (
    DEFAULT_MAX_VERTICES,
    are_isomorphic,
    automorphisms,
    check_cyclic_orbit,
    check_reflection,
    enumerate_isomorphisms,
    extend_isomorphism,
    find_isomorphism,
    is_isomorphism,
    iter_isomorphisms,
    reflection_targets,
)

__all__ = [
    "CanonicalCode",
    "DEFAULT_MAX_VERTICES",
    "MultiplicityMatrix",
    "VertexMapping",
    "are_isomorphic",
    "automorphisms",
    "canonical_code",
    "canonical_code_of_matrix",
    "check_cyclic_orbit",
    "check_reflection",
    "enumerate_isomorphisms",
    "extend_isomorphism",
    "find_isomorphism",
    "is_isomorphism",
    "iter_isomorphisms",
    "reflection_targets",
]
