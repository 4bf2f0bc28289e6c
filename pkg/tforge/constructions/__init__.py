"""Graph constructions: gluing, quotients, twists, rotor flips and W0 assemblies."""

from tforge.constructions.gluing import (
    GlueRecord,
    add_edges_S,
    attach_with_record,
    glue,
    glue_with_record,
    quotient,
    whitney_twist,
)
from tforge.constructions.rotors import (
    ReflectionPair,
    flip_rotor,
    reflection_isomorphic_pair,
    require_orbit,
    rotor_flip_pair,
)
from tforge.constructions.terminals import (
    PairSet,
    Partition,
    TerminalList,
    bell,
    pair_subsets,
    partitions,
)
from tforge.constructions.w0 import (
    MAX_GUARANTEED_R,
    PartitionSymmetry,
    W0Report,
    W0Spec,
    assemble_w,
    partition_symmetries,
    partition_symmetry,
    reversed_w_prime,
    s4_all,
    s4_checker,
    theorem5_pair,
    validate_w0,
    w0_flip_pair,
    w0_reversed_pair,
)

__all__ = [
    "GlueRecord",
    "MAX_GUARANTEED_R",
    "PairSet",
    "Partition",
    "PartitionSymmetry",
    "ReflectionPair",
    "TerminalList",
    "W0Report",
    "W0Spec",
    "add_edges_S",
    "assemble_w",
    "attach_with_record",
    "bell",
    "flip_rotor",
    "glue",
    "glue_with_record",
    "pair_subsets",
    "partitions",
    "quotient",
    "reflection_isomorphic_pair",
    "require_orbit",
    "partition_symmetries",
    "partition_symmetry",
    "reversed_w_prime",
    "rotor_flip_pair",
    "s4_all",
    "s4_checker",
    "theorem5_pair",
    "validate_w0",
    "w0_flip_pair",
    "w0_reversed_pair",
    "whitney_twist",
]
