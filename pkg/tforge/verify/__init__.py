"""Computational checkers for T-equivalence conditions under gluing."""

from tforge.verify.expansion import (
    check_expansion_all,
    check_expansion_identity,
    expansion_rhs,
    forest_coefficients,
    pair_graph,
    partition_weight,
)
from tforge.verify.probe import random_connected_multigraph, random_glue_probe, random_multigraph
from tforge.verify.report import CheckFailure, EquivalenceReport
from tforge.verify.theorems import (
    DEFAULT_PARTITION_MAX_K,
    DEFAULT_SUBSET_MAX_K,
    check_corollary,
    check_necessary,
    check_theorem_partitions,
    check_theorem_subsets,
)

__all__ = [
    "CheckFailure",
    "DEFAULT_PARTITION_MAX_K",
    "DEFAULT_SUBSET_MAX_K",
    "EquivalenceReport",
    "check_corollary",
    "check_expansion_all",
    "check_expansion_identity",
    "check_necessary",
    "check_theorem_partitions",
    "check_theorem_subsets",
    "expansion_rhs",
    "forest_coefficients",
    "pair_graph",
    "partition_weight",
    "random_connected_multigraph",
    "random_glue_probe",
    "random_multigraph",
]
