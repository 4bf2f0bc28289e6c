"""Tutte polynomial engines: subset-expansion oracle and deletion-contraction."""

from tforge.tutte.cache import MemoCache
from tforge.tutte.engine import EdgePickPolicy, EngineConfig, EngineStats, TutteEngine, tutte_dc
from tforge.tutte.identities import (
    CorollaryCheck,
    ParallelPairCheck,
    corollary_two_of_three,
    loop_count_from_polynomial,
    parallel_pair_identity,
    t_equivalent,
)
from tforge.tutte.oracle import (
    DEFAULT_ORACLE_EDGE_LIMIT,
    brute_force_tree_count,
    kirchhoff_tree_count,
    spanning_tree_count,
    tutte_subset_expansion,
)

__all__ = [
    "CorollaryCheck",
    "DEFAULT_ORACLE_EDGE_LIMIT",
    "EdgePickPolicy",
    "EngineConfig",
    "EngineStats",
    "MemoCache",
    "ParallelPairCheck",
    "TutteEngine",
    "brute_force_tree_count",
    "corollary_two_of_three",
    "kirchhoff_tree_count",
    "loop_count_from_polynomial",
    "parallel_pair_identity",
    "spanning_tree_count",
    "t_equivalent",
    "tutte_dc",
    "tutte_subset_expansion",
]
