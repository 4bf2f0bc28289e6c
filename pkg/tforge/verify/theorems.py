"""Checkers for the two sufficient conditions of T-equivalence under gluing,
the necessary conditions, and the two-of-three corollary."""

import logging
from math import comb
from typing import Iterable, Optional

from tforge.constructions.gluing import add_edges_S, quotient
from tforge.constructions.terminals import TerminalList, bell, pair_subsets, partitions
from tforge.graph.models import EdgeId, Multigraph
from tforge.runtime.exceptions import ArityError, BudgetError, ForgeError
from tforge.runtime.performance import benchmark
from tforge.tutte.engine import TutteEngine
from tforge.tutte.identities import corollary_two_of_three
from tforge.verify.report import EquivalenceReport

logger = logging.getLogger(__name__)

DEFAULT_SUBSET_MAX_K = 4
DEFAULT_PARTITION_MAX_K = 6


def _check_lengths(gt: TerminalList, ht: TerminalList) -> int:
    if gt.k != ht.k:
        raise ArityError("terminal list lengths", gt.k, ht.k)
    return gt.k


def _engine_counters(engine: TutteEngine) -> dict[str, int]:
    stats = engine.stats
    return {
        "recursion_nodes": stats.recursion_nodes,
        "cache_hits": stats.cache_hits,
        "branches": stats.branches,
    }


def check_theorem_subsets(
    gt: TerminalList,
    ht: TerminalList,
    engine: Optional[TutteEngine] = None,
    max_k: int = DEFAULT_SUBSET_MAX_K,
) -> EquivalenceReport:
    """T(G_S) = T(H_S) for every set S of index pairs of [k]."""
    k = _check_lengths(gt, ht)
    count = 2 ** comb(k, 2)
    if k > max_k:
        raise BudgetError("pair subsets", count, 2 ** comb(max_k, 2))
    engine = engine or TutteEngine()
    report = EquivalenceReport("subsets")

    with benchmark("verify.subsets"):
        for s in pair_subsets(k):
            report.record(
                f"S={s.render()}",
                engine.compute(add_edges_S(gt, s)),
                engine.compute(add_edges_S(ht, s)),
            )
    report.counters = _engine_counters(engine)
    logger.info(f"Subset condition on k={k}: {report.verdict} ({count} sets)")
    return report


def check_theorem_partitions(
    gt: TerminalList,
    ht: TerminalList,
    engine: Optional[TutteEngine] = None,
    max_k: int = DEFAULT_PARTITION_MAX_K,
) -> EquivalenceReport:
    """T(G(P)) = T(H(P)) for every partition P of [k]."""
    k = _check_lengths(gt, ht)
    if k > max_k:
        raise BudgetError("partitions", bell(k), bell(max_k))
    engine = engine or TutteEngine()
    report = EquivalenceReport("partitions")

    with benchmark("verify.partitions"):
        for p in partitions(k):
            report.record(
                f"P={p.render()}",
                engine.compute(quotient(gt, p)),
                engine.compute(quotient(ht, p)),
            )
    report.counters = _engine_counters(engine)
    logger.info(f"Partition condition on k={k}: {report.verdict} ({bell(k)} partitions)")
    return report


def check_necessary(gt: TerminalList, ht: TerminalList) -> EquivalenceReport:
    """Equal loop counts and equal multiplicities between every terminal pair."""
    k = _check_lengths(gt, ht)
    report = EquivalenceReport("necessary")
    g, h = gt.graph, ht.graph

    if g.loop_count() != h.loop_count():
        report.fail("loops", f"{g.loop_count()} loops vs {h.loop_count()}")
    else:
        report.ok()
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            left, right = g.multiplicity(gt[i], gt[j]), h.multiplicity(ht[i], ht[j])
            if left != right:
                report.fail(f"{i}-{j}", f"{left} edges vs {right}")
            else:
                report.ok()
    return report


CorollaryInstance = tuple[Multigraph, EdgeId, EdgeId, Multigraph, EdgeId, EdgeId]


def check_corollary(
    instances: Iterable[CorollaryInstance], engine: Optional[TutteEngine] = None
) -> EquivalenceReport:
    """Exactly two of the three equalities never hold together."""
    engine = engine or TutteEngine()
    report = EquivalenceReport("two-of-three")
    for index, (g, e1, e2, h, f1, f2) in enumerate(instances):
        label = f"#{index} {g.name or 'G'}/{h.name or 'H'}"
        try:
            check = corollary_two_of_three(g, e1, e2, h, f1, f2, engine)
        except ForgeError as e:
            report.notes.append(f"{label} skipped: {e}")
            continue
        if check.consistent:
            report.ok()
        else:
            report.fail(label, f"{check.equal_count} of 3 equalities hold")
    report.counters = _engine_counters(engine)
    return report
