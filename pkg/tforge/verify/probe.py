"""Seeded random multigraphs and random gluing probes."""

import logging
import random
from typing import Optional

from tforge.constructions.gluing import glue
from tforge.constructions.terminals import TerminalList
from tforge.graph.models import Multigraph
from tforge.runtime.exceptions import HypothesisError
from tforge.tutte.engine import TutteEngine
from tforge.verify.report import EquivalenceReport
from tforge.verify.theorems import DEFAULT_PARTITION_MAX_K, check_theorem_partitions

logger = logging.getLogger(__name__)


def random_multigraph(
    rng: random.Random,
    num_vertices: int,
    edge_probability: float = 0.5,
    multiplicity_cap: int = 2,
    loop_probability: float = 0.1,
    name: Optional[str] = None,
) -> Multigraph:
    """Vertices 1..n; each pair gets 1..cap parallel edges with edge_probability,
    each vertex a loop with loop_probability."""
    pairs = []
    for u in range(1, num_vertices + 1):
        if rng.random() < loop_probability:
            pairs.append((u, u))
        for v in range(u + 1, num_vertices + 1):
            if rng.random() < edge_probability:
                pairs.extend([(u, v)] * rng.randint(1, multiplicity_cap))
    return Multigraph.from_edges(pairs, vertices=range(1, num_vertices + 1), name=name)


def random_connected_multigraph(
    rng: random.Random,
    num_vertices: int,
    edge_probability: float = 0.3,
    multiplicity_cap: int = 2,
    loop_probability: float = 0.0,
    name: Optional[str] = None,
) -> Multigraph:
    """A random spanning tree on 1..n plus random_multigraph edges on top."""
    tree = [(rng.randint(1, v - 1), v) for v in range(2, num_vertices + 1)]
    extra = random_multigraph(
        rng, num_vertices, edge_probability, multiplicity_cap, loop_probability
    )
    pairs = tree + [(u, v) for _, u, v in extra.iter_edges()]
    return Multigraph.from_edges(pairs, vertices=range(1, num_vertices + 1), name=name)


def random_glue_probe(
    gt: TerminalList,
    ht: TerminalList,
    trials: int = 25,
    seed: int = 0,
    extra_vertices: int = 3,
    multiplicity_cap: int = 2,
    loop_probability: float = 0.1,
    engine: Optional[TutteEngine] = None,
    precheck: bool = True,
) -> EquivalenceReport:
    """Compare T(G ⊔ W) with T(H ⊔ W) for `trials` random W glued at w_1..w_k.

    With precheck the partition condition must pass first (HypothesisError otherwise).
    """
    engine = engine or TutteEngine()
    k = gt.k
    if precheck:
        if k > DEFAULT_PARTITION_MAX_K:
            raise HypothesisError(f"k={k} too large to pre-check the partition condition")
        pre = check_theorem_partitions(gt, ht, engine)
        if not pre.passed:
            raise HypothesisError(
                "partition condition fails", [f.instance for f in pre.failures]
            )

    rng = random.Random(seed)
    report = EquivalenceReport("probe")
    for trial in range(trials):
        size = k + rng.randint(0, extra_vertices)
        w = random_multigraph(
            rng,
            size,
            multiplicity_cap=multiplicity_cap,
            loop_probability=loop_probability,
            name=f"W{trial}",
        )
        wt = TerminalList(w, tuple(range(1, k + 1)))
        same = report.record(
            f"trial {trial}",
            engine.compute(glue(gt, wt)),
            engine.compute(glue(ht, wt)),
            detail=f"W: {w.num_vertices} vertices, {w.num_edges} edges, {w.loop_count()} loops",
        )
        logger.info(f"trial {trial}: {w!r} glued at 1..{k}, equal={same}")
    report.counters = {"trials": trials, "seed": seed}
    if not report.passed:
        logger.error(f"Random probe found {len(report.failures)} counterexamples (seed {seed})")
    return report
