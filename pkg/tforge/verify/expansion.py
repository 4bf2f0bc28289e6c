"""The spanning-forest expansion of T(G_S) over the partition quotients G(P).

    T(G_S) = sum over partitions P of [k] of  w(P, S) * T(G(P))

where w(P, S) is the product over blocks B of T_{N_S[B]}(1, y), and N_S is
the simple graph on [k] with one edge per pair in S. w is 0 as soon as some
N_S[B] is disconnected. When S restricted to every block is a forest,
w(P, S) = a(P, S) * y^n(P, S) with a the number of spanning forests of N_S
whose trees span exactly the blocks of P and n = e(P, S) - k + #blocks.
"""

import logging
from math import comb
from typing import Optional

from tforge.constructions.gluing import add_edges_S, quotient
from tforge.constructions.terminals import (
    PairSet,
    Partition,
    TerminalList,
    pair_subsets,
    partitions,
)
from tforge.graph.models import Multigraph
from tforge.graph.ops import induced_subgraph
from tforge.graph.structure import is_connected
from tforge.poly.polynomial import BivariatePolynomial
from tforge.runtime.exceptions import (
    ArityError,
    BudgetError,
    IdentityViolationError,
    PreconditionError,
)
from tforge.tutte.engine import TutteEngine
from tforge.tutte.oracle import kirchhoff_tree_count
from tforge.verify.report import EquivalenceReport
from tforge.verify.theorems import DEFAULT_SUBSET_MAX_K

logger = logging.getLogger(__name__)


def pair_graph(s: PairSet) -> Multigraph:
    """N_S: vertices 1..k, one edge per pair of s."""
    return Multigraph.from_edges(s.sorted_pairs(), vertices=range(1, s.k + 1), name="N_S")


def _check(s: PairSet, p: Partition, k: int) -> None:
    if s.k != k:
        raise ArityError("pair set index range", k, s.k)
    if p.k != k:
        raise ArityError("partition index range", k, p.k)


def forest_coefficients(s: PairSet, p: Partition, k: int) -> tuple[int, int]:
    """(a, n): spanning forests of N_S with components exactly p's blocks, and
    n = e(P, S) - k + (number of blocks)."""
    _check(s, p, k)
    n_s = pair_graph(s)
    a = 1
    inside = 0
    for block in p.blocks:
        part = induced_subgraph(n_s, block)
        inside += part.num_edges
        if len(block) > 1:
            a *= kirchhoff_tree_count(part) if is_connected(part) else 0
    return a, inside - k + p.num_blocks


def partition_weight(
    s: PairSet, p: Partition, k: int, engine: Optional[TutteEngine] = None
) -> BivariatePolynomial:
    """Coefficient of T(G(P)) in the expansion of T(G_S); a polynomial in y only."""
    _check(s, p, k)
    engine = engine or TutteEngine()
    n_s = pair_graph(s)
    weight = BivariatePolynomial.one()
    for block in p.blocks:
        part = induced_subgraph(n_s, block)
        if not is_connected(part):
            return BivariatePolynomial.zero()
        weight = weight * engine.compute(part).substitute_x(1)
    return weight


def expansion_rhs(
    gt: TerminalList, s: PairSet, engine: Optional[TutteEngine] = None
) -> BivariatePolynomial:
    engine = engine or TutteEngine()
    total = BivariatePolynomial.zero()
    for p in partitions(gt.k):
        weight = partition_weight(s, p, gt.k, engine)
        if not weight.is_zero():
            total = total + weight * engine.compute(quotient(gt, p))
    return total


def check_expansion_identity(
    gt: TerminalList,
    s: PairSet,
    engine: Optional[TutteEngine] = None,
    strict: bool = True,
) -> EquivalenceReport:
    """Compare T(G_S) with the partition expansion.

    With strict a mismatch raises IdentityViolationError.
    """
    if s.k != gt.k:
        raise ArityError("pair set index range", gt.k, s.k)
    if not is_connected(gt.graph):
        raise PreconditionError(f"{gt.graph!r} must be connected")
    engine = engine or TutteEngine()

    report = EquivalenceReport("expansion")
    lhs = engine.compute(add_edges_S(gt, s))
    rhs = expansion_rhs(gt, s, engine)
    if not report.record(f"S={s.render()}", lhs, rhs) and strict:
        raise IdentityViolationError(f"T(G_S) != expansion for S={s.render()}: {lhs} vs {rhs}")
    return report


def check_expansion_all(
    gt: TerminalList,
    engine: Optional[TutteEngine] = None,
    max_k: int = DEFAULT_SUBSET_MAX_K,
    strict: bool = True,
) -> EquivalenceReport:
    """check_expansion_identity for every S, merged into one report."""
    if gt.k > max_k:
        raise BudgetError("pair subsets", 2 ** comb(gt.k, 2), 2 ** comb(max_k, 2))
    engine = engine or TutteEngine()
    merged = EquivalenceReport("expansion")
    for s in pair_subsets(gt.k):
        single = check_expansion_identity(gt, s, engine, strict)
        merged.instances_checked += single.instances_checked
        merged.failures.extend(single.failures)
    logger.info(f"Expansion identity on k={gt.k}: {merged.verdict}")
    return merged
