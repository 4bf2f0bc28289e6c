"""T-equivalence and identities relating Tutte polynomials of related graphs."""

import logging
from dataclasses import dataclass
from typing import Optional

from tforge.graph.models import EdgeId, Multigraph
from tforge.graph.ops import delete_edges
from tforge.graph.structure import is_connected
from tforge.poly.polynomial import BivariatePolynomial
from tforge.runtime.exceptions import PreconditionError
from tforge.tutte.engine import TutteEngine

logger = logging.getLogger(__name__)


def t_equivalent(g: Multigraph, h: Multigraph, engine: Optional[TutteEngine] = None) -> bool:
    """True iff g and h have the same Tutte polynomial."""
    engine = engine or TutteEngine()
    if g.num_edges != h.num_edges or g.loop_count() != h.loop_count():
        return False
    return engine.compute(g) == engine.compute(h)


def loop_count_from_polynomial(p: BivariatePolynomial) -> int:
    """Number of loops of any graph whose Tutte polynomial is p.

    This is the largest r such that y^r divides p.
    """
    return p.y_adic_valuation()


def _check_parallel_pair(g: Multigraph, e1: EdgeId, e2: EdgeId) -> None:
    if e1 == e2:
        raise PreconditionError("a parallel pair needs two distinct edges")
    if g.endpoints(e1) != g.endpoints(e2):
        raise PreconditionError(f"edges {e1} and {e2} are not parallel")
    if g.is_loop(e1):
        raise PreconditionError(f"edges {e1} and {e2} are loops")
    if not is_connected(delete_edges(g, [e1, e2])):
        raise PreconditionError(f"deleting {e1} and {e2} disconnects the graph")


@dataclass
class ParallelPairCheck:
    """Both sides of T(G) = (y+1) T(G minus e1) - y T(G minus e1, e2)."""

    lhs: BivariatePolynomial
    rhs: BivariatePolynomial

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def parallel_pair_identity(
    g: Multigraph, e1: EdgeId, e2: EdgeId, engine: Optional[TutteEngine] = None
) -> ParallelPairCheck:
    _check_parallel_pair(g, e1, e2)
    engine = engine or TutteEngine()
    y = BivariatePolynomial.y()
    one_deleted = engine.compute(delete_edges(g, [e1]))
    both_deleted = engine.compute(delete_edges(g, [e1, e2]))
    rhs = (y + 1) * one_deleted - y * both_deleted
    return ParallelPairCheck(lhs=engine.compute(g), rhs=rhs)


@dataclass
class CorollaryCheck:
    """Which of the three equalities hold for (G, e1, e2) against (H, f1, f2)."""

    pair_deleted_equal: bool
    one_deleted_equal: bool
    whole_equal: bool

    @property
    def equal_count(self) -> int:
        return sum((self.pair_deleted_equal, self.one_deleted_equal, self.whole_equal))

    @property
    def consistent(self) -> bool:
        """Any two equalities force the third, so exactly two can never hold."""
        return self.equal_count != 2

    def to_dict(self) -> dict:
        return {
            "pair_deleted_equal": self.pair_deleted_equal,
            "one_deleted_equal": self.one_deleted_equal,
            "whole_equal": self.whole_equal,
            "consistent": self.consistent,
        }


def corollary_two_of_three(
    g: Multigraph,
    e1: EdgeId,
    e2: EdgeId,
    h: Multigraph,
    f1: EdgeId,
    f2: EdgeId,
    engine: Optional[TutteEngine] = None,
) -> CorollaryCheck:
    _check_parallel_pair(g, e1, e2)
    _check_parallel_pair(h, f1, f2)
    engine = engine or TutteEngine()

    check = CorollaryCheck(
        pair_deleted_equal=engine.compute(delete_edges(g, [e1, e2]))
        == engine.compute(delete_edges(h, [f1, f2])),
        one_deleted_equal=engine.compute(delete_edges(g, [e1]))
        == engine.compute(delete_edges(h, [f1])),
        whole_equal=engine.compute(g) == engine.compute(h),
    )
    if not check.consistent:
        logger.error(f"Exactly two of three equalities hold: {check.to_dict()}")
    return check
