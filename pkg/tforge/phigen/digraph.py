"""The digraph D_psi on [n] and its directed cycles."""

import logging
from dataclasses import dataclass, field

import networkx as nx

from tforge.phigen.witness import MERGED, PhiWitness
from tforge.runtime.exceptions import FalsifiedPropositionError

logger = logging.getLogger(__name__)

Arc = tuple[int, int]
IndexCycle = tuple[int, ...]


@dataclass(frozen=True)
class PsiDigraph:
    """Arcs i -> j on [n] read off psi; n+2 arcs when psi(u_{s1s2}) = v_{t1t2}, else n+1."""

    n: int
    arcs: tuple[Arc, ...]

    @property
    def num_arcs(self) -> int:
        return len(self.arcs)

    def has_arc(self, i: int, j: int) -> bool:
        return (i, j) in self.arcs

    def to_networkx(self) -> nx.DiGraph:
        d = nx.DiGraph()
        d.add_nodes_from(range(1, self.n + 1))
        d.add_edges_from(self.arcs)
        return d

    def to_dict(self) -> dict:
        return {"n": self.n, "arcs": [list(a) for a in self.arcs]}


def build_psi_digraph(w: PhiWitness) -> PsiDigraph:
    """Arcs i -> j exactly when psi sends u_i to v_j, treating e's and f's ends as one."""
    s, t = set(w.s), set(w.t)
    arcs = set()
    for i in range(1, w.n + 1):
        if i in s and i != w.s[0]:
            continue
        j = w.psi_target_index(i)
        sources = sorted(s) if i in s else [i]
        targets = sorted(t) if j == MERGED else [j]
        arcs.update((a, b) for a in sources for b in targets)
    digraph = PsiDigraph(w.n, tuple(sorted(arcs)))
    logger.debug(f"D_psi for psi #{w.psi_index}: {digraph.num_arcs} arcs on {w.n} vertices")
    return digraph


def _normalise(cycle: list[int]) -> IndexCycle:
    start = cycle.index(min(cycle))
    return tuple(cycle[start:] + cycle[:start])


def directed_cycles(d: PsiDigraph) -> list[IndexCycle]:
    """Every elementary directed cycle, rotated to start at its smallest index, sorted."""
    cycles = {_normalise(list(c)) for c in nx.simple_cycles(d.to_networkx())}
    return sorted(cycles)


def cycle_arcs(cycle: IndexCycle) -> list[Arc]:
    k = len(cycle)
    return [(cycle[i], cycle[(i + 1) % k]) for i in range(k)]


@dataclass
class CyclePairingVerdict:
    """Whether s1, s2 and t1, t2 sit on a cycle together, and the arc clause."""

    cycle: IndexCycle
    s_on_cycle: bool
    t_on_cycle: bool
    holds: bool
    violations: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "cycle": list(self.cycle),
            "s_on_cycle": self.s_on_cycle,
            "t_on_cycle": self.t_on_cycle,
            "holds": self.holds,
            "violations": list(self.violations),
        }


def check_cycle_pairing(
    w: PhiWitness, cycle: IndexCycle, strict: bool = True
) -> CyclePairingVerdict:
    """Both s1, s2 lie on the cycle iff both t1, t2 do.

    When they do, psi(u_{s1s2}) = v_{t1t2} and the cycle uses arcs s1 -> t_j
    and s2 -> t_{3-j}. With strict a violation raises FalsifiedPropositionError.
    """
    (s1, s2), (t1, t2) = w.s, w.t
    members = set(cycle)
    s_on = s1 in members and s2 in members
    t_on = t1 in members and t2 in members
    violations = []
    if s_on != t_on:
        violations.append(f"s={w.s} on cycle is {s_on} but t={w.t} on cycle is {t_on}")
    if s_on and t_on:
        if w.psi_target_index(s1) != MERGED:
            violations.append("psi(u_{s1s2}) is not v_{t1t2}")
        arcs = set(cycle_arcs(cycle))
        if not ({(s1, t1), (s2, t2)} <= arcs or {(s1, t2), (s2, t1)} <= arcs):
            violations.append("cycle does not pair s1, s2 with t1, t2 by arcs")

    verdict = CyclePairingVerdict(tuple(cycle), s_on, t_on, not violations, violations)
    if violations and strict:
        raise FalsifiedPropositionError(f"cycle {cycle}: {'; '.join(violations)}")
    return verdict


check_dig1 = check_cycle_pairing
