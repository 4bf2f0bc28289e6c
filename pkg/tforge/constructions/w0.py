"""W0 rotor assemblies: order-rg flips built from a rotation phi and a reflection rho.

W0 carries a w-list w_1..w_rg and an x-list x_1..x_r with automorphisms

    phi(w_i) = w_{i+g},         phi(x_s) = x_{s+1}
    rho(w_{1+s}) = w_{c-s},     rho(x_{1+i}) = x_{c'-i}

(all indices cyclic). Gluing any Y at the x-list gives a W whose w-list can
be flipped against a rotor R with k = rg, provided r <= 5.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional

from tforge.constructions.gluing import attach_with_record, glue
from tforge.constructions.rotors import rotor_flip_pair
from tforge.constructions.terminals import Partition, TerminalList, partitions
from tforge.graph.models import Multigraph, VertexId
from tforge.iso.mapping import VertexMapping
from tforge.iso.search import DEFAULT_MAX_VERTICES, extend_isomorphism, is_isomorphism
from tforge.runtime.exceptions import ArityError, HypothesisError

logger = logging.getLogger(__name__)

MAX_GUARANTEED_R = 5


@dataclass
class W0Spec:
    """A W0 candidate; phi, rho, c and c_prime are searched for when omitted."""

    w0: Multigraph
    w_list: tuple[VertexId, ...]
    x_list: tuple[VertexId, ...]
    r: int
    g: int
    phi: Optional[VertexMapping] = None
    rho: Optional[VertexMapping] = None
    c: Optional[int] = None
    c_prime: Optional[int] = None

    def __post_init__(self):
        self.w_list = tuple(self.w_list)
        self.x_list = tuple(self.x_list)
        if self.r < 1:
            raise ArityError("r (x-list length, at least)", 1, self.r)
        if self.g < 1:
            raise ArityError("g (at least)", 1, self.g)
        if len(self.x_list) != self.r:
            raise ArityError("x-list length", self.r, len(self.x_list))
        if len(self.w_list) != self.r * self.g:
            raise ArityError("w-list length (r*g)", self.r * self.g, len(self.w_list))

    @property
    def k(self) -> int:
        return self.r * self.g

    def w(self, i: int) -> VertexId:
        """w_i, 1-based and cyclic."""
        return self.w_list[(i - 1) % self.k]

    def x(self, i: int) -> VertexId:
        return self.x_list[(i - 1) % self.r]

    def rotation_targets(self) -> dict[VertexId, VertexId]:
        targets = {self.w(i): self.w(i + self.g) for i in range(1, self.k + 1)}
        targets.update({self.x(s): self.x(s + 1) for s in range(1, self.r + 1)})
        return targets

    def reflection_targets(self, c: int, c_prime: int) -> dict[VertexId, VertexId]:
        targets = {self.w(1 + s): self.w(c - s) for s in range(self.k)}
        targets.update({self.x(1 + i): self.x(c_prime - i) for i in range(self.r)})
        return targets


@dataclass
class W0Report:
    """Outcome of validate_w0."""

    valid: bool
    violations: list[str] = field(default_factory=list)
    phi: Optional[VertexMapping] = None
    rho: Optional[VertexMapping] = None
    c: Optional[int] = None
    c_prime: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "violations": list(self.violations),
            "phi": self.phi.render() if self.phi else None,
            "rho": self.rho.render() if self.rho else None,
            "c": self.c,
            "c_prime": self.c_prime,
        }


def _matches(mapping: VertexMapping, targets: dict[VertexId, VertexId]) -> bool:
    return all(mapping(v) == t for v, t in targets.items())


def _find_reflection(spec: W0Spec, max_vertices: int) -> Optional[tuple[VertexMapping, int, int]]:
    c_values = [spec.c] if spec.c is not None else range(1, spec.k + 1)
    c_prime_values = [spec.c_prime] if spec.c_prime is not None else range(1, spec.r + 1)
    for c in c_values:
        for c_prime in c_prime_values:
            targets = spec.reflection_targets(c, c_prime)
            if len(set(targets.values())) != len(targets):
                continue
            rho = extend_isomorphism(spec.w0, spec.w0, targets, max_vertices)
            if rho is not None:
                return rho, c, c_prime
    return None


def validate_w0(spec: W0Spec, max_vertices: int = DEFAULT_MAX_VERTICES) -> W0Report:
    """Check both automorphism conditions, discovering phi, rho, c, c' as needed."""
    report = W0Report(valid=False)
    w0 = spec.w0

    if w0.loop_count():
        report.violations.append("W0 must be loopless")
    overlap = set(spec.w_list) & set(spec.x_list)
    if overlap:
        report.violations.append(f"w-list and x-list share vertices {sorted(overlap)}")
    for v in (*spec.w_list, *spec.x_list):
        if not w0.has_vertex(v):
            report.violations.append(f"vertex {v} is not in W0")
    if len(set(spec.w_list)) != len(spec.w_list) or len(set(spec.x_list)) != len(spec.x_list):
        report.violations.append("w-list and x-list must hold distinct vertices")
    if report.violations:
        return report

    rotation = spec.rotation_targets()
    if spec.phi is not None:
        if not is_isomorphism(w0, w0, spec.phi):
            report.violations.append("condition 1: phi is not an automorphism of W0")
        elif not _matches(spec.phi, rotation):
            report.violations.append("condition 1: phi does not shift w by g and x by 1")
        else:
            report.phi = spec.phi
    else:
        report.phi = extend_isomorphism(w0, w0, rotation, max_vertices)
        if report.phi is None:
            report.violations.append("condition 1: no automorphism shifts w by g and x by 1")

    if spec.rho is not None:
        rho = spec.rho
        c = spec.w_list.index(rho(spec.w(1))) + 1 if rho(spec.w(1)) in spec.w_list else 0
        c_prime = spec.x_list.index(rho(spec.x(1))) + 1 if rho(spec.x(1)) in spec.x_list else 0
        if not is_isomorphism(w0, w0, rho):
            report.violations.append("condition 2: rho is not an automorphism of W0")
        elif not c or not c_prime or not _matches(rho, spec.reflection_targets(c, c_prime)):
            report.violations.append("condition 2: rho does not reflect the w-list and x-list")
        else:
            report.rho, report.c, report.c_prime = rho, c, c_prime
    else:
        found = _find_reflection(spec, max_vertices)
        if found is None:
            report.violations.append("condition 2: no automorphism reflects both lists")
        else:
            report.rho, report.c, report.c_prime = found

    report.valid = not report.violations
    logger.debug(f"W0 validation: {report.to_dict()}")
    return report


def _require_valid(spec: W0Spec, force: bool, max_vertices: int) -> W0Report:
    report = validate_w0(spec, max_vertices)
    if not report.valid and not force:
        raise HypothesisError("W0 conditions fail", report.violations)
    if not report.valid:
        logger.warning(f"Using invalid W0 ({'; '.join(report.violations)}); no guarantee holds")
    return report


def assemble_w(spec: W0Spec, yt: TerminalList) -> TerminalList:
    """W = W0(x_1..x_r) ⊔ Y(y_1..y_r), returned with its w-list as terminals."""
    if yt.k != spec.r:
        raise ArityError("Y terminal list length (r)", spec.r, yt.k)
    w, _ = attach_with_record(TerminalList(spec.w0, spec.x_list), yt)
    return TerminalList(w, spec.w_list)


def reversed_w_prime(spec: W0Spec, yt: TerminalList) -> TerminalList:
    """W' = W0(x_r..x_1) ⊔ Y(y_1..y_r), with its w-list as terminals."""
    if yt.k != spec.r:
        raise ArityError("Y terminal list length (r)", spec.r, yt.k)
    w_prime, _ = attach_with_record(TerminalList(spec.w0, tuple(reversed(spec.x_list))), yt)
    return TerminalList(w_prime, spec.w_list)


def w0_flip_pair(
    rt: TerminalList,
    spec: W0Spec,
    yt: TerminalList,
    force: bool = False,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> tuple[Multigraph, Multigraph]:
    """R(u_1..u_rg) ⊔ W and R(u_rg..u_1) ⊔ W for W = W0 ⊔ Y glued at the x-list.

    T-equivalent whenever W0 is valid, R rotates its terminals and r <= 5.
    """
    if rt.k != spec.k:
        raise ArityError("rotor terminal list length (r*g)", spec.k, rt.k)
    if spec.r > MAX_GUARANTEED_R:
        if not force:
            raise HypothesisError(f"r={spec.r} exceeds {MAX_GUARANTEED_R}")
        logger.warning(f"r={spec.r} > {MAX_GUARANTEED_R}: T-equivalence is not guaranteed")
    _require_valid(spec, force, max_vertices)
    return rotor_flip_pair(rt, assemble_w(spec, yt), force=force, max_vertices=max_vertices)


def w0_reversed_pair(
    rt: TerminalList,
    spec: W0Spec,
    yt: TerminalList,
    force: bool = False,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> tuple[Multigraph, Multigraph]:
    """R(u_1..u_rg) ⊔ W and R(u_rg..u_1) ⊔ W'; isomorphic for every r and g."""
    if rt.k != spec.k:
        raise ArityError("rotor terminal list length (r*g)", spec.k, rt.k)
    _require_valid(spec, force, max_vertices)
    w = assemble_w(spec, yt)
    w_prime = reversed_w_prime(spec, yt)
    return glue(rt, w), glue(rt.reversed(), w_prime)


@dataclass(frozen=True)
class PartitionSymmetry:
    """pi = rho phi^d with pi(w_{1+s}) = w_{p-s} and pi(Q) = Q, found at (b, b')."""

    p: int
    d: int
    b: int
    b_prime: int


def partition_symmetry(
    spec: W0Spec, q: Partition, max_vertices: int = DEFAULT_MAX_VERTICES
) -> Optional[PartitionSymmetry]:
    """Search b, b' in [r] with d = c' + 1 - b - b' for a pi fixing q."""
    if q.k != spec.r:
        raise ArityError("partition index range (r)", spec.r, q.k)
    report = _require_valid(spec, False, max_vertices)
    x_index = {v: i for i, v in enumerate(spec.x_list, start=1)}
    w_index = {v: i for i, v in enumerate(spec.w_list, start=1)}

    for b in range(1, spec.r + 1):
        for b_prime in range(1, spec.r + 1):
            d = report.c_prime + 1 - b - b_prime
            pi = report.phi.power(d).then(report.rho)
            p = w_index.get(pi(spec.w(1)))
            if p is None or any(pi(spec.w(1 + s)) != spec.w(p - s) for s in range(spec.k)):
                continue
            images = {i: x_index.get(pi(spec.x(i))) for i in range(1, spec.r + 1)}
            if None in images.values():
                continue
            if q.apply(images) == q:
                return PartitionSymmetry(p=p, d=d, b=b, b_prime=b_prime)
    return None


def partition_symmetries(
    spec: W0Spec, max_vertices: int = DEFAULT_MAX_VERTICES
) -> dict[str, Optional[PartitionSymmetry]]:
    """partition_symmetry over every partition of [r], keyed by rendered partition."""
    return {q.render(): partition_symmetry(spec, q, max_vertices) for q in partitions(spec.r)}


# Alternative names for the W0 flip and the partition search.
theorem5_pair = w0_flip_pair
s4_checker = partition_symmetry
s4_all = partition_symmetries
