"""Vertex bijections between graphs, rendered as ``i->j`` comma lists."""

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from tforge.graph.models import VertexId
from tforge.runtime.exceptions import GraphFormatError, InvalidReferenceError, PreconditionError


@dataclass(frozen=True)
class VertexMapping:
    """A finite map between vertex ids, stored as pairs sorted by source."""

    pairs: tuple[tuple[VertexId, VertexId], ...]
    _table: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        sources = [s for s, _ in self.pairs]
        if len(set(sources)) != len(sources):
            raise PreconditionError("mapping lists a source vertex twice")
        object.__setattr__(self, "pairs", tuple(sorted(self.pairs)))
        object.__setattr__(self, "_table", dict(self.pairs))

    @classmethod
    def from_dict(cls, mapping: Mapping[VertexId, VertexId]) -> "VertexMapping":
        return cls(tuple(mapping.items()))

    @classmethod
    def identity(cls, vertices: Iterable[VertexId]) -> "VertexMapping":
        return cls(tuple((v, v) for v in vertices))

    @classmethod
    def from_sequences(
        cls, sources: Iterable[VertexId], targets: Iterable[VertexId]
    ) -> "VertexMapping":
        sources, targets = list(sources), list(targets)
        if len(sources) != len(targets):
            raise PreconditionError("source and target sequences differ in length")
        return cls(tuple(zip(sources, targets)))

    def as_dict(self) -> dict[VertexId, VertexId]:
        return dict(self._table)

    def __call__(self, v: VertexId) -> VertexId:
        if v in self._table:
            return self._table[v]
        raise InvalidReferenceError("vertex", v, "mapping domain")

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def domain(self) -> tuple[VertexId, ...]:
        return tuple(s for s, _ in self.pairs)

    @property
    def image_sequence(self) -> tuple[VertexId, ...]:
        """Images of the domain in increasing source order (the sort key)."""
        return tuple(t for _, t in self.pairs)

    def is_bijective(self) -> bool:
        return len(set(self.image_sequence)) == len(self.pairs)

    def then(self, other: "VertexMapping") -> "VertexMapping":
        """Apply self first, then other (other ∘ self)."""
        table = other.as_dict()
        return VertexMapping(tuple((s, table[t]) for s, t in self.pairs))

    def compose(self, other: "VertexMapping") -> "VertexMapping":
        """self ∘ other: apply other first."""
        return other.then(self)

    def inverse(self) -> "VertexMapping":
        if not self.is_bijective():
            raise PreconditionError("only a bijection has an inverse")
        return VertexMapping(tuple((t, s) for s, t in self.pairs))

    def power(self, d: int) -> "VertexMapping":
        """self applied d times (d may be negative for bijections)."""
        base = self if d >= 0 else self.inverse()
        result = VertexMapping.identity(self.domain)
        for _ in range(abs(d)):
            result = result.then(base)
        return result

    def restrict(self, vertices: Iterable[VertexId]) -> "VertexMapping":
        keep = set(vertices)
        return VertexMapping(tuple((s, t) for s, t in self.pairs if s in keep))

    def extend(self, extra: Mapping[VertexId, VertexId]) -> "VertexMapping":
        merged = self.as_dict()
        merged.update(extra)
        return VertexMapping.from_dict(merged)

    def render(self) -> str:
        return ",".join(f"{s}->{t}" for s, t in self.pairs)

    @classmethod
    def parse(cls, text: str) -> "VertexMapping":
        pairs = []
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            left, sep, right = chunk.partition("->")
            if not sep or not left.strip().isdigit() or not right.strip().isdigit():
                raise GraphFormatError(f"bad mapping entry {chunk!r}")
            pairs.append((int(left), int(right)))
        return cls(tuple(pairs))

    def __str__(self) -> str:
        return self.render()
