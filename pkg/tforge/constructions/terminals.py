"""Terminal lists, partitions of [k] and index-pair sets."""

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from tforge.graph.models import Multigraph, VertexId
from tforge.runtime.exceptions import GraphFormatError, InvalidReferenceError, PreconditionError


@dataclass(frozen=True)
class TerminalList:
    """Ordered distinct vertices u_1..u_k of one graph (1-based in all APIs)."""

    graph: Multigraph
    vertices: tuple[VertexId, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if len(set(self.vertices)) != len(self.vertices):
            raise PreconditionError("terminal vertices must be distinct")
        for v in self.vertices:
            if not self.graph.has_vertex(v):
                raise InvalidReferenceError("vertex", v, self.graph.name)

    @classmethod
    def named(cls, graph: Multigraph, name: str) -> "TerminalList":
        """Terminal list stored on the graph under name (a ``t`` record)."""
        return cls(graph, graph.terminal(name))

    @property
    def k(self) -> int:
        return len(self.vertices)

    def __getitem__(self, i: int) -> VertexId:
        """u_i for 1 <= i <= k, indices taken mod k."""
        return self.vertices[(i - 1) % self.k]

    def reversed(self) -> "TerminalList":
        return TerminalList(self.graph, tuple(reversed(self.vertices)))

    def on(self, graph: Multigraph) -> "TerminalList":
        """Same vertex ids on another graph."""
        return TerminalList(graph, self.vertices)


@dataclass(frozen=True)
class Partition:
    """Partition of [k] into nonempty blocks, sorted by smallest element."""

    k: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if any(not b for b in self.blocks):
            raise PreconditionError("partition blocks must be nonempty")
        blocks = tuple(sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0]))
        seen = [i for b in blocks for i in b]
        if sorted(seen) != list(range(1, self.k + 1)):
            raise PreconditionError(f"blocks {blocks} do not partition [1..{self.k}]")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def of(cls, k: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        return cls(k, tuple(tuple(b) for b in blocks))

    @classmethod
    def discrete(cls, k: int) -> "Partition":
        return cls(k, tuple((i,) for i in range(1, k + 1)))

    @classmethod
    def single(cls, k: int) -> "Partition":
        return cls(k, (tuple(range(1, k + 1)),))

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    def block_of(self, i: int) -> tuple[int, ...]:
        for b in self.blocks:
            if i in b:
                return b
        raise InvalidReferenceError("index", i, f"partition of [{self.k}]")

    def same_block(self, i: int, j: int) -> bool:
        return j in self.block_of(i)

    def refines(self, other: "Partition") -> bool:
        """True when every block of self lies inside a block of other."""
        return all(set(b) <= set(other.block_of(b[0])) for b in self.blocks)

    def apply(self, mapping: Mapping[int, int]) -> "Partition":
        """Image partition under a permutation of [k] (unmapped indices fixed)."""
        return Partition(self.k, tuple(tuple(mapping.get(i, i) for i in b) for b in self.blocks))

    def render(self) -> str:
        return "".join("{" + ",".join(str(i) for i in b) + "}" for b in self.blocks)

    @classmethod
    def parse(cls, text: str, k: int) -> "Partition":
        """Parse ``{1,2}{3}``; missing indices become singletons."""
        blocks = []
        for chunk in text.replace(" ", "").split("}"):
            if not chunk:
                continue
            if not chunk.startswith("{"):
                raise GraphFormatError(f"bad partition block {chunk!r}")
            body = chunk[1:]
            try:
                blocks.append(tuple(int(t) for t in body.split(",") if t))
            except ValueError as e:
                raise GraphFormatError(f"bad partition block {chunk!r}") from e
        used = {i for b in blocks for i in b}
        blocks.extend((i,) for i in range(1, k + 1) if i not in used)
        return cls(k, tuple(blocks))

    def __str__(self) -> str:
        return self.render()


def partitions(k: int) -> Iterator[Partition]:
    """All partitions of [k] (Bell(k) of them) via restricted growth strings."""
    if k == 0:
        yield Partition(0, ())
        return

    def grow(prefix: list[int], top: int) -> Iterator[list[int]]:
        if len(prefix) == k:
            yield prefix
            return
        for label in range(top + 2):
            yield from grow(prefix + [label], max(top, label))

    for labels in grow([0], 0):
        blocks: dict[int, list[int]] = {}
        for index, label in enumerate(labels, start=1):
            blocks.setdefault(label, []).append(index)
        yield Partition(k, tuple(tuple(b) for b in blocks.values()))


def bell(k: int) -> int:
    """Bell number via the Bell triangle."""
    row = [1]
    for _ in range(k):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        row = nxt
    return row[0]


@dataclass(frozen=True)
class PairSet:
    """A set S of index pairs {i, j} with 1 <= i < j <= k."""

    k: int
    pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        normal = set()
        for i, j in self.pairs:
            i, j = min(i, j), max(i, j)
            if i == j or i < 1 or j > self.k:
                raise PreconditionError(f"pair {{{i},{j}}} not within [1..{self.k}]")
            normal.add((i, j))
        object.__setattr__(self, "pairs", frozenset(normal))

    @classmethod
    def of(cls, k: int, pairs: Iterable[Sequence[int]]) -> "PairSet":
        return cls(k, frozenset((p[0], p[1]) for p in pairs))

    @classmethod
    def complete(cls, k: int) -> "PairSet":
        return cls(k, frozenset(itertools.combinations(range(1, k + 1), 2)))

    def sorted_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.pairs)

    def within(self, block: Iterable[int]) -> list[tuple[int, int]]:
        members = set(block)
        return [(i, j) for i, j in self.sorted_pairs() if i in members and j in members]

    def __len__(self) -> int:
        return len(self.pairs)

    def render(self) -> str:
        return ",".join(f"{i}-{j}" for i, j in self.sorted_pairs()) or "-"

    @classmethod
    def parse(cls, text: str, k: int) -> "PairSet":
        text = text.strip()
        if text in ("", "-"):
            return cls(k, frozenset())
        pairs = []
        for chunk in text.split(","):
            left, sep, right = chunk.strip().partition("-")
            if not sep or not left.isdigit() or not right.isdigit():
                raise GraphFormatError(f"bad index pair {chunk!r}")
            pairs.append((int(left), int(right)))
        return cls.of(k, pairs)


def pair_subsets(k: int) -> Iterator[PairSet]:
    """All 2^(k choose 2) subsets of the index pairs of [k], smallest first."""
    universe = sorted(PairSet.complete(k).pairs)
    for size in range(len(universe) + 1):
        for chosen in itertools.combinations(universe, size):
            yield PairSet(k, frozenset(chosen))
