"""Deletion-contraction Tutte engine with reductions and memoisation.

The engine works on a compact bundle form: a map from each non-loop
endpoint pair (u, v), u < v, to (multiplicity, smallest edge id). Loops are
stripped first as a y^L factor; the rest is split into blocks and every
block is reduced by whole parallel classes at once:

    T(G) = T(G \\ F) + (1 + y + ... + y^(k-1)) T((G \\ F) . uv)

for a k-edge bundle F between u and v.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields
from enum import Enum
from typing import Optional

from tforge.graph.models import Multigraph
from tforge.graph.structure import block_edge_groups
from tforge.iso.canon import canonical_code_of_matrix
from tforge.iso.matrix import MultiplicityMatrix
from tforge.poly.polynomial import BivariatePolynomial
from tforge.runtime.config import EngineSettings
from tforge.runtime.exceptions import ConfigurationError
from tforge.runtime.performance import timed
from tforge.tutte.cache import MemoCache

logger = logging.getLogger(__name__)

Pair = tuple[int, int]
Bundles = dict[Pair, tuple[int, int]]

DEFAULT_MEMO_MAX_ENTRIES = 500_000


class EdgePickPolicy(str, Enum):
    """How the engine chooses the next parallel class to branch on."""

    MAX_DEGREE_SUM = "max_degree_sum"
    FIRST_ID = "first_id"

    @property
    def description(self) -> str:
        return {
            EdgePickPolicy.MAX_DEGREE_SUM: "largest endpoint degree sum, ties by edge id",
            EdgePickPolicy.FIRST_ID: "class holding the smallest surviving edge id",
        }[self]


@dataclass
class EngineConfig:
    """Engine knobs; correctness never depends on them."""

    memo_enabled: bool = True
    memo_canonical_max_vertices: int = 10
    edge_pick_policy: EdgePickPolicy = EdgePickPolicy.MAX_DEGREE_SUM
    parallel_tasks: int = 1
    memo_max_entries: Optional[int] = DEFAULT_MEMO_MAX_ENTRIES

    def __post_init__(self):
        self.edge_pick_policy = EdgePickPolicy(self.edge_pick_policy)
        if self.memo_canonical_max_vertices < 0:
            raise ConfigurationError("memo_canonical_max_vertices must be >= 0")
        if self.parallel_tasks < 1:
            raise ConfigurationError("parallel_tasks must be >= 1")

    @classmethod
    def from_settings(cls, settings: EngineSettings) -> "EngineConfig":
        return cls(
            memo_enabled=settings.memo_enabled,
            memo_canonical_max_vertices=settings.memo_canonical_max_vertices,
            edge_pick_policy=EdgePickPolicy(settings.edge_pick_policy),
            parallel_tasks=settings.parallel_tasks,
        )

    def to_dict(self) -> dict:
        return {
            "memo_enabled": self.memo_enabled,
            "memo_canonical_max_vertices": self.memo_canonical_max_vertices,
            "edge_pick_policy": self.edge_pick_policy.value,
            "parallel_tasks": self.parallel_tasks,
            "memo_max_entries": self.memo_max_entries,
        }


@dataclass
class EngineStats:
    """Counters for one engine; merged from worker engines when parallel."""

    recursion_nodes: int = 0
    cache_hits: int = 0
    cache_misses: int = 0
    loops_stripped: int = 0
    bridges_contracted: int = 0
    blocks_split: int = 0
    bundles_reduced: int = 0
    branches: int = 0
    canonical_keys: int = 0
    labelled_keys: int = 0

    def merge(self, other: "EngineStats") -> None:
        for f in fields(self):
            setattr(self, f.name, getattr(self, f.name) + getattr(other, f.name))

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def bundle_form(g: Multigraph) -> tuple[int, Bundles]:
    """(loop count, bundles) for g."""
    loops = 0
    bundles: Bundles = {}
    for eid, u, v in g.iter_edges():
        if u == v:
            loops += 1
            continue
        count, first = bundles.get((u, v), (0, eid))
        bundles[(u, v)] = (count + 1, min(first, eid))
    return loops, bundles


def _adjacency(bundles: Bundles) -> dict[int, set[int]]:
    adjacency: dict[int, set[int]] = {}
    for u, v in bundles:
        adjacency.setdefault(u, set()).add(v)
        adjacency.setdefault(v, set()).add(u)
    return adjacency


def split_blocks(bundles: Bundles) -> list[Bundles]:
    """Partition bundles into blocks, ordered by smallest edge id."""
    groups = block_edge_groups(_adjacency(bundles))
    blocks = []
    for group in groups:
        block = {}
        for u, v in group:
            key = (u, v) if u < v else (v, u)
            block[key] = bundles[key]
        blocks.append(block)
    blocks.sort(key=lambda b: min(first for _, first in b.values()))
    return blocks


def contract_bundle(bundles: Bundles, chosen: Pair) -> Bundles:
    """Remove the chosen class and merge its larger end into its smaller end."""
    keep, gone = chosen
    merged: Bundles = {}
    for (a, b), (count, first) in bundles.items():
        if (a, b) == chosen:
            continue
        a = keep if a == gone else a
        b = keep if b == gone else b
        key = (a, b) if a < b else (b, a)
        if key in merged:
            c0, f0 = merged[key]
            merged[key] = (c0 + count, min(f0, first))
        else:
            merged[key] = (count, first)
    return merged


def pick_bundle(bundles: Bundles, policy: EdgePickPolicy) -> Pair:
    if policy == EdgePickPolicy.FIRST_ID:
        return min(bundles, key=lambda p: bundles[p][1])
    degree: dict[int, int] = {}
    for (u, v), (count, _) in bundles.items():
        degree[u] = degree.get(u, 0) + count
        degree[v] = degree.get(v, 0) + count
    return min(bundles, key=lambda p: (-(degree[p[0]] + degree[p[1]]), bundles[p][1]))


class TutteEngine:
    """Deletion-contraction evaluator sharing one memo cache across calls."""

    def __init__(self, config: Optional[EngineConfig] = None, cache: Optional[MemoCache] = None):
        self.config = config or EngineConfig()
        if cache is None:
            cache = MemoCache(self.config.memo_max_entries)
        self.cache = cache
        self.stats = EngineStats()

    def _worker(self) -> "TutteEngine":
        return TutteEngine(self.config, self.cache)

    @timed("tutte.dc")
    def compute(self, g: Multigraph) -> BivariatePolynomial:
        """Tutte polynomial of g."""
        loops, bundles = bundle_form(g)
        self.stats.loops_stripped += loops
        result = self._product(bundles, top_level=True)
        if loops:
            result = result.shift(0, loops)
        logger.debug(
            f"T({g.name or 'graph'}) done: {self.stats.recursion_nodes} nodes, "
            f"{self.stats.cache_hits} cache hits"
        )
        return result

    def _product(self, bundles: Bundles, top_level: bool = False) -> BivariatePolynomial:
        if not bundles:
            return BivariatePolynomial.one()
        blocks = split_blocks(bundles)
        if len(blocks) == 1:
            return self._block(blocks[0])
        self.stats.blocks_split += len(blocks) - 1

        if top_level and self.config.parallel_tasks > 1:
            workers = [self._worker() for _ in blocks]
            with ThreadPoolExecutor(max_workers=self.config.parallel_tasks) as pool:
                parts = list(pool.map(lambda job: job[0]._block(job[1]), zip(workers, blocks)))
            for worker in workers:
                self.stats.merge(worker.stats)
        else:
            parts = [self._block(block) for block in blocks]

        result = BivariatePolynomial.one()
        for part in parts:
            result = result * part
        return result

    def _memo_key(self, bundles: Bundles) -> tuple:
        vertices = {v for pair in bundles for v in pair}
        if len(vertices) <= self.config.memo_canonical_max_vertices:
            self.stats.canonical_keys += 1
            counts = {pair: count for pair, (count, _) in bundles.items()}
            matrix = MultiplicityMatrix.from_counts(vertices, counts)
            return ("canonical", canonical_code_of_matrix(matrix))
        self.stats.labelled_keys += 1
        return ("labelled", frozenset((pair, count) for pair, (count, _) in bundles.items()))

    def _block(self, bundles: Bundles) -> BivariatePolynomial:
        """Tutte polynomial of a single block (2-connected, or one parallel class)."""
        self.stats.recursion_nodes += 1

        if len(bundles) == 1:
            (count, _), = bundles.values()
            if count == 1:
                self.stats.bridges_contracted += 1
            else:
                self.stats.bundles_reduced += 1
            return BivariatePolynomial.x() + BivariatePolynomial.y_geometric(count) - 1

        key = None
        if self.config.memo_enabled:
            key = self._memo_key(bundles)
            cached = self.cache.get(key)
            if cached is not None:
                self.stats.cache_hits += 1
                return cached
            self.stats.cache_misses += 1

        chosen = pick_bundle(bundles, self.config.edge_pick_policy)
        count, _ = bundles[chosen]
        self.stats.branches += 1
        if count > 1:
            self.stats.bundles_reduced += 1

        deleted = {pair: value for pair, value in bundles.items() if pair != chosen}
        contracted = contract_bundle(bundles, chosen)
        result = self._product(deleted) + BivariatePolynomial.y_geometric(count) * self._product(
            contracted
        )

        if key is not None:
            self.cache.put(key, result)
        return result

    def report(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "stats": self.stats.to_dict(),
            "cache": self.cache.stats(),
        }


def tutte_dc(
    g: Multigraph,
    cfg: Optional[EngineConfig] = None,
    cache: Optional[MemoCache] = None,
) -> BivariatePolynomial:
    """Tutte polynomial by deletion-contraction (fresh engine per call)."""
    return TutteEngine(cfg, cache).compute(g)

