"""Memo cache for deletion-contraction subresults."""

import threading
from collections import OrderedDict
from typing import Any, Callable, Hashable, Optional

from tforge.poly.polynomial import BivariatePolynomial


class MemoCache:
    """Key -> Tutte polynomial, with hit/miss counters and optional LRU bound.

    Every entry's polynomial is the Tutte polynomial of any graph producing
    that key. Inserts are idempotent, so two tasks computing the same key
    concurrently is harmless.
    """

    def __init__(self, max_size: Optional[int] = None):
        self.max_size = max_size
        self._entries: OrderedDict[Hashable, BivariatePolynomial] = OrderedDict()
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0
        self.evictions = 0

    def get(self, key: Hashable) -> Optional[BivariatePolynomial]:
        with self._lock:
            value = self._entries.get(key)
            if value is None:
                self.misses += 1
                return None
            self.hits += 1
            if self.max_size is not None:
                self._entries.move_to_end(key)
            return value

    def put(self, key: Hashable, value: BivariatePolynomial) -> None:
        with self._lock:
            if key in self._entries:
                return
            self._entries[key] = value
            if self.max_size is not None and len(self._entries) > self.max_size:
                self._entries.popitem(last=False)
                self.evictions += 1

    def get_or_compute(
        self, key: Hashable, compute: Callable[[], BivariatePolynomial]
    ) -> BivariatePolynomial:
        """Cached value for key, computing and inserting it on a miss."""
        cached = self.get(key)
        if cached is not None:
            return cached
        value = compute()
        self.put(key, value)
        return value

    def __contains__(self, key: Hashable) -> bool:
        return key in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()
            self.hits = self.misses = self.evictions = 0

    def stats(self) -> dict[str, Any]:
        lookups = self.hits + self.misses
        return {
            "size": len(self._entries),
            "max_size": self.max_size,
            "hits": self.hits,
            "misses": self.misses,
            "evictions": self.evictions,
            "hit_rate": self.hits / lookups if lookups else 0.0,
        }
