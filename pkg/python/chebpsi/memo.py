"""
Thread-safe memo tables for the polynomial generators.

The values are immutable :class:`~chebpsi.poly.IntPoly` objects, so a
cached value can be handed to any thread.  Computation happens outside
the lock: recursive generators (psi_wz asks for psi_wz of every divisor)
re-enter the same memo, and two threads racing on one key just compute the
same value twice.
"""

from __future__ import annotations

import logging
import threading
from collections import OrderedDict
from typing import Callable, Generic, Hashable, Optional, TypeVar

logger = logging.getLogger(__name__)

K = TypeVar("K", bound=Hashable)
V = TypeVar("V")


class SynchronizedMemo(Generic[K, V]):
    """Dict-backed memo guarded by a lock, optionally bounded (FIFO eviction)."""

    def __init__(self, name: str, maxsize: Optional[int] = None) -> None:
        self.name = name
        self._maxsize = maxsize
        self._data: OrderedDict[K, V] = OrderedDict()
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get_or_compute(self, key: K, compute: Callable[[], V]) -> V:
        with self._lock:
            if key in self._data:
                self.hits += 1
                return self._data[key]
            self.misses += 1
        value = compute()
        with self._lock:
            existing = self._data.get(key)
            if existing is not None:
                return existing
            self._data[key] = value
            if self._maxsize is not None and len(self._data) > self._maxsize:
                self._data.popitem(last=False)
        return value

    def clear(self) -> None:
        with self._lock:
            self._data.clear()
            self.hits = 0
            self.misses = 0
        logger.debug("memo %s cleared", self.name)

    def __contains__(self, key: object) -> bool:
        with self._lock:
            return key in self._data

    def __len__(self) -> int:
        with self._lock:
            return len(self._data)
