"""Integer partitions."""
from __future__ import annotations

import json
from functools import lru_cache
from typing import Iterable


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Parts are sorted on construction, so ``Partition([1, 2]) == Partition([2, 1])``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if parts and parts[-1] <= 0:
            raise ValueError(f"partition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self:
            out[p] = out.get(p, 0) + 1
        return out

    def union(self, other: Iterable[int]) -> "Partition":
        return Partition(tuple(self) + tuple(other))

    def key(self) -> str:
        """JSON-style key, e.g. ``"[2,1,1]"``."""
        return json.dumps(list(self), separators=(",", ":"))

    @classmethod
    def from_key(cls, key: str) -> "Partition":
        return cls(json.loads(key))

    def monomial_name(self, symbol: str = "c") -> str:
        """Chern-monomial label, e.g. (2,1,1) -> ``c2*c1^2``; empty -> ``1``."""
        if not self:
            return "1"
        mult = self.multiplicities()
        return "*".join(f"{symbol}{p}" + (f"^{m}" if m > 1 else "") for p, m in mult.items())

    def __repr__(self):
        return f"Partition({tuple(self)})"


def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, reverse-lexicographic: (n), (n-1, 1), ..., (1^n)."""
    if n < 0:
        raise ValueError(f"partitions_of needs n >= 0, got {n}")
    return _partitions(n, n)


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return (Partition(),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) via Euler's pentagonal recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total
