"""Brute-force generation of partitions and compositions under containment.

These generators are the independent check on every generating-function
computation in :mod:`rectcomp.genfun`, so they deliberately never touch
polynomials. Generation is depth-first in lexicographic order of the part
sequence (``()`` < ``(1,)`` < ``(1, 1)`` < ... < ``(2,)``), and within each
size bucket that order is preserved.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

Partition = tuple[int, ...]
Composition = tuple[int, ...]

EMPTY: Composition = ()


@dataclass(frozen=True)
class Rectangle:
    k: int  # max number of parts
    l: int  # max part size

    def __post_init__(self):
        if self.k < 1 or self.l < 1:
            raise ValueError(f"rectangle needs k, l >= 1, got {self.k}x{self.l}")

    @property
    def area(self) -> int:
        return self.k * self.l


def as_composition(parts: Sequence[int]) -> Composition:
    parts = tuple(parts)
    for p in parts:
        if not isinstance(p, int) or isinstance(p, bool) or p < 1:
            raise ValueError(f"composition parts must be positive integers, got {p!r}")
    return parts


def as_partition(parts: Sequence[int]) -> Partition:
    parts = as_composition(parts)
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
    return parts


def iter_contained(bounds: Sequence[int], decreasing: bool = False) -> Iterator[tuple[int, ...]]:
    """Yield every sequence ``g`` with ``len(g) <= len(bounds)`` and
    ``1 <= g[i] <= bounds[i]``, lexicographically.

    With ``decreasing=True`` only weakly decreasing sequences are produced.
    """
    n = len(bounds)
    prefix: list[int] = []

    def rec(cap: int):
        yield tuple(prefix)
        i = len(prefix)
        if i == n:
            return
        top = bounds[i] if not decreasing else min(bounds[i], cap)
        for v in range(1, top + 1):
            prefix.append(v)
            yield from rec(v)
            prefix.pop()

    yield from rec(max(bounds, default=0))


def _bucket(seqs: Iterator[tuple[int, ...]], top: int) -> list[list[tuple[int, ...]]]:
    buckets: list[list[tuple[int, ...]]] = [[] for _ in range(top + 1)]
    for s in seqs:
        buckets[sum(s)].append(s)
    return buckets


def ideal_elements_Y(lam: Sequence[int]) -> list[list[Partition]]:
    """Partitions ``mu`` with ``mu_i <= lam_i`` for all ``i``, bucketed by size."""
    lam = as_partition(lam)
    return _bucket(iter_contained(lam, decreasing=True), sum(lam))


def ideal_elements_K(kappa: Sequence[int]) -> list[list[Composition]]:
    """Compositions contained in ``kappa`` (top-aligned rows), bucketed by size."""
    kappa = as_composition(kappa)
    return _bucket(iter_contained(kappa), sum(kappa))


def partitions_in_rect(rect: Rectangle) -> list[int]:
    """``[p(0), ..., p(kl)]``: partitions of n with <= k parts, each <= l."""
    return [len(b) for b in ideal_elements_Y((rect.l,) * rect.k)]


def compositions_in_rect(rect: Rectangle) -> list[int]:
    """``[c(0), ..., c(kl)]``: compositions of n with <= k parts, each <= l."""
    counts = [0] * (rect.area + 1)
    for c in iter_contained((rect.l,) * rect.k):
        counts[sum(c)] += 1
    return counts


def rank_counts(buckets: list[list]) -> list[int]:
    return [len(b) for b in buckets]
