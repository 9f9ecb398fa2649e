"""Graded posets of partitions and compositions with explicit cover edges.

Elements are numbered rank-major, lexicographically within a rank, so two
builds of the same ideal are identical index for index.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Hashable, Iterable, Sequence

from .enumerate import (
    as_composition,
    as_partition,
    ideal_elements_K,
    ideal_elements_Y,
)

__all__ = [
    "GradedPoset",
    "GradedReport",
    "build_Y",
    "build_K",
    "from_covers",
    "rank_sequence",
    "validate_graded",
    "definitional_covers",
    "composition_leq",
    "partition_leq",
    "label_str",
]


def label_str(x) -> str:
    if isinstance(x, tuple):
        return ",".join(map(str, x))
    return str(x)


@dataclass(frozen=True, eq=False)
class GradedPoset:
    """Finite poset given by labelled elements, ranks and cover edges.

    ``up[i]`` lists the elements covering ``i``; ``down[i]`` those covered by
    it. Both are sorted by index.
    """

    labels: tuple
    ranks: tuple[int, ...]
    up: tuple[tuple[int, ...], ...]
    down: tuple[tuple[int, ...], ...]
    bottom: int
    top: int
    kind: str = "raw"
    generator: tuple = ()
    index: dict = field(default_factory=dict, repr=False)

    def __len__(self):
        return len(self.labels)

    @property
    def rank(self) -> int:
        """Rank of the top element."""
        return self.ranks[self.top]

    def level(self, n: int) -> list[int]:
        return [i for i, r in enumerate(self.ranks) if r == n]

    def levels(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(max(self.ranks, default=-1) + 1)]
        for i, r in enumerate(self.ranks):
            out[r].append(i)
        return out

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, js in enumerate(self.up) for j in js]

    def covers(self, x: int, y: int) -> bool:
        return y in self.up[x]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "generator": list(self.generator),
            "elements": [
                {"id": i, "label": label_str(lab), "rank": r}
                for i, (lab, r) in enumerate(zip(self.labels, self.ranks))
            ],
            "covers": [list(e) for e in self.edges()],
            "bottom": self.bottom,
            "top": self.top,
        }

    def to_text(self) -> str:
        lines = [f"# {self.kind} {label_str(self.generator)}".rstrip()]
        lines.append(f"elements {len(self)} rank {self.rank}")
        for i, (lab, r) in enumerate(zip(self.labels, self.ranks)):
            lines.append(f"e {i} {r} {label_str(lab) or '-'}")
        for i, j in self.edges():
            lines.append(f"c {i} {j}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_json(cls, data: dict) -> "GradedPoset":
        elems = data["elements"]
        labels = [
            tuple(int(t) for t in e["label"].split(",")) if e["label"] else ()
            for e in elems
        ]
        ranks = [e["rank"] for e in elems]
        p = from_covers(labels, ranks, [tuple(c) for c in data["covers"]])
        return cls(
            p.labels, p.ranks, p.up, p.down, p.bottom, p.top,
            data.get("kind", "raw"), tuple(data.get("generator", ())), p.index,
        )


def from_covers(labels: Sequence[Hashable], ranks: Sequence[int],
                covers: Iterable[tuple[int, int]]) -> GradedPoset:
    """Raw constructor: no gradedness checks (see :func:`validate_graded`).

    ``bottom``/``top`` are the first element of least rank and the last
    element of greatest rank.
    """
    n = len(labels)
    if len(ranks) != n:
        raise ValueError("labels and ranks differ in length")
    up: list[set[int]] = [set() for _ in range(n)]
    down: list[set[int]] = [set() for _ in range(n)]
    for a, b in covers:
        if not (0 <= a < n and 0 <= b < n):
            raise ValueError(f"cover edge ({a}, {b}) out of range")
        up[a].add(b)
        down[b].add(a)
    lo = min(ranks) if ranks else 0
    hi = max(ranks) if ranks else 0
    bottom = next((i for i in range(n) if ranks[i] == lo), 0)
    top = next((i for i in range(n - 1, -1, -1) if ranks[i] == hi), 0)
    return GradedPoset(
        labels=tuple(labels),
        ranks=tuple(ranks),
        up=tuple(tuple(sorted(s)) for s in up),
        down=tuple(tuple(sorted(s)) for s in down),
        bottom=bottom,
        top=top,
        index={lab: i for i, lab in enumerate(labels)},
    )


def _assemble(buckets, cover_fn, kind, generator) -> GradedPoset:
    labels = [x for b in buckets for x in b]
    ranks = [r for r, b in enumerate(buckets) for _ in b]
    index = {x: i for i, x in enumerate(labels)}
    covers = []
    for i, x in enumerate(labels):
        for y in cover_fn(x):
            covers.append((i, index[y]))
    p = from_covers(labels, ranks, covers)
    return GradedPoset(p.labels, p.ranks, p.up, p.down, 0, len(labels) - 1,
                       kind, generator, index)


def _young_covers(lam: tuple[int, ...]) -> Callable:
    def covers(mu):
        out = []
        for i, v in enumerate(mu):
            if v + 1 <= lam[i] and (i == 0 or mu[i - 1] > v):
                out.append(mu[:i] + (v + 1,) + mu[i + 1:])
        if len(mu) < len(lam):
            out.append(mu + (1,))
        return out
    return covers


def _comp_covers(kappa: tuple[int, ...]) -> Callable:
    def covers(g):
        out = []
        for i, v in enumerate(g):
            if v + 1 <= kappa[i]:
                out.append(g[:i] + (v + 1,) + g[i + 1:])
        if len(g) < len(kappa):
            out.append(g + (1,))
        return out
    return covers


@lru_cache(maxsize=64)
def _build_Y(lam: tuple[int, ...]) -> GradedPoset:
    return _assemble(ideal_elements_Y(lam), _young_covers(lam), "young", lam)


@lru_cache(maxsize=64)
def _build_K(kappa: tuple[int, ...]) -> GradedPoset:
    return _assemble(ideal_elements_K(kappa), _comp_covers(kappa), "comp", kappa)


def build_Y(lam: Sequence[int]) -> GradedPoset:
    """The ideal of Young's lattice below the partition ``lam``."""
    return _build_Y(as_partition(lam))


def build_K(kappa: Sequence[int]) -> GradedPoset:
    """The ideal of the composition poset below ``kappa``.

    ``g <= h`` iff ``len(g) <= len(h)`` and ``g[i] <= h[i]`` for
    ``i < len(g)``; a cover increments one part or appends a trailing 1.
    """
    return _build_K(as_composition(kappa))


def rank_sequence(P: GradedPoset) -> list[int]:
    return [len(lv) for lv in P.levels()]


def composition_leq(g, h) -> bool:
    return len(g) <= len(h) and all(a <= b for a, b in zip(g, h))


def partition_leq(mu, nu) -> bool:
    return composition_leq(mu, nu)


def definitional_covers(labels: Sequence, leq: Callable) -> set[tuple[int, int]]:
    """Cover pairs computed straight from the order relation.

    ``i < j`` is a cover iff nothing is both above ``i`` and below ``j``;
    rows of the strict order are kept as bitmasks.
    """
    n = len(labels)
    above = [0] * n
    below = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and leq(labels[i], labels[j]):
                above[i] |= 1 << j
                below[j] |= 1 << i
    out = set()
    for i in range(n):
        a = above[i]
        while a:
            bit = a & -a
            j = bit.bit_length() - 1
            a ^= bit
            if not above[i] & below[j]:
                out.add((i, j))
    return out


@dataclass
class GradedReport:
    ok: bool
    problems: list[str]
    bad_edges: list[tuple[int, int]] = field(default_factory=list)
    bad_elements: list[int] = field(default_factory=list)

    def __bool__(self):
        return self.ok


def validate_graded(P: GradedPoset) -> GradedReport:
    """Check that ``P`` is graded by its stored ranks.

    Looks for cover edges that do not raise rank by exactly one, extra
    minimal or maximal elements, elements unreachable from the bottom, and
    empty ranks. Never raises; everything found goes in the report.
    """
    problems: list[str] = []
    bad_edges: list[tuple[int, int]] = []
    bad_elements: list[int] = []
    n = len(P)
    if n == 0:
        return GradedReport(False, ["empty poset"])

    for i, j in P.edges():
        if P.ranks[j] != P.ranks[i] + 1:
            bad_edges.append((i, j))
            problems.append(
                f"cover {label_str(P.labels[i])!r} -> {label_str(P.labels[j])!r} "
                f"jumps rank {P.ranks[i]} -> {P.ranks[j]}"
            )

    minimal = [i for i in range(n) if not P.down[i]]
    maximal = [i for i in range(n) if not P.up[i]]
    if minimal != [P.bottom]:
        extra = [i for i in minimal if i != P.bottom]
        bad_elements.extend(extra)
        problems.append(f"minimal elements {minimal}, expected only bottom {P.bottom}")
    if maximal != [P.top]:
        extra = [i for i in maximal if i != P.top]
        bad_elements.extend(extra)
        problems.append(f"maximal elements {maximal}, expected only top {P.top}")
    if P.ranks[P.bottom] != 0:
        problems.append(f"bottom has rank {P.ranks[P.bottom]}, expected 0")

    seen = {P.bottom}
    stack = [P.bottom]
    while stack:
        x = stack.pop()
        for y in P.up[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    unreached = [i for i in range(n) if i not in seen]
    if unreached:
        bad_elements.extend(unreached)
        problems.append(f"{len(unreached)} elements unreachable from bottom: {unreached[:10]}")

    if min(P.ranks) >= 0:
        seq = rank_sequence(P)
        empty = [r for r, c in enumerate(seq) if c == 0]
        if empty:
            problems.append(f"empty ranks {empty}")
        if len(seq) != P.rank + 1:
            problems.append(f"rank sequence has {len(seq)} entries, top rank is {P.rank}")
    else:
        problems.append("negative ranks present")

    return GradedReport(not problems, problems, bad_edges, sorted(set(bad_elements)))


def dumps(P: GradedPoset) -> str:
    return json.dumps(P.to_json(), indent=1)
