"""Deciding modal chain decomposition (MCD) existence by level matchings.

A decomposition into saturated chains is the same thing as one partial
matching between each pair of consecutive ranks: the chains are the paths
of the union. A chain misses rank ``m`` exactly when it stops at some rank
``i < m`` (an element of ``P_i`` left unmatched upward) or starts at some
rank ``i + 1 > m`` (an element of ``P_{i+1}`` left unmatched downward).
So an MCD through ``m`` exists iff every level below ``m`` has a matching
saturating its lower rank and every level from ``m`` on has one saturating
its upper rank. The levels are independent bipartite problems.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .chains import ChainDecomposition, modal_ranks_of_cd, predicted_modal_rank, validate_cd
from .poset import GradedPoset, build_K, label_str, rank_sequence
from .qpoly import profile

__all__ = [
    "UP",
    "DOWN",
    "HallViolator",
    "LevelMatching",
    "MCDResult",
    "ScanRow",
    "max_bipartite_matching",
    "level_saturating_matching",
    "mcd_decide",
    "modal_ranks",
    "brute_force_mcd",
    "conjecture_scan",
]

UP = "up"      # saturate P_i
DOWN = "down"  # saturate P_{i+1}

BRUTE_FORCE_LIMIT = 20


def max_bipartite_matching(n_left: int, n_right: int, adj: Sequence[Sequence[int]]):
    """Hopcroft-Karp maximum matching.

    ``adj[u]`` lists right vertices adjacent to left vertex ``u``, scanned in
    the given order, so the result is deterministic. Returns
    ``(match_left, match_right)`` with -1 for unmatched vertices.
    """
    INF = n_left + n_right + 1
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    dist = [0] * n_left

    def bfs() -> bool:
        q = deque()
        for u in range(n_left):
            if match_l[u] == -1:
                dist[u] = 0
                q.append(u)
            else:
                dist[u] = INF
        found = False
        while q:
            u = q.popleft()
            for v in adj[u]:
                w = match_r[v]
                if w == -1:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    q.append(w)
        return found

    def dfs(root: int) -> bool:
        # iterative layered DFS; stack holds (u, next adjacency position)
        stack = [[root, 0]]
        path: list[tuple[int, int]] = []
        while stack:
            frame = stack[-1]
            u, pos = frame
            if pos == len(adj[u]):
                dist[u] = INF
                stack.pop()
                if path:
                    path.pop()
                continue
            v = adj[u][pos]
            frame[1] += 1
            w = match_r[v]
            if w == -1:
                path.append((u, v))
                for a, b in path:
                    match_l[a] = b
                    match_r[b] = a
                return True
            if dist[w] == dist[u] + 1:
                path.append((u, v))
                stack.append([w, 0])
        return False

    while bfs():
        for u in range(n_left):
            if match_l[u] == -1:
                dfs(u)
    return match_l, match_r


@dataclass
class HallViolator:
    """A set on the side that had to be saturated, with fewer neighbours."""

    level: int
    direction: str
    subset: list[int]
    neighbours: list[int]

    def check(self, P: GradedPoset) -> bool:
        nbrs = set()
        for x in self.subset:
            nbrs.update(P.up[x] if self.direction == UP else P.down[x])
        return nbrs == set(self.neighbours) and len(self.neighbours) < len(self.subset)

    def to_json(self, P: GradedPoset) -> dict:
        return {
            "level": self.level,
            "direction": self.direction,
            "subset": [label_str(P.labels[x]) for x in self.subset],
            "neighbours": [label_str(P.labels[x]) for x in self.neighbours],
        }


@dataclass
class LevelMatching:
    level: int
    direction: str
    pairs: list[tuple[int, int]]  # (lower element, upper element)
    saturated: bool
    violator: Optional[HallViolator] = None


def level_saturating_matching(P: GradedPoset, i: int, direction: str) -> LevelMatching:
    """Maximum matching on the covers between ranks ``i`` and ``i + 1``.

    ``direction`` names the side that must be fully matched: ``UP`` for
    ``P_i`` and ``DOWN`` for ``P_{i+1}``. When that fails, the alternating
    reachability set from the unmatched required vertices is returned as a
    Hall violator.
    """
    if not 0 <= i < P.rank:
        raise ValueError(f"level {i} outside 0..{P.rank - 1}")
    if direction not in (UP, DOWN):
        raise ValueError(f"direction must be {UP!r} or {DOWN!r}")
    lower, upper = P.level(i), P.level(i + 1)
    if direction == UP:
        left, right, nbr = lower, upper, P.up
    else:
        left, right, nbr = upper, lower, P.down
    rpos = {x: j for j, x in enumerate(right)}
    adj = [[rpos[y] for y in nbr[x] if y in rpos] for x in left]
    match_l, match_r = max_bipartite_matching(len(left), len(right), adj)

    pairs = []
    for a, b in enumerate(match_l):
        if b != -1:
            x, y = left[a], right[b]
            pairs.append((x, y) if direction == UP else (y, x))
    pairs.sort()
    saturated = all(b != -1 for b in match_l)
    violator = None
    if not saturated:
        seen_l = {u for u in range(len(left)) if match_l[u] == -1}
        seen_r: set[int] = set()
        q = deque(sorted(seen_l))
        while q:
            u = q.popleft()
            for v in adj[u]:
                if v not in seen_r:
                    seen_r.add(v)
                    w = match_r[v]
                    if w != -1 and w not in seen_l:
                        seen_l.add(w)
                        q.append(w)
        violator = HallViolator(
            level=i,
            direction=direction,
            subset=sorted(left[u] for u in seen_l),
            neighbours=sorted(right[v] for v in seen_r),
        )
    return LevelMatching(i, direction, pairs, saturated, violator)


@dataclass
class MCDResult:
    exists: bool
    rank: int
    decomposition: Optional[ChainDecomposition] = None
    failing_level: Optional[int] = None
    violator: Optional[HallViolator] = None
    matchings: list[LevelMatching] = field(default_factory=list, repr=False)

    def to_json(self, P: GradedPoset) -> dict:
        out = {"rank": self.rank, "exists": self.exists}
        if self.decomposition is not None:
            out["chains"] = self.decomposition.to_json(P)
        if not self.exists:
            out["failing_level"] = self.failing_level
            out["certificate"] = self.violator.to_json(P) if self.violator else None
        return out


def _chains_from_matchings(P: GradedPoset, matchings: list[LevelMatching]) -> ChainDecomposition:
    nxt: dict[int, int] = {}
    has_prev: set[int] = set()
    for lm in matchings:
        for x, y in lm.pairs:
            nxt[x] = y
            has_prev.add(y)
    chains = []
    for x in range(len(P)):
        if x in has_prev:
            continue
        chain = [x]
        while chain[-1] in nxt:
            chain.append(nxt[chain[-1]])
        chains.append(tuple(chain))
    return ChainDecomposition(tuple(chains))


def _check_rank(P: GradedPoset, m: int) -> None:
    if not 0 <= m <= P.rank:
        raise ValueError(f"rank {m} outside 0..{P.rank}")


def mcd_decide(P: GradedPoset, m: int) -> MCDResult:
    """Decide whether ``P`` has a chain decomposition with every chain
    meeting rank ``m``; return the decomposition or the first failing level
    together with its Hall violator."""
    _check_rank(P, m)
    matchings = []
    for i in range(P.rank):
        lm = level_saturating_matching(P, i, UP if i < m else DOWN)
        if not lm.saturated:
            return MCDResult(False, m, failing_level=i, violator=lm.violator)
        matchings.append(lm)
    cd = _chains_from_matchings(P, matchings)
    assert validate_cd(P, cd).ok
    assert m in modal_ranks_of_cd(P, cd)
    return MCDResult(True, m, decomposition=cd, matchings=matchings)


def modal_ranks(P: GradedPoset) -> set[int]:
    """Every rank through which some MCD passes."""
    r = P.rank
    up_ok = [level_saturating_matching(P, i, UP).saturated for i in range(r)]
    down_ok = [level_saturating_matching(P, i, DOWN).saturated for i in range(r)]
    return {
        m for m in range(r + 1)
        if all(up_ok[:m]) and all(down_ok[m:])
    }


def brute_force_mcd(P: GradedPoset, m: int) -> MCDResult:
    """Exhaustive search over chain decompositions; for small posets only.

    Elements are placed in index order (rank-major). Each one either extends
    a chain whose current top it covers, or opens a new chain.
    """
    if len(P) > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to {BRUTE_FORCE_LIMIT} elements, got {len(P)}")
    _check_rank(P, m)
    order = sorted(range(len(P)), key=lambda x: (P.ranks[x], x))
    chains: list[list[int]] = []
    owner_top: dict[int, int] = {}  # top element -> chain index

    def closed_low(chain, rank_now):
        # chain can no longer grow and never reached m
        return P.ranks[chain[-1]] < m and P.ranks[chain[-1]] < rank_now - 1

    def search(pos: int) -> bool:
        if pos == len(order):
            return all(P.ranks[c[0]] <= m <= P.ranks[c[-1]] for c in chains)
        x = order[pos]
        rx = P.ranks[x]
        if any(closed_low(c, rx) for c in chains):
            return False
        for y in P.down[x]:
            ci = owner_top.get(y)
            if ci is None:
                continue
            chains[ci].append(x)
            del owner_top[y]
            owner_top[x] = ci
            if search(pos + 1):
                return True
            del owner_top[x]
            owner_top[y] = ci
            chains[ci].pop()
        if rx <= m:
            chains.append([x])
            owner_top[x] = len(chains) - 1
            if search(pos + 1):
                return True
            del owner_top[x]
            chains.pop()
        return False

    if search(0):
        return MCDResult(True, m, decomposition=ChainDecomposition.of(chains))
    return MCDResult(False, m)


@dataclass(frozen=True)
class ScanRow:
    k: int
    l: int
    predicted: int
    feasible: tuple[int, ...]
    agree: bool
    unimodal: bool

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "l": self.l,
            "predicted_rank": self.predicted,
            "feasible_ranks": list(self.feasible),
            "agree": self.agree,
            "unimodal": self.unimodal,
        }


def conjecture_scan(kmax: int, lmax: int) -> list[ScanRow]:
    """Feasible modal ranks of ``K(l^k)`` against ``ceil(k(l+1)/2) - 1``.

    Rows come out ordered by ``(k, l)``; nothing is asserted, only reported.
    """
    if kmax < 1 or lmax < 1:
        raise ValueError("kmax and lmax must be positive")
    rows = []
    for k in range(1, kmax + 1):
        for l in range(1, lmax + 1):
            P = build_K((l,) * k)
            feasible = tuple(sorted(modal_ranks(P)))
            pred = predicted_modal_rank(k, l)
            rows.append(ScanRow(k, l, pred, feasible, pred in feasible,
                                profile(rank_sequence(P)).unimodal))
    return rows
