"""Chain decompositions of graded posets.

Provides validation, the symmetric/modal tests, and the inductive
prefix-by-1 / prefix-by-2 construction on ``K(2^k)``.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .poset import GradedPoset, build_K, label_str

__all__ = [
    "ChainDecomposition",
    "CDReport",
    "InvalidDecomposition",
    "validate_cd",
    "is_scd",
    "modal_ranks_of_cd",
    "sagan_chains",
    "sagan_construction",
    "sagan_report",
    "SaganReport",
    "predicted_modal_rank",
]


class InvalidDecomposition(ValueError):
    pass


@dataclass(frozen=True)
class ChainDecomposition:
    """Chains of element indices, each listed bottom to top."""

    chains: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, chains: Sequence[Sequence[int]]) -> "ChainDecomposition":
        return cls(tuple(tuple(c) for c in chains))

    @classmethod
    def from_labels(cls, P: GradedPoset, chains) -> "ChainDecomposition":
        return cls(tuple(tuple(P.index[x] for x in c) for c in chains))

    def __len__(self):
        return len(self.chains)

    def spans(self, P: GradedPoset) -> list[tuple[int, int]]:
        return [(P.ranks[c[0]], P.ranks[c[-1]]) for c in self.chains]

    def to_json(self, P: GradedPoset) -> list[list[str]]:
        return [[label_str(P.labels[i]) for i in c] for c in self.chains]

    @classmethod
    def from_json(cls, P: GradedPoset, data) -> "ChainDecomposition":
        def parse(s: str):
            return tuple(int(t) for t in s.split(",")) if s else ()
        return cls(tuple(tuple(P.index[parse(s)] for s in c) for c in data))


@dataclass
class CDReport:
    ok: bool
    problems: list[str] = field(default_factory=list)
    bad_chains: list[int] = field(default_factory=list)
    bad_elements: list[int] = field(default_factory=list)

    def __bool__(self):
        return self.ok


def validate_cd(P: GradedPoset, cd: ChainDecomposition) -> CDReport:
    """Saturation, disjointness and coverage of a proposed decomposition."""
    problems: list[str] = []
    bad_chains: set[int] = set()
    bad_elements: set[int] = set()
    owner: dict[int, int] = {}
    n = len(P)

    for ci, chain in enumerate(cd.chains):
        if not chain:
            problems.append(f"chain {ci} is empty")
            bad_chains.add(ci)
            continue
        for x in chain:
            if not 0 <= x < n:
                problems.append(f"chain {ci} has out-of-range element {x}")
                bad_chains.add(ci)
                continue
            if x in owner:
                problems.append(
                    f"element {label_str(P.labels[x])!r} in chains {owner[x]} and {ci} (not disjoint)"
                )
                bad_chains.update((owner[x], ci))
                bad_elements.add(x)
            else:
                owner[x] = ci
        for a, b in zip(chain, chain[1:]):
            if 0 <= a < n and 0 <= b < n and not P.covers(a, b):
                problems.append(
                    f"chain {ci} not saturated: {label_str(P.labels[a])!r} "
                    f"is not covered by {label_str(P.labels[b])!r}"
                )
                bad_chains.add(ci)

    missing = [x for x in range(n) if x not in owner]
    if missing:
        problems.append(f"{len(missing)} elements uncovered, e.g. "
                        f"{[label_str(P.labels[x]) for x in missing[:5]]}")
        bad_elements.update(missing)

    return CDReport(not problems, problems, sorted(bad_chains), sorted(bad_elements))


def _require_valid(P, cd):
    report = validate_cd(P, cd)
    if not report.ok:
        raise InvalidDecomposition("; ".join(report.problems))


def is_scd(P: GradedPoset, cd: ChainDecomposition) -> bool:
    _require_valid(P, cd)
    return all(a + b == P.rank for a, b in cd.spans(P))


def modal_ranks_of_cd(P: GradedPoset, cd: ChainDecomposition) -> set[int]:
    """Ranks met by every chain; nonempty iff ``cd`` is modal."""
    _require_valid(P, cd)
    spans = cd.spans(P)
    lo = max(a for a, _ in spans)
    hi = min(b for _, b in spans)
    return set(range(lo, hi + 1))


def predicted_modal_rank(k: int, l: int) -> int:
    """``ceil(k(l+1)/2) - 1``, the conjectured modal rank of ``K(l^k)``."""
    return math.ceil(k * (l + 1) / 2) - 1


def sagan_chains(k: int) -> tuple[list[list[tuple[int, ...]]], list[int]]:
    """Chains of ``K(2^k)`` as composition labels, plus the number of
    emptied second-copy chains dropped at each step ``2..k``.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    chains: list[list[tuple[int, ...]]] = [[(), (1,), (2,)]]
    dropped: list[int] = []
    for _ in range(2, k + 1):
        ones = [[(1,) + x for x in c] for c in chains]
        twos = [[(2,) + x for x in c] for c in chains]
        new: list[list[tuple[int, ...]]] = []
        gone = 0
        for c1, c2 in zip(ones, twos):
            low_top, high_top = c1[-1], c2[-1]
            # the pair differ only in the first part, 1 vs 2
            assert low_top[0] == 1 and high_top == (2,) + low_top[1:]
            c1.append(c2.pop())
            new.append(c1)
            if c2:
                new.append(c2)
            else:
                gone += 1
        starts = [c for c in new if c[0] == (1,)]
        assert len(starts) == 1, "exactly one chain must start at (1)"
        starts[0].insert(0, ())
        chains = new
        dropped.append(gone)
    return chains, dropped


def sagan_construction(k: int) -> ChainDecomposition:
    """Chain decomposition of ``build_K((2,)*k)`` built inductively.

    Each chain of the ``k-1`` decomposition is copied with a leading 1 and a
    leading 2; the top of the 2-copy moves onto the 1-copy (it covers it),
    emptied 2-copies are dropped, and the empty composition joins the chain
    starting at ``(1,)``.
    """
    chains, _ = sagan_chains(k)
    return ChainDecomposition.from_labels(build_K((2,) * k), chains)


@dataclass
class SaganReport:
    k: int
    poset: GradedPoset
    decomposition: ChainDecomposition
    valid: bool
    predicted_rank: int
    modal_ranks: set[int]
    dropped: list[int]
    span_counts: dict[tuple[int, int], int]

    @property
    def is_mcd_at_prediction(self) -> bool:
        return self.predicted_rank in self.modal_ranks

    def missing_chains(self) -> list[tuple[int, int]]:
        """Spans of chains that avoid the predicted rank."""
        m = self.predicted_rank
        return [s for s in self.decomposition.spans(self.poset) if not s[0] <= m <= s[1]]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "elements": len(self.poset),
            "chains": len(self.decomposition),
            "valid": self.valid,
            "predicted_rank": self.predicted_rank,
            "modal_ranks": sorted(self.modal_ranks),
            "mcd_at_predicted_rank": self.is_mcd_at_prediction,
            "dropped_per_step": self.dropped,
            "span_counts": [
                {"low": a, "high": b, "count": c}
                for (a, b), c in sorted(self.span_counts.items())
            ],
        }


def sagan_report(k: int) -> SaganReport:
    P = build_K((2,) * k)
    chains, dropped = sagan_chains(k)
    cd = ChainDecomposition.from_labels(P, chains)
    valid = validate_cd(P, cd).ok
    modal = modal_ranks_of_cd(P, cd) if valid else set()
    return SaganReport(
        k=k,
        poset=P,
        decomposition=cd,
        valid=valid,
        predicted_rank=predicted_modal_rank(k, 2),
        modal_ranks=modal,
        dropped=dropped,
        span_counts=dict(Counter(cd.spans(P))),
    )
