import random

import pytest

from rectcomp.chains import modal_ranks_of_cd, predicted_modal_rank, validate_cd
from rectcomp.mcdsearch import (
    DOWN,
    UP,
    brute_force_mcd,
    conjecture_scan,
    level_saturating_matching,
    max_bipartite_matching,
    mcd_decide,
    modal_ranks,
)
from rectcomp.poset import build_K, build_Y, from_covers, rank_sequence
from rectcomp.qpoly import profile


def brute_max_matching(n_left, n_right, adj):
    def best(u, used):
        if u == n_left:
            return 0
        out = best(u + 1, used)
        for v in adj[u]:
            if not used >> v & 1:
                out = max(out, 1 + best(u + 1, used | 1 << v))
        return out
    return best(0, 0)


def test_hopcroft_karp_against_brute_force():
    rng = random.Random(7)
    for _ in range(200):
        nl, nr = rng.randint(1, 6), rng.randint(1, 6)
        adj = [sorted(rng.sample(range(nr), rng.randint(0, nr))) for _ in range(nl)]
        ml, mr = max_bipartite_matching(nl, nr, adj)
        size = sum(1 for v in ml if v != -1)
        assert size == brute_max_matching(nl, nr, adj)
        for u, v in enumerate(ml):
            if v != -1:
                assert v in adj[u] and mr[v] == u


def test_path_level():
    lm = level_saturating_matching(build_K((2,)), 0, UP)
    assert lm.saturated and lm.pairs == [(0, 1)]


def test_one_into_two():
    P = build_K((2, 2))
    lm = level_saturating_matching(P, 1, UP)
    assert lm.saturated and len(lm.pairs) == 1
    (x, y), = lm.pairs
    assert P.labels[x] == (1,) and P.labels[y] in {(2,), (1, 1)}


def test_bad_level():
    with pytest.raises(ValueError):
        level_saturating_matching(build_K((2,)), 2, UP)


def test_stanton_dip_certificates():
    P = build_Y((8, 8, 4, 4))
    seq = rank_sequence(P)
    # 31 > 30 at level 14 blocks saturating rank 14 upward
    assert seq[14] > seq[15]
    lm = level_saturating_matching(P, 14, UP)
    assert not lm.saturated
    assert lm.violator.check(P)
    assert modal_ranks(P) == set()


def test_decide_examples():
    for k in range(1, 5):
        P = build_K((1,) * k)
        assert modal_ranks(P) == set(range(k + 1))
    P = build_K((2, 2))
    ok = mcd_decide(P, 2)
    assert ok.exists and validate_cd(P, ok.decomposition).ok
    bad = mcd_decide(P, 0)
    assert not bad.exists and bad.failing_level == 1
    assert bad.violator.direction == DOWN and bad.violator.check(P)
    assert modal_ranks(P) == {2, 3}


def test_decide_rank_range():
    with pytest.raises(ValueError):
        mcd_decide(build_K((2,)), 3)


def test_disjoint_paths_poset():
    # ranks 1,2,1 with two separate paths a<b and c<d; not graded, but the
    # decider still answers: only rank 1 meets both paths
    P = from_covers(["a", "b", "c", "d"], [0, 1, 1, 2], [(0, 1), (2, 3)])
    assert modal_ranks(P) == {1}
    for m in range(3):
        assert brute_force_mcd(P, m).exists == (m == 1)
    # with a third path there is no common rank at all
    Q = from_covers(["a", "b", "c", "d", "e"], [0, 1, 1, 2, 2], [(0, 1), (2, 3)])
    assert modal_ranks(Q) == set()
    assert not any(brute_force_mcd(Q, m).exists for m in range(3))


def test_brute_force_limit():
    with pytest.raises(ValueError):
        brute_force_mcd(build_K((2, 2, 2, 2)), 5)


@pytest.mark.parametrize("P", [build_K((2,)), build_K((2, 2)), build_Y((2, 2)), build_K((3, 1, 2)),
                               build_Y((3, 2, 1))], ids=["K2", "K22", "Y22", "K312", "Y321"])
def test_agrees_with_brute_force(P):
    feasible = modal_ranks(P)
    for m in range(P.rank + 1):
        fast = mcd_decide(P, m)
        slow = brute_force_mcd(P, m)
        assert fast.exists == slow.exists == (m in feasible)
        if slow.exists:
            assert validate_cd(P, slow.decomposition).ok
            assert m in modal_ranks_of_cd(P, slow.decomposition)


def test_success_implies_unimodal():
    for kappa in [(2, 3), (3, 1, 2), (1, 4, 2), (2, 2, 2, 2)]:
        P = build_K(kappa)
        if modal_ranks(P):
            assert profile(rank_sequence(P)).unimodal


def test_deterministic():
    P = build_K((3, 3, 3))
    a = mcd_decide(P, predicted_modal_rank(3, 3))
    b = mcd_decide(build_K((3, 3, 3)), predicted_modal_rank(3, 3))
    assert a.decomposition == b.decomposition


def test_scan_rows():
    rows = conjecture_scan(3, 3)
    assert [(r.k, r.l) for r in rows] == [(k, l) for k in range(1, 4) for l in range(1, 4)]
    row22 = next(r for r in rows if (r.k, r.l) == (2, 2))
    assert row22.predicted == 2 and row22.feasible == (2, 3) and row22.agree
    for r in rows:
        if r.k == 1:
            assert r.feasible == tuple(range(r.l + 1))


def test_k9_has_an_mcd_even_though_construction_fails():
    P = build_K((2,) * 9)
    res = mcd_decide(P, 13)
    assert res.exists
    assert 13 in modal_ranks_of_cd(P, res.decomposition)
