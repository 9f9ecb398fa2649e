from collections import Counter
from math import comb

import pytest

from rectcomp.enumerate import (
    Rectangle,
    compositions_in_rect,
    ideal_elements_K,
    ideal_elements_Y,
    iter_contained,
    partitions_in_rect,
    rank_counts,
)
from rectcomp.genfun import f_ideal, f_rect, p_rect
from rectcomp.qpoly import profile

BOXES = [(k, l) for k in range(1, 7) for l in range(1, 7)]


def test_small_boxes():
    assert partitions_in_rect(Rectangle(1, 3)) == [1, 1, 1, 1]
    assert partitions_in_rect(Rectangle(2, 2)) == [1, 1, 2, 1, 1]
    p33 = partitions_in_rect(Rectangle(3, 3))
    assert p33 == p33[::-1] and sum(p33) == 20
    assert compositions_in_rect(Rectangle(2, 2)) == [1, 1, 2, 2, 1]
    assert compositions_in_rect(Rectangle(1, 3)) == [1, 1, 1, 1]


def test_compositions_3x2_listed():
    comps = list(iter_contained((2, 2, 2)))
    assert len(comps) == 15
    by_size = Counter(map(sum, comps))
    assert [by_size[n] for n in range(7)] == compositions_in_rect(Rectangle(3, 2)) == [1, 1, 2, 3, 4, 3, 1]
    assert f_rect(3, 2).coeffs == (1, 1, 2, 3, 4, 3, 1)


def test_rectangle_validates():
    with pytest.raises(ValueError):
        Rectangle(0, 2)


def test_lexicographic_order():
    assert list(iter_contained((2, 1))) == [(), (1,), (1, 1), (2,), (2, 1)]
    assert ideal_elements_K((2, 1))[2] == [(1, 1), (2,)]


def test_ideals():
    assert rank_counts(ideal_elements_Y((1,))) == [1, 1]
    assert rank_counts(ideal_elements_K((2,))) == [1, 1, 1]
    assert rank_counts(ideal_elements_K((2, 2))) == [1, 1, 2, 2, 1]
    assert rank_counts(ideal_elements_K((3, 1))) == list(f_ideal((3, 1)).coeffs)
    for k, l in [(2, 3), (3, 3), (4, 2)]:
        assert rank_counts(ideal_elements_Y((l,) * k)) == partitions_in_rect(Rectangle(k, l))


def test_empty_emitted_once():
    for g in [(), (3,), (2, 5, 1)]:
        buckets = ideal_elements_K(g)
        assert buckets[0] == [()]
        assert sum(b.count(()) for b in buckets) == 1


def test_stanton_ideal_not_unimodal():
    seq = rank_counts(ideal_elements_Y((8, 8, 4, 4)))
    assert len(seq) == 25
    assert not profile(seq).unimodal


def test_partition_validation():
    with pytest.raises(ValueError):
        ideal_elements_Y((1, 2))
    with pytest.raises(ValueError):
        ideal_elements_K((1, 0))


@pytest.mark.parametrize("k,l", BOXES)
def test_oracles_match_recurrences(k, l):
    rect = Rectangle(k, l)
    assert compositions_in_rect(rect) == list(f_rect(k, l).coeffs)
    assert partitions_in_rect(rect) == list(p_rect(k, l).coeffs)


@pytest.mark.parametrize("k,l", BOXES)
def test_cardinalities(k, l):
    rect = Rectangle(k, l)
    assert sum(partitions_in_rect(rect)) == comb(k + l, l)
    assert sum(compositions_in_rect(rect)) == sum(l**r for r in range(k + 1))
    p = partitions_in_rect(rect)
    assert p == p[::-1]


@pytest.mark.parametrize("k,l", [(k, l) for k in range(2, 5) for l in range(1, 5)])
def test_first_part_decomposition(k, l):
    comps = list(iter_contained((l,) * k))
    assert comps.count(()) == 1
    rest = Counter(iter_contained((l,) * (k - 1)))
    for r in range(1, l + 1):
        tails = Counter(c[1:] for c in comps if c and c[0] == r)
        assert tails == rest
