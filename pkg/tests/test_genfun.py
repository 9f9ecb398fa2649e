import random

import pytest

from helpers import compositions_of
from rectcomp.enumerate import ideal_elements_K, rank_counts
from rectcomp.genfun import f_ideal, f_rect, p_rect
from rectcomp.qpoly import Poly, profile


def test_examples():
    assert p_rect(1, 1) == Poly([1, 1])
    assert p_rect(2, 2).coeffs == (1, 1, 2, 1, 1)
    p33 = p_rect(3, 3)
    assert p33.coeffs == p33.coeffs[::-1] and p33(1) == 20
    assert f_rect(1, 3).coeffs == (1, 1, 1, 1)
    assert f_rect(2, 2).coeffs == (1, 1, 2, 2, 1)
    assert f_ideal(()) == Poly([1])
    assert f_ideal((2, 2)) == f_rect(2, 2)


def test_figure_composition():
    f = f_ideal((3, 1, 4, 1))
    assert f.degree == 9
    assert list(f.coeffs) == rank_counts(ideal_elements_K((3, 1, 4, 1)))


@pytest.mark.parametrize("bad", [(0, 1), (1, 0)])
def test_rect_args(bad):
    with pytest.raises(ValueError):
        f_rect(*bad)
    with pytest.raises(ValueError):
        p_rect(*bad)


@pytest.mark.parametrize("k", range(1, 13))
def test_f_rect_shape(k):
    for l in range(1, 13):
        f = f_rect(k, l)
        assert f.degree == k * l and f[0] == 1
        assert all(isinstance(c, int) and c > 0 for c in f)
        assert profile(f).unimodal
        assert f(1) == sum(l**r for r in range(k + 1))


@pytest.mark.parametrize("k,l", [(k, l) for k in range(2, 7) for l in range(2, 7)])
def test_not_log_concave(k, l):
    for f in (f_rect(k, l), p_rect(k, l)):
        assert f.coeffs[:3] == (1, 1, 2)
        assert not profile(f).log_concave


@pytest.mark.parametrize("n", range(0, 9))
def test_ideal_matches_enumeration(n):
    for kappa in compositions_of(n):
        f = f_ideal(kappa)
        assert f.degree == n
        assert list(f.coeffs) == rank_counts(ideal_elements_K(kappa))


def test_random_ideals_unimodal():
    rng = random.Random(20261016)
    for _ in range(500):
        n = rng.randint(1, 25)
        cuts = sorted(rng.sample(range(1, n), rng.randint(0, n - 1))) if n > 1 else []
        bounds = [0] + cuts + [n]
        kappa = tuple(b - a for a, b in zip(bounds, bounds[1:]))
        f = f_ideal(kappa)
        assert f.degree == sum(kappa)
        assert profile(f).unimodal, kappa
