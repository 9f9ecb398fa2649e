"""Rank generating polynomials via recurrences.

``f_rect(k, l)`` counts compositions in a k x l box, ``p_rect(k, l)``
partitions in the same box, and ``f_ideal(kappa)`` the principal ideal of a
composition. All three are built by peeling off the first row:
``F = 1 + q * [l] * F'``.
"""

from __future__ import annotations

from typing import Sequence

from .enumerate import as_composition
from .qpoly import Poly, mul, q_binomial, q_int, shift

__all__ = ["p_rect", "f_rect", "f_ideal"]

ONE = Poly([1])


def _check_box(k: int, l: int) -> None:
    if k < 1 or l < 1:
        raise ValueError(f"need k, l >= 1, got k={k}, l={l}")


def p_rect(k: int, l: int) -> Poly:
    _check_box(k, l)
    return q_binomial(k + l, l)


def _peel(l: int, rest: Poly) -> Poly:
    return ONE + shift(mul(q_int(l), rest), 1)


def f_rect(k: int, l: int) -> Poly:
    _check_box(k, l)
    f = q_int(l + 1)
    for _ in range(k - 1):
        f = _peel(l, f)
    assert f.is_integral()
    return f


def f_ideal(kappa: Sequence[int]) -> Poly:
    """Rank generating polynomial of the composition ideal ``K(kappa)``.

    The empty composition gives the constant 1; otherwise parts are folded
    in from the last one to the first.
    """
    kappa = as_composition(kappa)
    f = ONE
    for part in reversed(kappa):
        f = _peel(part, f)
    return f
