"""Rank sequences of partitions and compositions in a rectangle, their
generating polynomials, and modal chain decompositions."""

from .qpoly import Poly, SequenceProfile, add, mul, profile, q_binomial, q_int, shift
from .enumerate import (
    Rectangle,
    compositions_in_rect,
    ideal_elements_K,
    ideal_elements_Y,
    partitions_in_rect,
)
from .genfun import f_ideal, f_rect, p_rect
from .poset import GradedPoset, build_K, build_Y, rank_sequence, validate_graded
from .chains import (
    ChainDecomposition,
    is_scd,
    modal_ranks_of_cd,
    sagan_construction,
    validate_cd,
)
from .mcdsearch import (
    brute_force_mcd,
    conjecture_scan,
    level_saturating_matching,
    mcd_decide,
    modal_ranks,
)

__version__ = "0.1.0"
