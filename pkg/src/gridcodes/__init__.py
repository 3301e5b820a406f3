"""Exact ball sizes, packing/covering bounds, and cyclic subgroup codes for
finite integer grids under the Manhattan, Lee, and Hamming metrics."""

from .errors import BudgetError, DomainError, GridCodesError
from .grid import (
    DEFAULT_BUDGET,
    BallSpec,
    Grid,
    Point,
    code_max_distance,
    code_min_distance,
    enumerate_ball,
    hamming_distance,
    lee_distance,
    manhattan_distance,
    pairwise_distance_extremes,
    parse_point,
)
from .balls import (
    BallSizeReport,
    ExclusionIndex,
    ball_size_at,
    cross_polytope_size,
    decompose_ball_orthants,
    decompose_ball_slices,
    eta,
    eta_value,
    exclusion_levels,
    gamma,
    gamma_value,
    innermost_set,
    outermost_set,
    simplex_count,
)
from .bounds import BoundReport, bound_report, gv_bound, hamming_bound, zn_ball_size
from .codes import (
    CodeAnalysis,
    GridCode,
    analyze,
    covering_property,
    covering_radius,
    exact_max_code,
    greedy_code,
)
from .cyclic import (
    CyclicCodeSpec,
    CyclicDerived,
    DistanceChain,
    bound_chain,
    codeword,
    codeword_distance,
    codewords,
    derive,
    min_hamming_distance,
)

__all__ = [
    "BallSizeReport",
    "BallSpec",
    "BoundReport",
    "BudgetError",
    "CodeAnalysis",
    "CyclicCodeSpec",
    "CyclicDerived",
    "DEFAULT_BUDGET",
    "DistanceChain",
    "DomainError",
    "ExclusionIndex",
    "Grid",
    "GridCode",
    "GridCodesError",
    "Point",
    "analyze",
    "ball_size_at",
    "bound_chain",
    "bound_report",
    "code_max_distance",
    "code_min_distance",
    "codeword",
    "codeword_distance",
    "codewords",
    "covering_property",
    "covering_radius",
    "cross_polytope_size",
    "decompose_ball_orthants",
    "decompose_ball_slices",
    "derive",
    "enumerate_ball",
    "eta",
    "eta_value",
    "exact_max_code",
    "exclusion_levels",
    "gamma",
    "gamma_value",
    "greedy_code",
    "gv_bound",
    "hamming_bound",
    "hamming_distance",
    "innermost_set",
    "lee_distance",
    "manhattan_distance",
    "min_hamming_distance",
    "outermost_set",
    "pairwise_distance_extremes",
    "parse_point",
    "simplex_count",
    "zn_ball_size",
]
