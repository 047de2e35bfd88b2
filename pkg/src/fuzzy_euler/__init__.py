"""Euler summability of sequences and series of fuzzy numbers.

Fuzzy numbers are handled through their alpha-cuts; the Euler means, the
Tauberian gap diagnostics and the binomial CDF bounds that support them
are exposed from the submodules and re-exported here.
"""

from .binomial import (
    BoundCheckRecord,
    binomial_cdf_exact,
    binomial_cdf_rational,
    deviation_bound_terms,
    proof_limit_terms,
    relative_entropy,
    std_normal_cdf,
    verify_bounds,
    zubkov_serov_c,
)
from .euler import (
    EulerParams,
    EulerWeights,
    ceiling_composition,
    detect_limit,
    euler_mean,
    euler_transform,
    euler_transform_real,
    euler_weights,
    partial_sums,
)
from .fuzzy import (
    DEFAULT_LEVELS,
    FuzzyNumber,
    FuzzySequence,
    InvalidFuzzyNumber,
    add,
    crisp,
    merge_grids,
    metric_d,
    refine_to_grid,
    scale,
    trapezoidal,
    triangular,
    weighted_sum,
    zero,
)
from .generators import example_limit, generate_example
from .tauberian import GapSeries, RateVerdict, classify_rate, knopp_gap, sequence_gap, series_gap

__version__ = "0.1.0"
