"""Exact lozenge-tiling counts for dented trapezoids with a free boundary,
hexagons with symmetric holes, and the gap-corner correlation evaluated by
several independent exact routes plus its asymptotic prediction."""

__version__ = "0.1.0"

from .correlation import (
    CorrelationParams,
    MomentPolynomial,
    asymptotic_prediction,
    correlation_double_sum,
    correlation_via_moments,
    finite_dent_ratio,
    finite_n_correlation,
    finite_n_numerator,
    limit_ratio_general,
    limit_ratio_pair,
    moment_approximant,
    moment_polynomial,
)
from .errors import (
    DomainError,
    GapPlacementError,
    LozgapError,
    ParityError,
    ResourceLimitError,
    SymmetryError,
    UsageError,
    ValidationError,
)
from .exactcount import (
    ExactInt,
    ExactRat,
    SkewArray,
    binom,
    lemma_sum_a,
    lemma_sum_b,
    lgv_pfaffian_count,
    macmahon_box,
    pfaffian,
    product_formula_count,
    schur_pfaffian_lhs,
    schur_pfaffian_rhs,
    ssc_hexagon_count,
)
from .images import (
    ChargePoint,
    ImageConfig,
    QSqrt3,
    build_images_90_mixed,
    build_images_half_plane,
    conjecture_ratio,
    distance_product_prediction,
    distance_squared,
    distances,
)
from .oracle import (
    Tiling,
    count_symmetric_tilings,
    count_tilings,
    enumerate_tilings,
    iter_tilings,
)
from .regions import (
    Cell,
    HexagonSpec,
    RegionLattice,
    RegionSpec,
    build_hexagon,
    build_region,
    quarter_reduction,
)

__all__ = [name for name in dir() if not name.startswith("_")]
