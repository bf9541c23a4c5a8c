"""Exact max-plus supereigenvector bases.

Computes the unique scaled basis (the scaled extremal vectors) of the
solution space of A (x) >= x over the semiring (R union {-inf}, max, +),
with exact rational arithmetic throughout.  Three independent routes are
provided and cross-checkable: a pruned direct search over cycles and
feeder paths, a closed-form generating set reduced by an extremality
filter, and tropical double description.
"""

from .digraph import (
    DEFAULT_MAX_CYCLES,
    Cycle,
    CycleLimitError,
    Digraph,
    FeederPath,
    feeder_paths,
    max_cycle_mean,
    nonneg_elementary_cycles,
    reverse_reachable,
    rotations,
)
from .extremals import (
    BasisResult,
    CycleRun,
    RotationRun,
    SearchStats,
    always_extremal,
    combine_row,
    cycle_terminals,
    extremal_basis,
    generator_enumeration,
    in_supereig,
    is_extremal,
    path_extremals,
    row_satisfied,
)
from .matrixio import (
    MatrixDocument,
    MatrixParseError,
    parse_matrix,
    parse_vector,
    render_matrix,
)
from .reference import (
    GeneratorSet,
    SpanOracle,
    SystemRow,
    TwoSidedSystem,
    bases_equal,
    cycle_path_generators,
    double_description,
    extremal_filter,
)
from .semiring import (
    NEG_INF,
    DimensionError,
    ExtReal,
    ImproperVectorError,
    MpMatrix,
    MpVector,
    ScaledBasis,
    bottom,
    format_scalar,
    format_vector,
    in_span,
    mp_dot,
    parse_scalar,
    residual,
    unit,
    vec_join,
    vec_scale,
    vector,
)

__version__ = "0.1.0"

__all__ = [
    "BasisResult",
    "Cycle",
    "CycleLimitError",
    "CycleRun",
    "DEFAULT_MAX_CYCLES",
    "Digraph",
    "DimensionError",
    "ExtReal",
    "FeederPath",
    "GeneratorSet",
    "ImproperVectorError",
    "MatrixDocument",
    "MatrixParseError",
    "MpMatrix",
    "MpVector",
    "NEG_INF",
    "RotationRun",
    "ScaledBasis",
    "SearchStats",
    "SpanOracle",
    "SystemRow",
    "TwoSidedSystem",
    "always_extremal",
    "bases_equal",
    "bottom",
    "combine_row",
    "cycle_path_generators",
    "cycle_terminals",
    "double_description",
    "extremal_basis",
    "extremal_filter",
    "feeder_paths",
    "format_scalar",
    "format_vector",
    "generator_enumeration",
    "in_span",
    "in_supereig",
    "is_extremal",
    "max_cycle_mean",
    "mp_dot",
    "nonneg_elementary_cycles",
    "parse_matrix",
    "parse_scalar",
    "parse_vector",
    "path_extremals",
    "render_matrix",
    "residual",
    "reverse_reachable",
    "rotations",
    "row_satisfied",
    "unit",
    "vec_join",
    "vec_scale",
    "vector",
]
