"""Convergence of matrix powers via the column-variation seminorm.

The library decides whether the powers of a real square matrix with
constant column sums converge to a rank-one projection, computes the
stationary vector and the limit, and certifies a priori error bounds.
Exact rational arithmetic and guarded floating point are both supported.
"""

from .analysis import (
    DEFAULT_K_REPORT,
    DEFAULT_P_MAX,
    Case2x2,
    Classification2x2,
    ConvergenceAnalysis,
    Verdict,
    analyze,
    classify_2x2,
    decay_bound,
    determinant,
    find_contraction_power,
    iterate_error_bound,
    limit_projection,
    matrix_2x2,
    stationary_vector,
    type_eigenvalue_certificate,
)
from .core import (
    DEFAULT_TOLERANCE,
    Domain,
    Matrix,
    RowVector,
    Scalar,
    TypeReport,
    VariationReport,
    Vector,
    ensure_type_one,
    l1_norm,
    mat_mul,
    mat_pow,
    mat_vec,
    ones_row,
    row_mat_mul,
    row_variation,
    set_tolerance,
    tolerance,
    type_of,
    variation,
    vsum,
)
from .errors import (
    DimensionError,
    DomainMismatchError,
    MatrixParseError,
    NegativeEntryError,
    NonPositiveTypeError,
    NonUniqueFixedVectorError,
    NotSquareError,
    NotTypedError,
    NotTypeOneError,
    StovarError,
    VsumNotOneError,
    ZeroVariationError,
)
from .nonneg import (
    SignPattern,
    criterion_3x3,
    first_positive_power,
    pairwise_positive_overlap,
    pattern_power,
    pattern_product,
    sign_pattern,
    strict_variation_test,
    variation_type_bound_check,
)
from .norms import row_variation_maximizer, variation_maximizer

__version__ = "0.1.0"

__all__ = [
    "Case2x2",
    "Classification2x2",
    "ConvergenceAnalysis",
    "DEFAULT_K_REPORT",
    "DEFAULT_P_MAX",
    "DEFAULT_TOLERANCE",
    "DimensionError",
    "Domain",
    "DomainMismatchError",
    "Matrix",
    "MatrixParseError",
    "NegativeEntryError",
    "NonPositiveTypeError",
    "NonUniqueFixedVectorError",
    "NotSquareError",
    "NotTypeOneError",
    "NotTypedError",
    "RowVector",
    "Scalar",
    "SignPattern",
    "StovarError",
    "TypeReport",
    "VariationReport",
    "Vector",
    "Verdict",
    "VsumNotOneError",
    "ZeroVariationError",
    "analyze",
    "classify_2x2",
    "criterion_3x3",
    "decay_bound",
    "determinant",
    "ensure_type_one",
    "find_contraction_power",
    "first_positive_power",
    "iterate_error_bound",
    "l1_norm",
    "limit_projection",
    "mat_mul",
    "mat_pow",
    "mat_vec",
    "matrix_2x2",
    "ones_row",
    "pairwise_positive_overlap",
    "pattern_power",
    "pattern_product",
    "row_mat_mul",
    "row_variation",
    "row_variation_maximizer",
    "set_tolerance",
    "sign_pattern",
    "stationary_vector",
    "strict_variation_test",
    "tolerance",
    "type_eigenvalue_certificate",
    "type_of",
    "variation",
    "variation_maximizer",
    "variation_type_bound_check",
    "vsum",
]
