"""Exact generalizations of the Chu-Vandermonde identity.

Convolution families of polynomials, their three-sequence (Sheffer)
generalization, and Pascal-like infinite matrices: forward constructions,
recovery of the generating data, and exact identity checks, all over the
rationals.
"""

from .convolution import (
    ZERO_FAMILY,
    PolyFamily,
    ZeroFamily,
    builtin_psi,
    check_binomial_type,
    check_convolution,
    check_multinomial,
    check_scaled_convolution,
    check_weak_convolution,
    family_from_psi,
    from_binomial_type,
    recover_psi,
    to_binomial_type,
)
from .pascal import (
    MatrixBlock,
    RowSeriesSpec,
    check_matrix_identity,
    classify_corollary4,
    classify_nogo,
    column_interpolation_bridge,
    is_lower_triangular,
    is_lower_triangular_in_row,
    matrices_from_spec,
    pascal_block,
    riordan_array,
    row_series,
)
from .pascal import recover_spec as recover_row_spec
from .series import (
    QQ,
    QQX,
    TruncSeries,
    coeff,
    series_add,
    series_exp,
    series_inv,
    series_log,
    series_mul,
    series_pow,
)
from .sheffer import (
    FamilyTriple,
    ShefferSpec,
    check_diagonal_convolution,
    check_generalized_convolution,
    check_sheffer_identity,
    diagonal_completion,
    to_sheffer_sequence,
    triple_from_spec,
)
from .sheffer import recover_spec as recover_sheffer_spec
from .verification import Verification
from .xpoly import XPoly

__version__ = "0.1.0"
