"""
Matrices that satisfy the Pascal identity
=========================================

Rows given by f h^i, g h^i and f g h^i satisfy
sum_j a[i][j] b[l][n-j] = c[i+l][n].  Build such blocks, check them, and
recover (f, g, h) from the entries.
"""

from vandermonde import (
    RowSeriesSpec,
    TruncSeries,
    check_matrix_identity,
    classify_corollary4,
    classify_nogo,
    matrices_from_spec,
    pascal_block,
    recover_row_spec,
)
from vandermonde.errors import NotPascalLike

P = pascal_block(6, 6)
print(P)
print("Pascal:", check_matrix_identity(P, P, P))

# a non-triangular example: h(0) = 3
spec = RowSeriesSpec(TruncSeries.from_poly([1, 1], 7), TruncSeries.from_poly([2], 7),
                     TruncSeries.from_poly([3, 0, 1], 7))
A, B, C = matrices_from_spec(spec, 5, 8)
print(A)
print("identity:", check_matrix_identity(A, B, C))
back = recover_row_spec(A, B, C)
print("f =", back.f)
print("g =", back.g)
print("h =", back.h)

# lower-triangular single-matrix solutions are exactly kappa^(i-j) lam^j C(i, j)
one = TruncSeries.one(7)
L, _, _ = matrices_from_spec(RowSeriesSpec(one, one, TruncSeries.from_poly([2, 3], 7)), 8, 8)
form = classify_nogo(L)
print("kappa =", form.kappa, " lambda =", form.lam)

try:
    classify_nogo(P.with_entry(2, 2, 7))
except NotPascalLike as exc:
    print("mutated:", exc)

# three different matrices, triangular in row 0
blocks = matrices_from_spec(RowSeriesSpec(TruncSeries.from_poly([2], 5), TruncSeries.from_poly([3], 5),
                                          TruncSeries.from_poly([1, 1, 1], 5)), 5, 6)
form = classify_corollary4(*blocks)
print("alpha =", form.alpha, " beta =", form.beta, " h =", form.h, " scaled Pascal:", form.is_scaled_pascal)
