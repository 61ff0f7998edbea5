"""
Riordan arrays and column interpolation
=======================================

The A block is the transpose of a Riordan array.  When h(0) = 1 its
columns are polynomials in the row index, and those polynomials form a
convolution family for psi = log h.
"""

from vandermonde import (
    RowSeriesSpec,
    TruncSeries,
    column_interpolation_bridge,
    matrices_from_spec,
    recover_psi,
    riordan_array,
)
from vandermonde.series import geometric

n = 5
f = geometric(n)                                  # 1/(1 - t)
h = TruncSeries.from_poly([0, 1], n) * geometric(n)  # t/(1 - t)
print(riordan_array(f, h, 6, 6))

f, h = TruncSeries.from_poly([1, 2], n), TruncSeries.from_poly([1, 1, 1], n)
R = riordan_array(f, h, 6, 6)
A, _, _ = matrices_from_spec(RowSeriesSpec(f, TruncSeries.one(n), h), 6, 6)
print("transpose matches:", R.transpose() == A)

one = TruncSeries.one(8)
spec = RowSeriesSpec(one, one, TruncSeries.from_poly([1, 1, 1], 8))
report = column_interpolation_bridge(spec, 8, 8)
print("checked", report.certified)
for k in range(4):
    print(f"column {k}: a[i][{k}] = {report.f[k]} at x = i")
print("psi = log h =", report.psi)
print("recover_psi agrees:", recover_psi(report.f) == report.psi)
