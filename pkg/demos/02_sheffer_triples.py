"""
Three families, one identity
============================

With prefactors A and B the convolution splits into three families
f, g, h.  Construct them, check the identity, and recover (A, B, psi).
"""

from vandermonde import (
    PolyFamily,
    ShefferSpec,
    TruncSeries,
    XPoly,
    check_diagonal_convolution,
    check_generalized_convolution,
    check_sheffer_identity,
    diagonal_completion,
    recover_sheffer_spec,
    to_sheffer_sequence,
    triple_from_spec,
)
from vandermonde.errors import NotGeneralizedFamily

n = 6
A = TruncSeries.from_poly([1, 1], n)       # 1 + t
B = TruncSeries.from_poly([1, -1], n)      # 1 - t
psi = TruncSeries.from_poly([0, 1, 0, 1], n)  # t + t^3
triple = triple_from_spec(ShefferSpec(A, B, psi), n)

for label, fam in (("f", triple.f), ("g", triple.g), ("h", triple.h)):
    print(f"{label}_3(x) =", fam[3])

print("sum_k f_k(x) g_(n-k)(y) = h_n(x+y):", check_generalized_convolution(triple))

spec = recover_sheffer_spec(triple)
print("A =", spec.A)
print("B =", spec.B)
print("psi =", spec.psi)

# multiplied by n! these are Sheffer sequences with the binomial form of the identity
print("binomial form:", check_sheffer_identity(to_sheffer_sequence(triple)))

# checking only x = y proves nothing: any f, g can be completed along the diagonal
x = XPoly.x()
fake = diagonal_completion(PolyFamily([1, x * x]), PolyFamily([1, 0]))
print("diagonal only:", check_diagonal_convolution(fake))
print("full identity:", check_generalized_convolution(fake))
try:
    recover_sheffer_spec(fake)
except NotGeneralizedFamily as exc:
    print("no (A, B, psi) exists:", exc)
