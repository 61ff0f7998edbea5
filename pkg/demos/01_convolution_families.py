"""
Convolution families from a single series
=========================================

Build the polynomial family of a series psi, check the addition formula
exactly, then go back from the polynomials to psi.
"""

from vandermonde import (
    PolyFamily,
    builtin_psi,
    check_convolution,
    check_multinomial,
    check_weak_convolution,
    family_from_psi,
    recover_psi,
    to_binomial_type,
)
from vandermonde.errors import NotConvolutionFamily

# psi(t) = log(1 + t) gives the binomial coefficients C(x, n)
psi = builtin_psi("falling-factorial", 6)
print("psi =", psi)
fam = family_from_psi(psi, 6)
for n, p in enumerate(fam):
    print(f"f_{n}(x) =", p)

# the addition formula holds as an identity in two variables
print("convolution:", check_convolution(fam))
print("same at y = x:", check_weak_convolution(fam))
print("three variables:", check_multinomial(fam, 3))

# evaluating at x = 5 gives row 5 of Pascal's triangle
print("f_n(5):", ", ".join(str(v) for v in fam.evaluate(5)))

# the family remembers where it came from
print("recovered psi =", recover_psi(fam))

# break one entry and the check points at it
broken = fam.replace(2, fam[2] + 1)
print("perturbed:", check_convolution(broken))
try:
    recover_psi(broken)
except NotConvolutionFamily as exc:
    print("recover_psi refuses:", exc)

# rescaling by n! turns psi = e^t - 1 into the Bell polynomials
bell = to_binomial_type(family_from_psi(builtin_psi("bell", 5), 5))
for n, p in enumerate(bell):
    print(f"B_{n}(x) =", p, "   B_n(1) =", p(1))

# the all-zero family is the one other solution
print(recover_psi(PolyFamily([0, 0, 0])))
