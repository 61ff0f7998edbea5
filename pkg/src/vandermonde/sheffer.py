"""Three-sequence convolution identities and Sheffer sequences.

Triples ``(f, g, h)`` satisfying ``sum_k f_k(x) g_{n-k}(y) == h_n(x + y)``
with ``f_0(0)``, ``g_0(0)`` invertible are exactly those of the form

    f_n = [t^n] A(t) exp(x psi(t))
    g_n = [t^n] B(t) exp(x psi(t))
    h_n = [t^n] A(t) B(t) exp(x psi(t))

for unique series ``A``, ``B``, ``psi``.  Only ``psi(0) == 0`` is supported,
which is what keeps every entry a polynomial of degree at most n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .convolution import PolyFamily, check_bivariate, exp_x_psi
from .errors import (
    ConstantTermNotOne,
    InvalidSpec,
    NonInvertibleConstant,
    NonzeroPsi0,
    NotGeneralizedFamily,
)
from .series import QQX, TruncSeries, series_exp, series_log, series_mul
from .verification import Verification
from .xpoly import XPoly


@dataclass(frozen=True)
class ShefferSpec:
    A: TruncSeries
    B: TruncSeries
    psi: TruncSeries

    def validate(self) -> None:
        for name in ("A", "B"):
            if getattr(self, name)[0] == 0:
                raise InvalidSpec(f"{name}(0) must be nonzero")
        if self.psi[0] != 0:
            raise InvalidSpec(f"psi(0) = {self.psi[0]} must be 0")

    @property
    def order(self) -> int:
        return min(self.A.order, self.B.order, self.psi.order)

    def truncate(self, order: int) -> "ShefferSpec":
        return ShefferSpec(self.A.truncate(order), self.B.truncate(order),
                           self.psi.truncate(order))


@dataclass(frozen=True)
class FamilyTriple:
    f: PolyFamily
    g: PolyFamily
    h: PolyFamily

    def __post_init__(self):
        if not (self.f.order == self.g.order == self.h.order):
            raise ValueError("f, g, h must have the same order")

    @property
    def order(self) -> int:
        return self.f.order

    def map(self, fn) -> "FamilyTriple":
        return FamilyTriple(fn(self.f), fn(self.g), fn(self.h))


def _times_exp(prefactor: TruncSeries, exp_part: TruncSeries) -> PolyFamily:
    return PolyFamily(series_mul(prefactor.lift(QQX), exp_part).coeffs)


def build_triple(A: TruncSeries, B: TruncSeries, psi: TruncSeries, n_max: int) -> FamilyTriple:
    """Forward construction without the invertibility requirement on A, B."""
    try:
        e = exp_x_psi(psi, n_max)
    except NonzeroPsi0 as exc:
        raise InvalidSpec(str(exc)) from None
    A, B = A.truncate(n_max), B.truncate(n_max)
    return FamilyTriple(_times_exp(A, e), _times_exp(B, e), _times_exp(series_mul(A, B), e))


def triple_from_spec(spec: ShefferSpec, n_max: int) -> FamilyTriple:
    """``(f, g, h)`` with ``f_n = [t^n] A e^{x psi}`` and so on, for ``n <= n_max``."""
    spec.validate()
    if spec.order < n_max:
        raise InvalidSpec(f"spec series have order {spec.order} < n_max = {n_max}")
    return build_triple(spec.A, spec.B, spec.psi, n_max)


def _split_log(fam: PolyFamily, scale: Fraction, label: str):
    """Return ``(gamma, psi)`` with ``log(F / scale) = gamma(t) + x psi(t)``."""
    try:
        L = series_log(fam.generating_series() * (1 / scale))
    except ConstantTermNotOne:
        raise NotGeneralizedFamily(
            f"{label}_0 = {fam[0]} is not the constant {scale}"
        ) from None
    gamma, psi = [], []
    for n, ell in enumerate(L):
        if ell.degree >= 2:
            raise NotGeneralizedFamily(
                f"[t^{n}] log({label}) has an x^{ell.degree} term: {ell}"
            )
        gamma.append(ell[0])
        psi.append(ell[1])
    return TruncSeries(gamma), TruncSeries(psi)


def recover_spec(triple: FamilyTriple) -> ShefferSpec:
    """Recover ``(A, B, psi)`` from a triple, verifying the structure.

    With ``alpha = f_0(0)`` and ``beta = g_0(0)`` the logarithms
    ``L = log(F/alpha)``, ``M = log(G/beta)``, ``N = log(H/(alpha beta))``
    must decompose as ``Gamma + x psi``, ``Delta + x psi`` and
    ``Gamma + Delta + x psi``; then ``A = alpha e^Gamma`` and
    ``B = beta e^Delta``.  Any failure raises :class:`NotGeneralizedFamily`.
    """
    alpha, beta = triple.f[0][0], triple.g[0][0]
    for name, value in (("f_0(0)", alpha), ("g_0(0)", beta)):
        if value == 0:
            raise NonInvertibleConstant(f"{name} = 0 is not invertible")
    if triple.h[0][0] != alpha * beta:
        raise NotGeneralizedFamily(
            f"h_0(0) = {triple.h[0][0]} but f_0(0) g_0(0) = {alpha * beta}"
        )
    gamma, psi_f = _split_log(triple.f, alpha, "F")
    delta, psi_g = _split_log(triple.g, beta, "G")
    gamma_delta, psi_h = _split_log(triple.h, alpha * beta, "H")
    if not psi_f == psi_g == psi_h:
        raise NotGeneralizedFamily("the x-linear parts of log F, log G, log H differ")
    if gamma + delta != gamma_delta:
        raise NotGeneralizedFamily("the x-free part of log H is not that of log F plus log G")
    return ShefferSpec(series_exp(gamma) * alpha, series_exp(delta) * beta, psi_f)


def check_generalized_convolution(triple: FamilyTriple) -> Verification:
    """Exact check of ``sum_k f_k(x) g_{n-k}(y) == h_n(x + y)``."""
    return check_bivariate(triple.f.entries, triple.g.entries, triple.h.entries)


def check_diagonal_convolution(triple: FamilyTriple) -> Verification:
    """The same identity restricted to ``x == y``; never sufficient on its own."""
    for n in range(triple.order + 1):
        lhs = XPoly.zero()
        for k in range(n + 1):
            lhs = lhs + triple.f[k] * triple.g[n - k]
        if lhs != triple.h[n].scale_var(2):
            return Verification(False, f"n <= {triple.order}, y = x", n)
    return Verification(True, f"n <= {triple.order}, y = x")


def diagonal_completion(f: PolyFamily, g: PolyFamily) -> FamilyTriple:
    """Define ``h`` from arbitrary ``f, g`` by ``h_n(2x) = sum_k f_k(x) g_{n-k}(x)``.

    The result always passes :func:`check_diagonal_convolution`, whatever
    ``f`` and ``g`` are.
    """
    order = min(f.order, g.order)
    h = []
    for n in range(order + 1):
        s = XPoly.zero()
        for k in range(n + 1):
            s = s + f[k] * g[n - k]
        h.append(s.scale_var(Fraction(1, 2)))
    return FamilyTriple(f.truncate(order), g.truncate(order), PolyFamily(h))


def to_sheffer_sequence(triple: FamilyTriple) -> FamilyTriple:
    """Rescale each entry by ``n!``."""
    return triple.map(lambda fam: PolyFamily(p * factorial(n) for n, p in enumerate(fam)))


def check_sheffer_identity(triple: FamilyTriple) -> Verification:
    """Check ``sum_k C(n,k) F_k(x) G_{n-k}(y) == H_n(x + y)`` on rescaled sequences."""
    return check_bivariate(triple.f.entries, triple.g.entries, triple.h.entries,
                           binomial=True)
