"""Convolution families of polynomials.

A sequence ``f = (f_0, f_1, ...)`` of polynomials is a convolution family
when ``sum_k f_k(x) f_{n-k}(y) == f_n(x + y)`` for every ``n``.  Every such
family with ``f_0(0) == 1`` has the form ``f_n(x) = [t^n] exp(x * psi(t))``
for a unique series ``psi`` with ``psi(0) == 0``; the zero family is the only
other solution.  This module builds families from ``psi``
(:func:`family_from_psi`), recovers ``psi`` from a family by taking the
logarithm of its bivariate generating function (:func:`recover_psi`), and
checks the identity and its variants exactly.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb, factorial
from typing import Iterable, Iterator, Sequence

from .errors import (
    ConstantTermNotOne,
    IndexBeyondTruncation,
    NonzeroPsi0,
    NotConvolutionFamily,
    NotIdempotentConstant,
    UnknownCatalogKey,
)
from .series import (
    QQX,
    TruncSeries,
    exp_t,
    log1p_t,
    series_log,
    series_mul,
)
from .verification import Verification
from .xpoly import XPoly


class PolyFamily:
    """A finite prefix ``(f_0, ..., f_N)`` of a sequence of polynomials in x.

    No structural invariant is enforced on construction, so that arbitrary
    (non-)families can be checked; see :meth:`satisfies_degree_bound` and
    :meth:`vanishes_at_zero` for the properties genuine families have.
    """

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable):
        self.entries = tuple(XPoly.coerce(e) if not isinstance(e, (list, tuple))
                             else XPoly(e) for e in entries)
        if not self.entries:
            raise ValueError("a family needs at least f_0")

    @property
    def order(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, n):
        return self.entries[n]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[XPoly]:
        return iter(self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyFamily):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return "PolyFamily([%s])" % ", ".join(str(e) for e in self.entries)

    def truncate(self, order: int) -> "PolyFamily":
        if order > self.order:
            raise IndexBeyondTruncation(f"family has order {self.order} < {order}")
        return PolyFamily(self.entries[: order + 1])

    def replace(self, n: int, poly) -> "PolyFamily":
        entries = list(self.entries)
        entries[n] = XPoly.coerce(poly)
        return PolyFamily(entries)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def satisfies_degree_bound(self) -> bool:
        return all(f.degree <= n for n, f in enumerate(self.entries))

    def vanishes_at_zero(self) -> bool:
        """True when ``f_n(0) == 0`` for every ``n >= 1``."""
        return all(f[0] == 0 for f in self.entries[1:])

    def generating_series(self) -> TruncSeries:
        """``F(x, t) = sum f_n(x) t^n`` as a series in t over Q[x]."""
        return TruncSeries(self.entries, QQX)

    @classmethod
    def from_generating_series(cls, series: TruncSeries) -> "PolyFamily":
        return cls(series.lift(QQX).coeffs)

    def evaluate(self, value) -> list:
        return [f(Fraction(value)) for f in self.entries]

    def table(self, points: Sequence) -> list:
        """Row n holds ``f_n`` evaluated at each of ``points``."""
        return [[f(Fraction(p)) for p in points] for f in self.entries]


class ZeroFamily:
    """Marker returned by :func:`recover_psi` for the identically zero family."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO_FAMILY"


ZERO_FAMILY = ZeroFamily()


def _require_psi0_zero(psi: TruncSeries) -> None:
    if psi[0] != 0:
        raise NonzeroPsi0(
            f"psi(0) = {psi[0]} != 0: f_n(x) would carry the non-polynomial "
            "factor exp(psi(0)*x)"
        )


def exp_x_psi(psi: TruncSeries, n_max: int) -> TruncSeries:
    """``exp(x * psi(t))`` through ``t**n_max``, as a series over Q[x].

    Computed as ``sum_k x**k / k! * psi**k``; since ``psi(0) == 0`` the k-th
    term starts at ``t**k`` so the sum stops at ``k = n_max``.
    """
    _require_psi0_zero(psi)
    if psi.order < n_max:
        raise IndexBeyondTruncation(f"psi has order {psi.order} < n_max = {n_max}")
    psi = psi.truncate(n_max)
    out = [XPoly.zero() for _ in range(n_max + 1)]
    power = TruncSeries.one(n_max)
    for k in range(n_max + 1):
        xk = XPoly.monomial(k, Fraction(1, factorial(k)))
        for n in range(k, n_max + 1):
            if power[n]:
                out[n] = out[n] + xk * power[n]
        power = series_mul(power, psi)
    return TruncSeries(out, QQX)


def family_from_psi(psi: TruncSeries, n_max: int) -> PolyFamily:
    """The convolution family ``f_n(x) = [t^n] exp(x * psi(t))``, n <= n_max.

    >>> from vandermonde.series import t_series
    >>> family_from_psi(t_series(3), 3)[3]
    XPoly([0, 0, 0, 1/6])
    """
    return PolyFamily(exp_x_psi(psi, n_max).coeffs)


def recover_psi(fam: PolyFamily) -> TruncSeries | ZeroFamily:
    """Recover ``psi`` from a weak convolution family, validating as it goes.

    Returns :data:`ZERO_FAMILY` for the zero family.  Otherwise forms
    ``L = log F(x, t)`` and requires every ``[t^n] L`` to be a multiple of
    ``x``; the multipliers are the coefficients of ``psi``.  Raises
    :class:`NotConvolutionFamily` when the structure is violated.
    """
    f00 = fam[0][0]
    if f00 == 0:
        if fam.is_zero():
            return ZERO_FAMILY
        n = next(n for n, f in enumerate(fam) if f)
        raise NotConvolutionFamily(
            f"f_0(0) = 0 forces the zero family, but f_{n} = {fam[n]}"
        )
    if f00 != 1:
        raise NotIdempotentConstant(
            f"f_0(0) = {f00}; a weak convolution family over Q needs f_0(0) in {{0, 1}}"
        )
    try:
        log_f = series_log(fam.generating_series())
    except ConstantTermNotOne:
        raise NotConvolutionFamily(f"f_0 = {fam[0]} is not the constant 1") from None
    psi = []
    for n, ell in enumerate(log_f):
        bad = [k for k, c in enumerate(ell.coeffs) if c and k != 1]
        if bad:
            raise NotConvolutionFamily(
                f"[t^{n}] log F has a nonzero x^{bad[0]} term ({ell})"
            )
        psi.append(ell[1])
    return TruncSeries(psi)


# -- identity checks ---------------------------------------------------------

def _bivariate_mismatch(f: Sequence[XPoly], g: Sequence[XPoly], h: XPoly, n: int,
                        binomial: bool = False) -> bool:
    """True when ``sum_k w_k f_k(x) g_{n-k}(y) != h(x + y)``."""
    lhs: dict = {}
    for k in range(n + 1):
        a, b = f[k], g[n - k]
        if not a or not b:
            continue
        w = comb(n, k) if binomial else 1
        for i, ai in enumerate(a.coeffs):
            if not ai:
                continue
            for j, bj in enumerate(b.coeffs):
                if bj:
                    lhs[i, j] = lhs.get((i, j), 0) + w * ai * bj
    lhs = {key: v for key, v in lhs.items() if v}
    return lhs != h.shift_expand()


def check_bivariate(f: Sequence[XPoly], g: Sequence[XPoly], h: Sequence[XPoly],
                    binomial: bool = False) -> Verification:
    """Check ``sum_k [C(n,k)] f_k(x) g_{n-k}(y) == h_n(x+y)`` for all stored n.

    Both sides are expanded as exact polynomials in (x, y).
    """
    order = min(len(f), len(g), len(h)) - 1
    for n in range(order + 1):
        if _bivariate_mismatch(f, g, h[n], n, binomial):
            return Verification(False, f"n <= {order}", n)
    return Verification(True, f"n <= {order}")


def check_convolution(fam: PolyFamily) -> Verification:
    """Exact check of ``sum_k f_k(x) f_{n-k}(y) == f_n(x + y)``."""
    return check_bivariate(fam.entries, fam.entries, fam.entries)


def check_scaled_convolution(fam: PolyFamily, r) -> Verification:
    """Check ``sum_k f_k(x) f_{n-k}(r x) == f_n((1 + r) x)`` (the ``y = r x`` slice)."""
    r = Fraction(r)
    certified = f"n <= {fam.order}, " + ("y = x" if r == 1 else f"y = {r}·x")
    scaled = [f.scale_var(r) for f in fam]
    for n in range(fam.order + 1):
        lhs = XPoly.zero()
        for k in range(n + 1):
            lhs = lhs + fam[k] * scaled[n - k]
        if lhs != fam[n].scale_var(1 + r):
            return Verification(False, certified, n)
    return Verification(True, certified)


def check_weak_convolution(fam: PolyFamily) -> Verification:
    """Exact check of the diagonal identity ``sum_k f_k(x) f_{n-k}(x) == f_n(2x)``."""
    return check_scaled_convolution(fam, 1)


def check_multinomial(fam: PolyFamily, m: int, n_max: int | None = None) -> Verification:
    """Check ``sum_{k_1+...+k_m = n} prod_i f_{k_i}(x_i) == f_n(x_1 + ... + x_m)``.

    Comparing coefficients of ``x_1**e_1 ... x_m**e_m`` on both sides, the
    identity for all ``n <= n_max`` is equivalent to

        prod_i G_{e_i}(t) == G_{e_1 + ... + e_m}(t)   (mod t**(n_max+1))

    for every exponent vector ``e``, where ``G_e(t) = e! [x^e] F(x, t)``.
    Exponents above the largest degree give ``G_e = 0``, and the condition
    is symmetric in ``e``, so only sorted vectors need checking.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    if n_max is None:
        n_max = fam.order
    if n_max > fam.order:
        raise IndexBeyondTruncation(f"family has order {fam.order} < {n_max}")
    certified = f"n <= {n_max}, m = {m}"
    if m == 1:
        return Verification(True, certified)

    entries = fam.entries[: n_max + 1]
    top = max(f.degree for f in entries)
    if top < 0:
        return Verification(True, certified)
    G = [TruncSeries([f[e] * factorial(e) for f in entries]) for e in range(top + 1)]
    zero = TruncSeries.zero(n_max)
    val = [g.valuation() for g in G]

    worst = None
    prefix_cache: dict = {}
    for e in combinations_with_replacement(range(top + 1), m):
        target = G[sum(e)] if sum(e) <= top else zero
        if any(val[k] is None for k in e):
            prod = zero
        elif sum(val[k] for k in e) > n_max:
            prod = zero
        else:
            head = e[:-1]
            if head not in prefix_cache:
                p = G[head[0]]
                for k in head[1:]:
                    p = series_mul(p, G[k])
                prefix_cache[head] = p
            prod = series_mul(prefix_cache[head], G[e[-1]])
        if prod != target:
            n = next(i for i in range(n_max + 1) if prod[i] != target[i])
            if worst is None or n < worst:
                worst = n
    if worst is not None:
        return Verification(False, certified, worst)
    return Verification(True, certified)


# -- binomial-type rescaling ---------------------------------------------------

def to_binomial_type(fam: PolyFamily) -> PolyFamily:
    """``F_n = n! f_n``."""
    return PolyFamily(f * factorial(n) for n, f in enumerate(fam))


def from_binomial_type(fam: PolyFamily) -> PolyFamily:
    return PolyFamily(f / factorial(n) for n, f in enumerate(fam))


def check_binomial_type(fam: PolyFamily) -> Verification:
    """Check ``sum_k C(n,k) F_k(x) F_{n-k}(y) == F_n(x + y)``."""
    return check_bivariate(fam.entries, fam.entries, fam.entries, binomial=True)


# -- catalog -----------------------------------------------------------------

def _rising(order: int) -> TruncSeries:
    # -log(1 - t)
    return TruncSeries.from_function(lambda n: Fraction(1, n) if n else 0, order)


def _bell(order: int) -> TruncSeries:
    return exp_t(order) - 1


CATALOG = {
    "binomial": (lambda order: TruncSeries.from_poly([0, 1], order), "t"),
    "falling-factorial": (log1p_t, "log(1 + t)"),
    "rising-factorial": (_rising, "-log(1 - t)"),
    "bell": (_bell, "exp(t) - 1"),
}


def builtin_psi(name: str, order: int) -> TruncSeries:
    """Taylor expansion of one of the catalogued ``psi`` series.

    ========================  ==============  ===========================
    key                       psi(t)          f_n(x)
    ========================  ==============  ===========================
    ``binomial``              t               x^n / n!
    ``falling-factorial``     log(1 + t)      C(x, n)
    ``rising-factorial``      -log(1 - t)     C(x + n - 1, n)
    ``bell``                  exp(t) - 1      B_n(x) / n!  (Bell polynomials)
    ========================  ==============  ===========================
    """
    try:
        build, _ = CATALOG[name]
    except KeyError:
        raise UnknownCatalogKey(
            f"unknown catalog key {name!r}; expected one of {', '.join(CATALOG)}"
        ) from None
    return build(order)
