"""Truncated formal power series over an exact coefficient ring.

A :class:`TruncSeries` stores the coefficients of ``t**0 .. t**N`` and nothing
beyond; ``N`` is its *order*.  Binary operations truncate to the smaller of
the two orders, so a result never claims precision that was not computed.

The coefficient ring is pluggable.  Two rings are provided: :data:`QQ`
(``Fraction``) and :data:`QQX` (:class:`~vandermonde.xpoly.XPoly`).  Both
contain the rationals, which is all that ``exp`` and ``log`` need: the
recurrences only ever divide by positive integers.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from numbers import Rational
from typing import Callable, Iterable, Sequence

from .errors import (
    ConstantTermNotOne,
    IndexBeyondTruncation,
    NonInvertibleConstant,
    NonzeroConstantTerm,
    RingMismatch,
)
from .xpoly import _SUPERSCRIPTS, XPoly, format_poly


class Ring:
    """A commutative coefficient ring containing Q, with exact equality."""

    def __init__(self, name: str, zero, one, coerce: Callable, invert: Callable):
        self.name = name
        self.zero = zero
        self.one = one
        self.coerce = coerce
        self._invert = invert

    def invert(self, value):
        try:
            return self._invert(value)
        except ZeroDivisionError:
            raise NonInvertibleConstant(
                f"{value} is not invertible in {self.name}"
            ) from None

    def __repr__(self) -> str:
        return self.name


def _fraction(value) -> Fraction:
    if isinstance(value, XPoly):
        if not value.is_constant():
            raise TypeError(f"{value} is not a rational constant")
        return value[0]
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise TypeError(f"cannot convert {type(value).__name__} to Fraction")


QQ = Ring("QQ", Fraction(0), Fraction(1), _fraction, lambda v: 1 / v)
QQX = Ring("QQ[x]", XPoly.zero(), XPoly.one(), XPoly.coerce, XPoly.inverse)


class TruncSeries:
    """Immutable power series in one variable, truncated after ``t**order``.

    ``a == b`` requires equal orders and equal coefficients;
    :meth:`prefix_equal` compares only the common prefix.
    """

    __slots__ = ("_c", "ring")

    def __init__(self, coeffs: Iterable, ring: Ring = QQ):
        c = tuple(ring.coerce(v) for v in coeffs)
        if not c:
            raise ValueError("a truncated series needs at least one coefficient")
        self._c = c
        self.ring = ring

    @classmethod
    def _raw(cls, coeffs: tuple, ring: Ring) -> "TruncSeries":
        s = object.__new__(cls)
        s._c = coeffs
        s.ring = ring
        return s

    @classmethod
    def zero(cls, order: int, ring: Ring = QQ) -> "TruncSeries":
        return cls._raw((ring.zero,) * (order + 1), ring)

    @classmethod
    def one(cls, order: int, ring: Ring = QQ) -> "TruncSeries":
        return cls._raw((ring.one,) + (ring.zero,) * order, ring)

    @classmethod
    def constant(cls, value, order: int, ring: Ring = QQ) -> "TruncSeries":
        return cls._raw((ring.coerce(value),) + (ring.zero,) * order, ring)

    @classmethod
    def from_poly(cls, coeffs: Sequence, order: int, ring: Ring = QQ) -> "TruncSeries":
        """Pad (or cut) a finite coefficient list to exactly ``order + 1`` terms."""
        c = [ring.coerce(v) for v in list(coeffs)[: order + 1]]
        c += [ring.zero] * (order + 1 - len(c))
        return cls._raw(tuple(c), ring)

    @classmethod
    def from_function(cls, fn: Callable[[int], object], order: int,
                      ring: Ring = QQ) -> "TruncSeries":
        return cls((fn(n) for n in range(order + 1)), ring)

    # -- inspection --------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple:
        return self._c

    def __getitem__(self, n: int):
        return coeff(self, n)

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None for the zero series."""
        for n, c in enumerate(self._c):
            if c:
                return n
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def prefix_equal(self, other: "TruncSeries") -> bool:
        n = min(len(self._c), len(other._c))
        return self._c[:n] == other._c[:n]

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise IndexBeyondTruncation(
                f"cannot extend a series of order {self.order} to order {order}"
            )
        return TruncSeries._raw(self._c[: order + 1], self.ring)

    def map(self, fn: Callable, ring: Ring | None = None) -> "TruncSeries":
        ring = ring or self.ring
        return TruncSeries((fn(c) for c in self._c), ring)

    def lift(self, ring: Ring) -> "TruncSeries":
        """View a series over ``ring`` (e.g. rational coefficients as constants in Q[x])."""
        if ring is self.ring:
            return self
        return TruncSeries(self._c, ring)

    def __repr__(self) -> str:
        return f"TruncSeries([{', '.join(map(str, self._c))}], order={self.order})"

    def __str__(self) -> str:
        if self.ring is QQ:
            tail = "t" + str(self.order + 1).translate(_SUPERSCRIPTS)
            return format_poly(self._c, "t") + f" + O({tail})"
        return repr(self)

    # -- arithmetic --------------------------------------------------------

    def _coerce_operand(self, other) -> "TruncSeries | None":
        if isinstance(other, TruncSeries):
            if other.ring is not self.ring:
                raise RingMismatch(f"cannot combine {self.ring} and {other.ring} series")
            return other
        try:
            return TruncSeries.constant(other, self.order, self.ring)
        except TypeError:
            return None

    def __add__(self, other):
        other = self._coerce_operand(other)
        return NotImplemented if other is None else series_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "TruncSeries":
        return TruncSeries._raw(tuple(-c for c in self._c), self.ring)

    def __sub__(self, other):
        other = self._coerce_operand(other)
        return NotImplemented if other is None else series_add(self, -other)

    def __rsub__(self, other):
        other = self._coerce_operand(other)
        return NotImplemented if other is None else series_add(other, -self)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        try:
            scalar = self.ring.coerce(other)
        except TypeError:
            return NotImplemented
        return self.scale(scalar)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, series_inv(other))
        try:
            scalar = self.ring.coerce(other)
        except TypeError:
            return NotImplemented
        return self.scale(self.ring.invert(scalar))

    def __pow__(self, k: int) -> "TruncSeries":
        return series_pow(self, k)

    def scale(self, scalar) -> "TruncSeries":
        return TruncSeries._raw(tuple(c * scalar for c in self._c), self.ring)

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by ``t**k`` keeping the order."""
        z = self.ring.zero
        return TruncSeries._raw(((z,) * k + self._c)[: len(self._c)], self.ring)


def _check_ring(a: TruncSeries, b: TruncSeries) -> None:
    if a.ring is not b.ring:
        raise RingMismatch(f"cannot combine {a.ring} and {b.ring} series")


def series_add(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    _check_ring(a, b)
    n = min(len(a._c), len(b._c))
    return TruncSeries._raw(tuple(x + y for x, y in zip(a._c[:n], b._c[:n])), a.ring)


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Cauchy product truncated to ``min(a.order, b.order)``."""
    _check_ring(a, b)
    n = min(len(a._c), len(b._c))
    ac, bc = a._c, b._c
    out = [a.ring.zero] * n
    for i in range(n):
        ai = ac[i]
        if not ai:
            continue
        for j in range(n - i):
            bj = bc[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return TruncSeries._raw(tuple(out), a.ring)


def series_pow(a: TruncSeries, k: int) -> TruncSeries:
    if not isinstance(k, int) or k < 0:
        raise ValueError("exponent must be a nonnegative integer")
    result = TruncSeries.one(a.order, a.ring)
    base = a
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def series_inv(a: TruncSeries) -> TruncSeries:
    """Reciprocal series; the constant term must be a unit of the ring."""
    inv0 = a.ring.invert(a._c[0])
    ac = a._c
    out = [inv0]
    for n in range(1, len(ac)):
        acc = a.ring.zero
        for k in range(1, n + 1):
            if ac[k]:
                acc = acc + ac[k] * out[n - k]
        out.append(-(acc * inv0))
    return TruncSeries._raw(tuple(out), a.ring)


def series_exp(a: TruncSeries) -> TruncSeries:
    """``exp(a)`` by the recurrence ``n*g[n] = sum(k*a[k]*g[n-k])`` from ``g' = a'g``."""
    ac = a._c
    if ac[0]:
        raise NonzeroConstantTerm(
            "exp needs a zero constant term, got "
            f"{ac[0]}; over Q and Q[x] the only nilpotent constant is 0"
        )
    ring = a.ring
    g = [ring.one]
    for n in range(1, len(ac)):
        acc = ring.zero
        for k in range(1, n + 1):
            if ac[k]:
                acc = acc + ac[k] * g[n - k] * k
        g.append(acc * Fraction(1, n))
    return TruncSeries._raw(tuple(g), ring)


def series_log(a: TruncSeries) -> TruncSeries:
    """``log(a)`` for ``a[0] == 1``, solving ``a' = l'a`` term by term."""
    ac = a._c
    ring = a.ring
    if ac[0] != ring.one:
        raise ConstantTermNotOne(f"log needs constant term 1, got {ac[0]}")
    l = [ring.zero]
    for n in range(1, len(ac)):
        acc = ac[n] * n
        for k in range(1, n):
            if l[k] and ac[n - k]:
                acc = acc - l[k] * ac[n - k] * k
        l.append(acc * Fraction(1, n))
    return TruncSeries._raw(tuple(l), ring)


def coeff(a: TruncSeries, n: int):
    """The coefficient of ``t**n``."""
    if n < 0 or n > a.order:
        raise IndexBeyondTruncation(f"[t^{n}] requested from a series of order {a.order}")
    return a._c[n]


# -- small constructors used across the package ------------------------------

def t_series(order: int) -> TruncSeries:
    """The series ``t``."""
    return TruncSeries.from_poly([0, 1], order)


def exp_t(order: int) -> TruncSeries:
    return TruncSeries.from_function(lambda n: Fraction(1, factorial(n)), order)


def log1p_t(order: int) -> TruncSeries:
    """``log(1 + t)``."""
    return TruncSeries.from_function(
        lambda n: Fraction((-1) ** (n + 1), n) if n else 0, order
    )


def geometric(order: int, ratio=1) -> TruncSeries:
    """``1 / (1 - ratio*t)``."""
    r = Fraction(ratio)
    return TruncSeries.from_function(lambda n: r**n, order)
