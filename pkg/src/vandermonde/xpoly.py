"""Univariate polynomials in ``x`` with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from numbers import Rational
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]

_SUPERSCRIPTS = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


class XPoly:
    """Immutable polynomial ``sum(c[k] * x**k)`` over the rationals.

    Coefficients are stored lowest power first with trailing zeros stripped,
    so the zero polynomial has an empty coefficient tuple.  Instances mix
    freely with ``int`` and ``Fraction`` in arithmetic and comparisons.

    >>> x = XPoly.x()
    >>> (x + 1) * (x - 1)
    XPoly([-1, 0, 1])
    >>> ((x + 1) ** 2)(Fraction(1, 2))
    Fraction(9, 4)
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        c = [Fraction(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def _raw(cls, coeffs: tuple) -> "XPoly":
        # Caller guarantees Fractions with no trailing zero.
        p = object.__new__(cls)
        p._c = coeffs
        return p

    @classmethod
    def zero(cls) -> "XPoly":
        return cls._raw(())

    @classmethod
    def one(cls) -> "XPoly":
        return cls._raw((Fraction(1),))

    @classmethod
    def x(cls) -> "XPoly":
        return cls._raw((Fraction(0), Fraction(1)))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "XPoly":
        return cls([0] * k + [c])

    @classmethod
    def coerce(cls, value) -> "XPoly":
        if isinstance(value, XPoly):
            return value
        if isinstance(value, (int, Rational)):
            return cls((value,))
        raise TypeError(f"cannot convert {type(value).__name__} to XPoly")

    # -- inspection --------------------------------------------------------

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._c) - 1

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            raise IndexError("negative power")
        return self._c[k] if k < len(self._c) else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def is_constant(self) -> bool:
        return len(self._c) <= 1

    def __eq__(self, other) -> bool:
        if isinstance(other, XPoly):
            return self._c == other._c
        if isinstance(other, (int, Rational)):
            return self._c == ((Fraction(other),) if other != 0 else ())
        return NotImplemented

    def __hash__(self) -> int:
        if len(self._c) <= 1:
            return hash(self._c[0] if self._c else 0)
        return hash(self._c)

    def __repr__(self) -> str:
        return "XPoly([%s])" % ", ".join(str(c) for c in self._c)

    def __str__(self) -> str:
        return format_poly(self._c, "x")

    # -- ring operations ---------------------------------------------------

    def __neg__(self) -> "XPoly":
        return XPoly._raw(tuple(-c for c in self._c))

    def __pos__(self) -> "XPoly":
        return self

    def __add__(self, other) -> "XPoly":
        try:
            other = XPoly.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        return XPoly(tuple(a[i] + b[i] for i in range(len(b))) + a[len(b):])

    __radd__ = __add__

    def __sub__(self, other) -> "XPoly":
        try:
            other = XPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "XPoly":
        return (-self) + other

    def __mul__(self, other) -> "XPoly":
        if isinstance(other, (int, Rational)):
            if other == 0:
                return XPoly.zero()
            other = Fraction(other)
            return XPoly._raw(tuple(c * other for c in self._c))
        if not isinstance(other, XPoly):
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return XPoly.zero()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return XPoly._raw(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "XPoly":
        # Only division by nonzero rationals is defined.
        if isinstance(other, XPoly):
            if not other.is_constant():
                return NotImplemented
            other = other[0]
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise ZeroDivisionError("XPoly division by zero")
            inv = 1 / Fraction(other)
            return XPoly._raw(tuple(c * inv for c in self._c))
        return NotImplemented

    def __pow__(self, k: int) -> "XPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result, base = XPoly.one(), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse(self) -> "XPoly":
        if len(self._c) != 1:
            raise ZeroDivisionError(f"{self} is not a unit of Q[x]")
        return XPoly._raw((1 / self._c[0],))

    # -- evaluation and substitution --------------------------------------

    def __call__(self, value):
        """Evaluate by Horner's rule; ``value`` may be a rational or an XPoly."""
        acc = XPoly.zero() if isinstance(value, XPoly) else Fraction(0)
        for c in reversed(self._c):
            acc = acc * value + c
        return acc

    def scale_var(self, r: Scalar) -> "XPoly":
        """Return ``p(r*x)``."""
        r = Fraction(r)
        out, rk = [], Fraction(1)
        for c in self._c:
            out.append(c * rk)
            rk *= r
        return XPoly(out)

    def shift_expand(self) -> dict:
        """Return ``p(x + y)`` as a dict ``{(i, j): coeff}`` of nonzero terms."""
        out: dict = {}
        for d, c in enumerate(self._c):
            if not c:
                continue
            for i in range(d + 1):
                key = (i, d - i)
                out[key] = out.get(key, 0) + c * comb(d, i)
        return {k: v for k, v in out.items() if v}


def format_poly(coeffs: Sequence[Fraction], var: str) -> str:
    """Render coefficients (lowest power first) as ``"1 + 1/2·x²"``."""
    parts = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        if k == 0:
            mono = ""
        elif k == 1:
            mono = var
        else:
            mono = var + str(k).translate(_SUPERSCRIPTS)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}·{mono}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts) if parts else "0"
