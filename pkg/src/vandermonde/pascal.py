"""Pascal-like matrix triples, wide-sense Riordan arrays and the no-go theorem.

Matrices ``A, B, C`` with ``sum_j a[i][j] b[l][n-j] == c[i+l][n]`` and
invertible corners are exactly those whose row-generating series are
``A_i = f h**i``, ``B_i = g h**i``, ``C_i = f g h**i``.  Infinite matrices are
represented by finite :class:`MatrixBlock` truncations; every check only
quantifies over indices the block actually contains and says which.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Sequence

from .convolution import PolyFamily
from .errors import (
    CornerNotOne,
    FormViolation,
    HNotUnitConstant,
    HypothesesNotMet,
    InsufficientOrder,
    NonInvertibleCorner,
    NotPascalLike,
    RowOutOfRange,
)
from .series import TruncSeries, series_inv, series_log, series_mul
from .sheffer import build_triple
from .verification import Verification


class MatrixBlock:
    """Rows ``0..R-1`` by columns ``0..C-1`` of an infinite rational matrix."""

    __slots__ = ("data",)

    def __init__(self, data: Iterable[Iterable]):
        rows = tuple(tuple(Fraction(v) for v in row) for row in data)
        if not rows or not rows[0]:
            raise ValueError("a matrix block needs at least one row and column")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix block")
        self.data = rows

    @classmethod
    def from_function(cls, fn: Callable[[int, int], object], rows: int, cols: int) -> "MatrixBlock":
        return cls([[fn(i, j) for j in range(cols)] for i in range(rows)])

    @classmethod
    def from_row_series(cls, rows: Sequence[TruncSeries], cols: int) -> "MatrixBlock":
        return cls([r.coeffs[:cols] for r in rows])

    @property
    def rows(self) -> int:
        return len(self.data)

    @property
    def cols(self) -> int:
        return len(self.data[0])

    @property
    def shape(self) -> tuple:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple) -> Fraction:
        i, j = ij
        return self.data[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixBlock):
            return NotImplemented
        return self.data == other.data

    def __hash__(self) -> int:
        return hash(self.data)

    def __repr__(self) -> str:
        return f"MatrixBlock({self.rows}x{self.cols})"

    def __str__(self) -> str:
        return "\n".join("\t".join(str(v) for v in row) for row in self.data)

    def transpose(self) -> "MatrixBlock":
        return MatrixBlock(zip(*self.data))

    def with_entry(self, i: int, j: int, value) -> "MatrixBlock":
        data = [list(r) for r in self.data]
        data[i][j] = Fraction(value)
        return MatrixBlock(data)

    def with_row(self, i: int, values: Sequence) -> "MatrixBlock":
        data = [list(r) for r in self.data]
        data[i] = list(values)
        return MatrixBlock(data)


@dataclass(frozen=True)
class RowSeriesSpec:
    f: TruncSeries
    g: TruncSeries
    h: TruncSeries

    @property
    def order(self) -> int:
        return min(self.f.order, self.g.order, self.h.order)

    def truncate(self, order: int) -> "RowSeriesSpec":
        return RowSeriesSpec(self.f.truncate(order), self.g.truncate(order),
                             self.h.truncate(order))


def pascal_block(rows: int, cols: int) -> MatrixBlock:
    """``C(i, j)``."""
    return MatrixBlock.from_function(comb, rows, cols)


def row_series(m: MatrixBlock, i: int) -> TruncSeries:
    """Row ``i`` as a series in u of order ``cols - 1``."""
    if not 0 <= i < m.rows:
        raise RowOutOfRange(f"row {i} outside block with {m.rows} rows")
    return TruncSeries(m.data[i])


def _row_powers(h: TruncSeries, count: int) -> list:
    out = [TruncSeries.one(h.order)]
    for _ in range(1, count):
        out.append(series_mul(out[-1], h))
    return out


def _need_order(cols: int, **series: TruncSeries) -> None:
    for name, s in series.items():
        if s.order < cols - 1:
            raise InsufficientOrder(
                f"{name} has order {s.order}, need at least {cols - 1} for {cols} columns"
            )


def matrices_from_spec(spec: RowSeriesSpec, rows: int, cols: int):
    """Blocks of ``A, B, C`` with row series ``f h^i``, ``g h^i``, ``f g h^i``."""
    _need_order(cols, f=spec.f, g=spec.g, h=spec.h)
    f, g, h = (s.truncate(cols - 1) for s in (spec.f, spec.g, spec.h))
    fg = series_mul(f, g)
    powers = _row_powers(h, rows)
    return tuple(
        MatrixBlock([series_mul(p, hp).coeffs for hp in powers]) for p in (f, g, fg)
    )


def check_matrix_identity(a: MatrixBlock, b: MatrixBlock, c: MatrixBlock) -> Verification:
    """Check ``sum_{j<=n} a[i][j] b[l][n-j] == c[i+l][n]`` wherever the block allows.

    Certified range: all ``i + l < c.rows`` (with ``i < a.rows``, ``l < b.rows``)
    and ``n < cols``.  The first failure in (i, l, n) order is the witness.
    """
    cols = min(a.cols, b.cols, c.cols)
    rows = c.rows
    certified = f"i+l < {rows}, n < {cols}"
    for i in range(min(a.rows, rows)):
        ai = a.data[i]
        for l in range(min(b.rows, rows - i)):
            bl = b.data[l]
            target = c.data[i + l]
            for n in range(cols):
                s = sum(ai[j] * bl[n - j] for j in range(n + 1) if ai[j] and bl[n - j])
                if s != target[n]:
                    return Verification(False, certified, (i, l, n))
    return Verification(True, certified)


def recover_spec(a: MatrixBlock, b: MatrixBlock, c: MatrixBlock) -> RowSeriesSpec:
    """Recover ``(f, g, h)`` as ``(A_0, B_0, A_1/A_0)`` and verify every row.

    Each row n of the blocks must satisfy ``A_n = f h^n``, ``B_n = g h^n``
    and ``C_n = f g h^n`` as series of order ``cols - 1``; otherwise
    :class:`NotPascalLike` is raised naming the first bad row.
    """
    if a.shape != b.shape or a.shape != c.shape:
        raise ValueError(f"shapes differ: {a.shape}, {b.shape}, {c.shape}")
    if a[0, 0] == 0 or b[0, 0] == 0:
        raise NonInvertibleCorner(
            f"a00 = {a[0, 0]}, b00 = {b[0, 0]}; both must be invertible"
        )
    if a.rows < 2:
        raise InsufficientOrder("need at least two rows to determine h")
    f, g = row_series(a, 0), row_series(b, 0)
    h = series_mul(row_series(a, 1), series_inv(f))
    fg = series_mul(f, g)
    for n, hn in enumerate(_row_powers(h, a.rows)):
        for label, m, base in (("A", a, f), ("B", b, g), ("C", c, fg)):
            if row_series(m, n) != series_mul(base, hn):
                raise NotPascalLike(f"row {n} of {label} is not its row 0 times h^{n}")
    return RowSeriesSpec(f, g, h)


def riordan_array(f: TruncSeries, h: TruncSeries, rows: int, cols: int) -> MatrixBlock:
    """Wide-sense Riordan array, entry ``(n, k) = [t^n] f h^k``.

    Lower-triangular when ``h(0) == 0``.  Its transpose is the ``A`` block of
    :func:`matrices_from_spec` with the same ``f`` and ``h``.
    """
    _need_order(rows, f=f, h=h)
    f, h = f.truncate(rows - 1), h.truncate(rows - 1)
    columns = [series_mul(f, hk).coeffs for hk in _row_powers(h, cols)]
    return MatrixBlock([[columns[k][n] for k in range(cols)] for n in range(rows)])


def is_lower_triangular_in_row(m: MatrixBlock, i: int) -> bool:
    if not 0 <= i < m.rows:
        raise RowOutOfRange(f"row {i} outside block with {m.rows} rows")
    return all(v == 0 for v in m.data[i][i + 1:])


def is_lower_triangular(m: MatrixBlock) -> bool:
    return all(is_lower_triangular_in_row(m, i) for i in range(m.rows))


def _scaled_pascal_entry(scale: Fraction, kappa: Fraction, lam: Fraction, i: int, j: int) -> Fraction:
    if j > i:
        return Fraction(0)
    return scale * kappa ** (i - j) * lam ** j * comb(i, j)


@dataclass(frozen=True)
class Corollary4Form:
    """``A_i = alpha h^i``, ``B_i = beta h^i``, ``C_i = alpha beta h^i``.

    When ``kappa`` is set, ``h = kappa + lam u`` and every entry has been
    checked against ``scale * kappa^(i-j) lam^j C(i, j)``.
    """

    alpha: Fraction
    beta: Fraction
    h: TruncSeries
    kappa: Fraction | None = None
    lam: Fraction | None = None

    @property
    def is_scaled_pascal(self) -> bool:
        return self.kappa is not None


def classify_corollary4(a: MatrixBlock, b: MatrixBlock, c: MatrixBlock) -> Corollary4Form:
    failed = [name for name, m in (("A", a), ("B", b)) if not is_lower_triangular_in_row(m, 0)]
    if failed:
        raise HypothesesNotMet(
            f"{' and '.join(failed)} not lower-triangular in row 0"
        )
    if a[0, 0] == 0 or b[0, 0] == 0:
        raise NonInvertibleCorner(f"a00 = {a[0, 0]}, b00 = {b[0, 0]}")
    spec = recover_spec(a, b, c)
    alpha, beta = a[0, 0], b[0, 0]
    if not any(is_lower_triangular_in_row(m, 1) for m in (a, b, c) if m.rows > 1):
        return Corollary4Form(alpha, beta, spec.h)

    h = spec.h
    if any(h.coeffs[2:]):
        raise FormViolation(f"a matrix is lower-triangular in row 1 but h = {h}")
    kappa, lam = h[0], h[1] if h.order >= 1 else Fraction(0)
    for label, m, scale in (("A", a, alpha), ("B", b, beta), ("C", c, alpha * beta)):
        for i in range(m.rows):
            for j in range(m.cols):
                if m[i, j] != _scaled_pascal_entry(scale, kappa, lam, i, j):
                    raise FormViolation(f"{label}[{i}][{j}] = {m[i, j]} breaks the scaled Pascal form")
    return Corollary4Form(alpha, beta, h, kappa, lam)


@dataclass(frozen=True)
class NoGoForm:
    kappa: Fraction
    lam: Fraction
    certified: str


def classify_nogo(l: MatrixBlock) -> NoGoForm:
    """Classify a lower-triangular solution of the single-matrix identity.

    Such a block must be ``kappa^(i-j) lam^j C(i, j)`` with ``l00 == 1``.
    """
    if not is_lower_triangular(l):
        bad = next(i for i in range(l.rows) if not is_lower_triangular_in_row(l, i))
        raise HypothesesNotMet(f"not lower-triangular in row {bad}")
    if l[0, 0] == 0:
        raise NonInvertibleCorner("l00 = 0")
    if l[0, 0] != 1:
        raise CornerNotOne(f"l00 = {l[0, 0]}; an invertible idempotent of Q must be 1")
    check = check_matrix_identity(l, l, l)
    if not check:
        raise NotPascalLike(f"identity fails at (i, l, n) = {check.witness}")
    kappa = l[1, 0] if l.rows > 1 else Fraction(0)
    lam = l[1, 1] if l.rows > 1 and l.cols > 1 else Fraction(0)
    for i in range(l.rows):
        for j in range(l.cols):
            if l[i, j] != _scaled_pascal_entry(Fraction(1), kappa, lam, i, j):
                raise FormViolation(f"l[{i}][{j}] = {l[i, j]} deviates from the kappa, lambda form")
    return NoGoForm(kappa, lam, check.certified)


@dataclass(frozen=True)
class BridgeReport:
    """Polynomial interpolants of the matrix columns, with what was verified."""

    psi: TruncSeries
    f: PolyFamily
    g: PolyFamily
    h: PolyFamily
    n_max: int
    i_max: int

    @property
    def certified(self) -> str:
        return f"0 <= i <= {self.i_max}, 0 <= n <= {self.n_max}"


def column_interpolation_bridge(spec: RowSeriesSpec, n_max: int, i_max: int) -> BridgeReport:
    """Interpolate matrix columns by polynomials in the row index.

    With ``h(0) == 1`` and ``psi = log h``, the Sheffer triple built from
    ``(f, g, psi)`` satisfies ``f_n(i) == a[i][n]`` (and likewise for
    ``g``, ``h`` against ``B``, ``C``).  Both sides are built independently
    and compared entry by entry; a mismatch raises :class:`FormViolation`.
    """
    if spec.h[0] != 1:
        raise HNotUnitConstant(
            f"h(0) = {spec.h[0]}; log h needs h(0) = 1 over the rationals"
        )
    _need_order(n_max + 1, f=spec.f, g=spec.g, h=spec.h)
    spec = spec.truncate(n_max)
    psi = series_log(spec.h)
    triple = build_triple(spec.f, spec.g, psi, n_max)
    blocks = matrices_from_spec(spec, i_max + 1, n_max + 1)
    for label, fam, m in zip("ABC", (triple.f, triple.g, triple.h), blocks):
        for n in range(n_max + 1):
            for i in range(i_max + 1):
                if fam[n](i) != m[i, n]:
                    raise FormViolation(
                        f"{label}: interpolant {n} at i = {i} gives {fam[n](i)}, matrix has {m[i, n]}"
                    )
    return BridgeReport(psi, triple.f, triple.g, triple.h, n_max, i_max)
