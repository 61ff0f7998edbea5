"""JSON and TSV encodings.

Rationals are written as ``"p/q"`` in lowest terms (``"p"`` when q = 1), which
is exactly ``str(Fraction)``.  Parsing is strict: only canonical strings are
accepted, so ``dumps(loads(s)) == s`` for every document this module emits.

Document shapes::

    series       {"order": N, "coeffs": ["p/q", ...]}                  (N+1 entries)
    family       {"order": N, "entries": [{"coeffs": [...], "poly": "..."}, ...]}
                 (entry n lists x^0..x^n; "poly" is display-only and optional)
    block        {"rows": R, "cols": C, "data": [["p/q", ...], ...]}
    sheffer      {"A": series, "B": series, "psi": series}
    triple       {"f": family, "g": family, "h": family}
    row spec     {"f": series, "g": series, "h": series}
    matrices     {"A": block, "B": block, "C": block}
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .convolution import PolyFamily
from .pascal import MatrixBlock, RowSeriesSpec
from .series import TruncSeries
from .sheffer import FamilyTriple, ShefferSpec
from .xpoly import XPoly

_RATIONAL = re.compile(r"-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?")


class FormatError(ValueError):
    """Malformed or non-canonical input document."""


def rational_to_str(q: Fraction) -> str:
    return str(q)


def rational_from_str(s: Any) -> Fraction:
    if not isinstance(s, str) or not _RATIONAL.fullmatch(s):
        raise FormatError(f"expected a rational string 'p/q', got {s!r}")
    q = Fraction(s)
    if str(q) != s:
        raise FormatError(f"rational {s!r} is not in lowest terms (write {q})")
    return q


def _need(doc: Any, *keys: str) -> dict:
    if not isinstance(doc, dict):
        raise FormatError(f"expected a JSON object with keys {keys}, got {type(doc).__name__}")
    missing = [k for k in keys if k not in doc]
    if missing:
        raise FormatError(f"missing key(s) {missing}")
    return doc


def _count(value: Any, name: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise FormatError(f"{name} must be a nonnegative integer")
    return value


def _rationals(values: Any, name: str) -> list:
    if not isinstance(values, list):
        raise FormatError(f"{name} must be a list")
    return [rational_from_str(v) for v in values]


# -- series ------------------------------------------------------------------

def series_to_doc(s: TruncSeries) -> dict:
    return {"order": s.order, "coeffs": [rational_to_str(c) for c in s.coeffs]}


def series_from_doc(doc: Any) -> TruncSeries:
    _need(doc, "order", "coeffs")
    order = _count(doc["order"], "order")
    coeffs = _rationals(doc["coeffs"], "coeffs")
    if len(coeffs) != order + 1:
        raise FormatError(f"order {order} needs {order + 1} coefficients, got {len(coeffs)}")
    return TruncSeries(coeffs)


# -- families ----------------------------------------------------------------

def _poly_to_doc(p: XPoly, n: int) -> dict:
    coeffs = list(p.coeffs) + [Fraction(0)] * max(0, n + 1 - len(p.coeffs))
    return {"coeffs": [rational_to_str(c) for c in coeffs], "poly": str(p)}


def family_to_doc(fam: PolyFamily) -> dict:
    return {"order": fam.order,
            "entries": [_poly_to_doc(p, n) for n, p in enumerate(fam)]}


def family_from_doc(doc: Any) -> PolyFamily:
    _need(doc, "order", "entries")
    order = _count(doc["order"], "order")
    entries = doc["entries"]
    if not isinstance(entries, list) or len(entries) != order + 1:
        raise FormatError(f"order {order} needs {order + 1} entries")
    polys = []
    for n, e in enumerate(entries):
        coeffs = _rationals(_need(e, "coeffs")["coeffs"], f"entries[{n}].coeffs")
        if len(coeffs) < n + 1:
            raise FormatError(f"entries[{n}] must list x^0..x^{n}")
        if len(coeffs) > n + 1 and coeffs[-1] == 0:
            raise FormatError(f"entries[{n}] has trailing zeros beyond x^{n}")
        p = XPoly(coeffs)
        # "poly" is a readable echo of the coefficients; optional on input
        if "poly" in e and e["poly"] != str(p):
            raise FormatError(f"entries[{n}].poly {e['poly']!r} disagrees with its coeffs ({p})")
        polys.append(p)
    return PolyFamily(polys)


# -- Sheffer -----------------------------------------------------------------

def sheffer_spec_to_doc(spec: ShefferSpec) -> dict:
    return {"A": series_to_doc(spec.A), "B": series_to_doc(spec.B),
            "psi": series_to_doc(spec.psi)}


def sheffer_spec_from_doc(doc: Any) -> ShefferSpec:
    _need(doc, "A", "B", "psi")
    return ShefferSpec(series_from_doc(doc["A"]), series_from_doc(doc["B"]),
                       series_from_doc(doc["psi"]))


def triple_to_doc(triple: FamilyTriple) -> dict:
    return {k: family_to_doc(getattr(triple, k)) for k in "fgh"}


def triple_from_doc(doc: Any) -> FamilyTriple:
    _need(doc, "f", "g", "h")
    try:
        return FamilyTriple(*(family_from_doc(doc[k]) for k in "fgh"))
    except ValueError as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(str(exc)) from None


# -- matrices ----------------------------------------------------------------

def block_to_doc(m: MatrixBlock) -> dict:
    return {"rows": m.rows, "cols": m.cols,
            "data": [[rational_to_str(v) for v in row] for row in m.data]}


def block_from_doc(doc: Any) -> MatrixBlock:
    _need(doc, "rows", "cols", "data")
    rows, cols = _count(doc["rows"], "rows"), _count(doc["cols"], "cols")
    data = doc["data"]
    if not isinstance(data, list) or len(data) != rows or rows == 0:
        raise FormatError(f"data must hold {rows} rows (at least one)")
    parsed = [_rationals(r, f"data[{i}]") for i, r in enumerate(data)]
    if cols == 0 or any(len(r) != cols for r in parsed):
        raise FormatError(f"every row must hold {cols} entries (at least one)")
    return MatrixBlock(parsed)


def matrices_to_doc(a: MatrixBlock, b: MatrixBlock, c: MatrixBlock) -> dict:
    return {"A": block_to_doc(a), "B": block_to_doc(b), "C": block_to_doc(c)}


def matrices_from_doc(doc: Any) -> tuple:
    """A triple document, or a single block standing for ``A = B = C``."""
    if isinstance(doc, dict) and "data" in doc:
        m = block_from_doc(doc)
        return m, m, m
    _need(doc, "A", "B", "C")
    return tuple(block_from_doc(doc[k]) for k in "ABC")


def row_spec_to_doc(spec: RowSeriesSpec) -> dict:
    return {k: series_to_doc(getattr(spec, k)) for k in "fgh"}


def row_spec_from_doc(doc: Any) -> RowSeriesSpec:
    _need(doc, "f", "g", "h")
    return RowSeriesSpec(*(series_from_doc(doc[k]) for k in "fgh"))


def block_to_tsv(m: MatrixBlock) -> str:
    return "".join("\t".join(rational_to_str(v) for v in row) + "\n" for row in m.data)


def block_from_tsv(text: str) -> MatrixBlock:
    rows = [line.split("\t") for line in text.splitlines() if line.strip()]
    if not rows:
        raise FormatError("empty TSV block")
    if any(len(r) != len(rows[0]) for r in rows):
        raise FormatError("ragged TSV block")
    return MatrixBlock([[rational_from_str(v) for v in r] for r in rows])


def table_to_tsv(rows: list) -> str:
    return "".join("\t".join(rational_to_str(Fraction(v)) for v in r) + "\n" for r in rows)


# -- text helpers ------------------------------------------------------------

def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
