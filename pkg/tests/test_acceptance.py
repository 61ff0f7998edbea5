"""Acceptance criteria, all exact (tolerance 0).

Each test records one PASS/FAIL line; the lines are printed in the pytest
terminal summary, or directly when this file is run as a script.
"""

import random
from fractions import Fraction
from math import comb, factorial

from vandermonde import (
    ZERO_FAMILY,
    MatrixBlock,
    PolyFamily,
    RowSeriesSpec,
    ShefferSpec,
    TruncSeries,
    XPoly,
    builtin_psi,
    check_convolution,
    check_diagonal_convolution,
    check_generalized_convolution,
    check_matrix_identity,
    check_multinomial,
    check_weak_convolution,
    classify_nogo,
    column_interpolation_bridge,
    diagonal_completion,
    family_from_psi,
    matrices_from_spec,
    recover_psi,
    recover_row_spec,
    recover_sheffer_spec,
    riordan_array,
    series_log,
    triple_from_spec,
)
from vandermonde.errors import NotPascalLike
from vandermonde.series import log1p_t

from conftest import random_series
from oracles import bell_number, binomial_poly, eval_poly, pascal_entry, stirling2

F = Fraction
RESULTS = []
SEED = 20240611


def record(number, title, ok, detail=""):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}"
    if detail:
        line += f"  [{detail}]"
    RESULTS.append(line)
    print(line)
    assert ok, line


def test_criterion_1_chu_vandermonde():
    fam = family_from_psi(log1p_t(10), 10)
    matches_oracle = all(fam[n] == XPoly(binomial_poly(n)) for n in range(11))
    identity = check_convolution(fam)
    spot = [sum(comb(3, k) * comb(2, n - k) for k in range(n + 1)) for n in range(6)]
    library_spot = [
        sum(fam[k](3) * fam[n - k](2) for k in range(n + 1)) for n in range(6)
    ]
    ok = (matches_oracle and bool(identity) and spot == [1, 5, 10, 10, 5, 1]
          and library_spot == spot == [fam[n](5) for n in range(6)])
    record(1, "Chu-Vandermonde for C(x, n), n <= 10", ok,
           f"{identity}; spot check {', '.join(map(str, library_spot))}")


def test_criterion_2_pascal_matrix():
    one = TruncSeries.one(11)
    spec = RowSeriesSpec(one, one, TruncSeries.from_poly([1, 1], 11))
    a, b, c = matrices_from_spec(spec, 12, 12)
    expected = MatrixBlock.from_function(pascal_entry, 12, 12)
    identity = check_matrix_identity(a, b, c)
    ok = a == b == c == expected and bool(identity) and identity.certified == "i+l < 12, n < 12"
    record(2, "Pascal block 12x12 and matrix identity", ok, str(identity))


def test_criterion_3_convolution_round_trip():
    rng = random.Random(SEED)
    failures = []
    for trial in range(100):
        psi = random_series(rng, 16, const=0)
        fam = family_from_psi(psi, 16)
        if recover_psi(fam) != psi:
            failures.append((trial, "round trip"))
        for name, check in (("weak", check_weak_convolution(fam)),
                            ("full", check_convolution(fam)),
                            ("m=3", check_multinomial(fam, 3))):
            if not check:
                failures.append((trial, name))
    record(3, "100 random psi at order 16: round trip, weak, full, m=3", not failures,
           f"failures: {failures[:5]}" if failures else "")


def test_criterion_4_sheffer_round_trip():
    rng = random.Random(SEED + 4)
    failures = []
    for trial in range(100):
        spec = ShefferSpec(random_series(rng, 12, nonzero_const=True),
                           random_series(rng, 12, nonzero_const=True),
                           random_series(rng, 12, const=0))
        triple = triple_from_spec(spec, 12)
        if recover_sheffer_spec(triple) != spec:
            failures.append((trial, "round trip"))
        if not check_generalized_convolution(triple):
            failures.append((trial, "identity"))
    x = XPoly.x()
    counter = diagonal_completion(PolyFamily([1, x * x]), PolyFamily([1, 0]))
    diagonal_only = bool(check_diagonal_convolution(counter)) and not check_generalized_convolution(counter)
    record(4, "100 random Sheffer specs at order 12; diagonal-only counterexample fails",
           not failures and diagonal_only,
           f"failures: {failures[:5]}" if failures else "counterexample fails full check at n=1")


def test_criterion_5_row_series_round_trip():
    rng = random.Random(SEED + 5)
    failures = []
    h0_values = [F(0), F(1), F(2), F(-1, 2)]
    for trial in range(100):
        spec = RowSeriesSpec(random_series(rng, 11, nonzero_const=True),
                             random_series(rng, 11, nonzero_const=True),
                             random_series(rng, 11, const=h0_values[trial % 4]))
        blocks = matrices_from_spec(spec, 10, 12)
        if recover_row_spec(*blocks) != spec:
            failures.append(trial)
    record(5, "100 random row-series specs on 10x12 blocks, h(0) in {0, 1, 2, -1/2}",
           not failures, f"failures: {failures[:5]}" if failures else "")


def test_criterion_6_nogo():
    one = TruncSeries.one(7)
    l, _, _ = matrices_from_spec(RowSeriesSpec(one, one, TruncSeries.from_poly([2, 3], 7)), 8, 8)
    form = classify_nogo(l)
    survivors = []
    positions = [(i, j) for i in range(8) for j in range(i + 1)]
    for i, j in positions:
        try:
            classify_nogo(l.with_entry(i, j, l[i, j] + 1))
        except NotPascalLike:
            continue
        except Exception as exc:  # wrong error type counts as a survivor
            survivors.append((i, j, type(exc).__name__))
        else:
            survivors.append((i, j, "accepted"))
    ok = (form.kappa, form.lam) == (2, 3) and len(positions) == 36 and not survivors
    record(6, "no-go classifier: (kappa, lambda) = (2, 3); all 36 mutations rejected", ok,
           f"survivors: {survivors}" if survivors else form.certified)


def test_criterion_7_bell():
    fam = family_from_psi(builtin_psi("bell", 7), 7)
    bell = [factorial(n) * fam[n](1) for n in range(8)]
    oracle = [bell_number(n) for n in range(8)]
    stirling_ok = all(
        factorial(n) * fam[n][k] == stirling2(n, k) for n in range(8) for k in range(n + 2)
    )
    record(7, "Bell numbers and Stirling numbers for n <= 7 against set-partition enumeration",
           bell == oracle and stirling_ok, ", ".join(map(str, bell)))


def test_criterion_8_bridge():
    one = TruncSeries.one(8)
    h = TruncSeries.from_poly([1, 1, 1], 8)
    spec = RowSeriesSpec(one, one, h)
    report = column_interpolation_bridge(spec, 8, 8)
    a, _, _ = matrices_from_spec(spec, 9, 9)
    entries_ok = all(eval_poly(report.f[n].coeffs, i) == a[i, n] for i in range(9) for n in range(9))
    psi = recover_psi(report.f)
    ok = entries_ok and psi is not ZERO_FAMILY and psi == series_log(h)
    record(8, "bridge for h = 1 + u + u^2 at order 8; recovered psi is log h", ok, report.certified)


def test_criterion_9_riordan_transpose():
    rng = random.Random(SEED + 9)
    failures = []
    nonzero_h0 = 0
    for trial in range(20):
        f = random_series(rng, 9, nonzero_const=True)
        h = random_series(rng, 9, const=None if trial % 2 else 0)
        nonzero_h0 += h[0] != 0
        a, _, _ = matrices_from_spec(RowSeriesSpec(f, TruncSeries.one(9), h), 10, 10)
        if riordan_array(f, h, 10, 10) != a.transpose():
            failures.append(trial)
    record(9, "20 random Riordan arrays equal the transposed A-block", not failures and nonzero_h0 > 0,
           f"failures: {failures}" if failures else f"{nonzero_h0} with h(0) != 0")


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
