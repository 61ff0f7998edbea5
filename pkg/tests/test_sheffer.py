from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vandermonde import (
    FamilyTriple,
    PolyFamily,
    ShefferSpec,
    TruncSeries,
    XPoly,
    check_diagonal_convolution,
    check_generalized_convolution,
    check_sheffer_identity,
    diagonal_completion,
    family_from_psi,
    recover_psi,
    recover_sheffer_spec,
    to_sheffer_sequence,
    triple_from_spec,
)
from vandermonde.errors import InvalidSpec, NonInvertibleConstant, NotGeneralizedFamily
from vandermonde.series import log1p_t, t_series

from conftest import series
from oracles import binomial_poly, exp_coeffs, list_mul

F = Fraction
x = XPoly.x()


def S(*coeffs):
    return TruncSeries(coeffs)


def binomial_family(order):
    return PolyFamily(XPoly(binomial_poly(n)) for n in range(order + 1))


class TestTripleFromSpec:
    def test_unit_prefactors_give_one_family(self):
        one = TruncSeries.one(6)
        triple = triple_from_spec(ShefferSpec(one, one, log1p_t(6)), 6)
        assert triple.f == triple.g == triple.h == binomial_family(6)

    def test_one_plus_t(self):
        # (1 + t) e^{xt}: [t^n] = x^n/n! + x^(n-1)/(n-1)!
        triple = triple_from_spec(ShefferSpec(S(1, 1, 0), S(1, 0, 0), S(0, 1, 0)), 2)
        assert list(triple.f) == [XPoly.one(), x + 1, x * x / 2 + x]
        assert list(triple.g) == [XPoly.one(), x, x * x / 2]
        assert triple.h == triple.f

    def test_one_plus_t_against_convolution_oracle(self):
        n = 5
        triple = triple_from_spec(ShefferSpec(S(1, 1, *[0] * (n - 1)), TruncSeries.one(n), t_series(n)), n)
        # coefficient of x^k in f_n is [t^(n-k)] (1 + t) / k!
        for m in range(n + 1):
            for k in range(m + 1):
                expected = list_mul([1, 1], [1] + [0] * n, n)[m - k] * exp_coeffs(n)[k]
                assert triple.f[m][k] == expected

    def test_trivial(self):
        one = TruncSeries.one(3)
        triple = triple_from_spec(ShefferSpec(one, one, TruncSeries.zero(3)), 3)
        assert list(triple.h) == [XPoly.one()] + [XPoly.zero()] * 3

    def test_invalid_specs(self):
        with pytest.raises(InvalidSpec):
            triple_from_spec(ShefferSpec(S(0, 1), S(1, 0), S(0, 1)), 1)
        with pytest.raises(InvalidSpec):
            triple_from_spec(ShefferSpec(S(1, 1), S(1, 0), S(1, 1)), 1)
        with pytest.raises(InvalidSpec):
            triple_from_spec(ShefferSpec(S(1, 1), S(1, 0), S(0, 1)), 3)


class TestRecoverSpec:
    def test_round_trip(self):
        n = 8
        A = TruncSeries.from_poly([1, 1], n)
        B = TruncSeries.from_poly([1, -1], n)
        psi = TruncSeries.from_poly([0, 1, 0, 1], n)
        assert recover_sheffer_spec(triple_from_spec(ShefferSpec(A, B, psi), n)) == ShefferSpec(A, B, psi)

    def test_binomial(self):
        fam = binomial_family(6)
        spec = recover_sheffer_spec(FamilyTriple(fam, fam, fam))
        assert spec == ShefferSpec(TruncSeries.one(6), TruncSeries.one(6), log1p_t(6))

    def test_perturbed_h2(self):
        fam = binomial_family(4)
        bad = FamilyTriple(fam, fam, fam.replace(2, fam[2] + x))
        with pytest.raises(NotGeneralizedFamily):
            recover_sheffer_spec(bad)
        result = check_generalized_convolution(bad)
        assert not result and result.witness == 2

    def test_non_unit_constants(self):
        n = 5
        spec = ShefferSpec(TruncSeries.from_poly([3, 1], n), TruncSeries.from_poly([F(-1, 2), 0, 2], n),
                           TruncSeries.from_poly([0, 2, 1], n))
        assert recover_sheffer_spec(triple_from_spec(spec, n)) == spec

    def test_zero_constant(self):
        fam = binomial_family(2)
        zero = PolyFamily([0, 0, 0])
        with pytest.raises(NonInvertibleConstant):
            recover_sheffer_spec(FamilyTriple(zero, fam, fam))

    def test_h_constant_must_be_product(self):
        fam = binomial_family(2)
        with pytest.raises(NotGeneralizedFamily):
            recover_sheffer_spec(FamilyTriple(fam, fam, PolyFamily(p * 2 for p in fam)))

    def test_mismatched_psi(self):
        a, b = binomial_family(3), family_from_psi(t_series(3), 3)
        with pytest.raises(NotGeneralizedFamily):
            recover_sheffer_spec(FamilyTriple(a, b, a))

    def test_orders_must_agree(self):
        with pytest.raises(ValueError):
            FamilyTriple(binomial_family(2), binomial_family(3), binomial_family(3))


class TestDiagonalOnly:
    def test_vandermonde(self):
        fam = binomial_family(6)
        assert check_generalized_convolution(FamilyTriple(fam, fam, fam))

    def test_diagonal_completion_is_not_enough(self):
        f = PolyFamily([1, x * x])
        g = PolyFamily([1, 0])
        triple = diagonal_completion(f, g)
        assert triple.h[1] == x * x / 4
        assert check_diagonal_convolution(triple)
        result = check_generalized_convolution(triple)
        assert not result
        assert result.witness == 1
        with pytest.raises(NotGeneralizedFamily):
            recover_sheffer_spec(triple)


class TestShefferSequence:
    def test_falling_factorial(self):
        fam = binomial_family(5)
        big = to_sheffer_sequence(FamilyTriple(fam, fam, fam))
        falling = XPoly.one()
        for n in range(6):
            assert big.f[n] == falling
            falling = falling * (x - n)
        assert check_sheffer_identity(big)

    def test_zero_triple(self):
        zero = PolyFamily([0, 0, 0])
        assert to_sheffer_sequence(FamilyTriple(zero, zero, zero)) == FamilyTriple(zero, zero, zero)

    def test_one_plus_t(self):
        triple = triple_from_spec(ShefferSpec(S(1, 1, 0), S(1, 0, 0), S(0, 1, 0)), 2)
        big = to_sheffer_sequence(triple)
        assert (big.f[1], big.g[1], big.h[1]) == (x + 1, x, x + 1)


# -- properties ----------------------------------------------------------------

@st.composite
def specs(draw, order):
    return ShefferSpec(
        draw(series(order, nonzero_const=True)),
        draw(series(order, nonzero_const=True)),
        draw(series(order, const=0)),
    )


@given(st.data(), st.integers(0, 6))
def test_round_trip(data, n):
    spec = data.draw(specs(n))
    triple = triple_from_spec(spec, n)
    assert recover_sheffer_spec(triple) == spec
    assert check_generalized_convolution(triple)
    assert check_sheffer_identity(to_sheffer_sequence(triple))


@given(st.data(), st.integers(0, 6))
def test_unit_prefactors_reduce_to_convolution(data, n):
    psi = data.draw(series(n, const=0))
    one = TruncSeries.one(n)
    triple = triple_from_spec(ShefferSpec(one, one, psi), n)
    assert triple.f == triple.g == triple.h == family_from_psi(psi, n)
    assert recover_psi(triple.f) == psi


@given(st.data(), st.integers(1, 5))
def test_diagonal_completion_always_passes_the_diagonal(data, n):
    f = family_from_psi(data.draw(series(n, const=0)), n)
    g = family_from_psi(data.draw(series(n, const=0)), n)
    assert check_diagonal_convolution(diagonal_completion(f, g))
