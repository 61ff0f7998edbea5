from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vandermonde import QQ, QQX, TruncSeries, XPoly, coeff, series_add, series_exp
from vandermonde import series_inv, series_log, series_mul, series_pow
from vandermonde.errors import (
    ConstantTermNotOne,
    IndexBeyondTruncation,
    NonInvertibleConstant,
    NonzeroConstantTerm,
    RingMismatch,
)
from vandermonde.series import exp_t, log1p_t, t_series

from conftest import series
from oracles import exp_coeffs, list_compose, list_mul, mercator_coeffs

F = Fraction


def S(*coeffs):
    return TruncSeries(coeffs)


class TestAdd:
    def test_coefficientwise(self):
        assert series_add(S(1, 1, 0, 0), S(0, 1, 1, 0)) == S(1, 2, 1, 0)

    def test_zero_is_identity(self):
        a = S(3, F(1, 2), -1)
        assert series_add(a, TruncSeries.zero(2)) == a

    def test_truncates_to_min_order(self):
        out = series_add(TruncSeries.from_poly([1, 1], 5), S(1, 0, 0))
        assert out == S(2, 1, 0)
        assert out.order == 2

    def test_rings_do_not_mix(self):
        with pytest.raises(RingMismatch):
            series_add(S(1, 0), TruncSeries([1, 0], QQX))


class TestMul:
    def test_difference_of_squares(self):
        assert series_mul(S(1, 1, 0, 0, 0), S(1, -1, 0, 0, 0)) == S(1, 0, -1, 0, 0)

    def test_square(self):
        assert S(1, 1, 0) * S(1, 1, 0) == S(1, 2, 1)

    def test_exp_times_exp_minus(self):
        minus = TruncSeries(c * (-1) ** n for n, c in enumerate(exp_coeffs(6)))
        expected = list_mul(exp_coeffs(6), list(minus), 6)
        out = series_mul(exp_t(6), minus)
        assert list(out) == expected == [1, 0, 0, 0, 0, 0, 0]

    def test_truncates_to_min_order(self):
        assert series_mul(TruncSeries.from_poly([1, 1], 6), S(1, 1)).order == 1


class TestExpLog:
    def test_exp_t(self):
        assert series_exp(t_series(4)) == S(1, 1, F(1, 2), F(1, 6), F(1, 24))

    def test_exp_zero(self):
        assert series_exp(TruncSeries.zero(3)) == TruncSeries.one(3)

    def test_exp_of_log1p_matches_composition_oracle(self):
        expected = list_compose(exp_coeffs(6), mercator_coeffs(6), 6)
        assert list(series_exp(log1p_t(6))) == expected
        assert series_exp(log1p_t(6)) == TruncSeries.from_poly([1, 1], 6)

    def test_log1p(self):
        assert series_log(S(1, 1, 0, 0, 0)) == S(0, 1, F(-1, 2), F(1, 3), F(-1, 4))

    def test_log_one(self):
        assert series_log(TruncSeries.one(5)) == TruncSeries.zero(5)

    def test_log_of_exp_t_squared(self):
        t2 = TruncSeries.from_poly([0, 0, 1], 6)
        e = series_exp(t2)
        shifted = [0] + list(e)[1:]
        assert list(series_log(e)) == list_compose(mercator_coeffs(6), shifted, 6)
        assert series_log(e) == t2

    def test_exp_rejects_constant_term(self):
        with pytest.raises(NonzeroConstantTerm, match="nilpotent"):
            series_exp(S(1, 1))

    def test_log_rejects_constant_term(self):
        with pytest.raises(ConstantTermNotOne):
            series_log(S(2, 1))

    def test_exp_over_polynomial_ring(self):
        # exp(x t) = sum x^n t^n / n!
        xt = TruncSeries([0, XPoly.x(), 0, 0], QQX)
        out = series_exp(xt)
        assert out[3] == XPoly([0, 0, 0, F(1, 6)])
        assert series_log(out) == xt


class TestPowAndCoeff:
    def test_binomial_cube(self):
        assert series_pow(S(1, 1, 0, 0), 3) == S(1, 3, 3, 1)

    def test_zeroth_power(self):
        assert series_pow(S(5, 2, 7), 0) == TruncSeries.one(2)

    def test_nonunit_constant(self):
        assert series_pow(S(2, 1, 0), 2) == S(4, 4, 1)

    def test_coeff(self):
        assert coeff(S(1, 2, 3), 1) == 2
        assert coeff(log1p_t(4), 3) == F(1, 3)
        assert coeff(exp_t(6), 5) == F(1, 120)

    def test_coeff_beyond_truncation(self):
        with pytest.raises(IndexBeyondTruncation):
            coeff(S(1, 2, 3), 3)
        with pytest.raises(IndexBeyondTruncation):
            S(1, 2)[5]

    def test_inverse(self):
        geo = series_inv(S(1, -1, 0, 0, 0))
        assert geo == S(1, 1, 1, 1, 1)
        with pytest.raises(NonInvertibleConstant):
            series_inv(S(0, 1))


class TestEquality:
    def test_plain_equality_needs_equal_orders(self):
        assert S(1, 2) != S(1, 2, 0)
        assert S(1, 2).prefix_equal(S(1, 2, 0))
        assert not S(1, 2).prefix_equal(S(1, 3, 0))

    def test_immutability(self):
        a = S(1, 2)
        with pytest.raises(AttributeError):
            a.order = 5


# -- properties ----------------------------------------------------------------

orders = st.integers(0, 8)


@given(st.data(), orders)
def test_ring_axioms(data, n):
    a, b, c = (data.draw(series(n)) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(st.data(), st.integers(0, 16))
def test_log_exp_round_trip(data, n):
    a = data.draw(series(n, const=0))
    assert series_log(series_exp(a)) == a


@given(st.data(), st.integers(0, 16))
def test_exp_log_round_trip(data, n):
    b = data.draw(series(n, const=1))
    assert series_exp(series_log(b)) == b


@given(st.data(), orders)
def test_exp_is_a_homomorphism(data, n):
    a, b = data.draw(series(n, const=0)), data.draw(series(n, const=0))
    assert series_exp(a + b) == series_exp(a) * series_exp(b)


@given(st.data(), orders, st.integers(0, 6))
def test_pow_matches_iterated_multiplication(data, n, k):
    a = data.draw(series(n))
    expected = [1] + [0] * n
    for _ in range(k):
        expected = list_mul(expected, list(a), n)
    assert list(series_pow(a, k)) == expected


@given(st.data(), orders)
def test_inverse(data, n):
    a = data.draw(series(n, nonzero_const=True))
    assert a * series_inv(a) == TruncSeries.one(n)
