import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from vandermonde import TruncSeries

settings.register_profile(
    "default", max_examples=40, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def small_rationals(nonzero=False):
    """Numerators in [-9, 9], denominators in [1, 9]."""
    q = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))
    return q.filter(bool) if nonzero else q


@st.composite
def series(draw, order, const=None, nonzero_const=False):
    coeffs = draw(st.lists(small_rationals(), min_size=order + 1, max_size=order + 1))
    if const is not None:
        coeffs[0] = Fraction(const)
    elif nonzero_const:
        coeffs[0] = draw(small_rationals(nonzero=True))
    return TruncSeries(coeffs)


def random_rational(rng: random.Random, nonzero=False) -> Fraction:
    while True:
        q = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if q or not nonzero:
            return q


def random_series(rng: random.Random, order: int, const=None, nonzero_const=False) -> TruncSeries:
    coeffs = [random_rational(rng) for _ in range(order + 1)]
    if const is not None:
        coeffs[0] = Fraction(const)
    elif nonzero_const:
        coeffs[0] = random_rational(rng, nonzero=True)
    return TruncSeries(coeffs)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
