import math
from fractions import Fraction

import pytest
from hypothesis import given, settings

from src.modules.exceptions import DomainError, InputError, ParseError, ResourceError
from src.modules.magnitude import (
    INFINITY, ONE, ZERO, Magnitude, Ordering,
    mag_compare, mag_div, mag_max, mag_mul, mag_pow, mag_to_float, magnitude_from_json,
    magnitude_of_valuation, magnitude_to_json, padic_magnitude, parse_rational,
    valexp_from_json, valexp_to_json, valuation_of_magnitude, vp,
)
from tests.strategies import magnitudes, primes, rationals


def pp(p, e):
    return Magnitude.prime_power(p, Fraction(e))


class TestValuation:
    def test_examples(self):
        assert vp(50, 5) == 2
        assert vp(1, 5) == 0
        assert vp(0, 5) is INFINITY
        assert vp(Fraction(75, 8), 5) == 2
        assert vp(Fraction(8, 75), 5) == -2

    def test_non_prime(self):
        with pytest.raises(InputError):
            vp(50, 4)
        with pytest.raises(InputError):
            padic_magnitude(3, 1)

    def test_padic_magnitude(self):
        assert padic_magnitude(5, 5) == pp(5, -1)
        assert padic_magnitude(0, 5) is ZERO
        assert padic_magnitude(Fraction(75, 8), 5) == pp(5, -2)
        assert padic_magnitude(7, 5) == ONE

    def test_infinity(self):
        assert INFINITY + Fraction(3) is INFINITY
        assert Fraction(3) + INFINITY is INFINITY
        assert INFINITY > Fraction(10**9)
        assert Fraction(10**9) < INFINITY
        assert min(INFINITY, Fraction(2)) == 2


class TestArithmetic:
    def test_mul(self):
        assert mag_mul(pp(5, Fraction(-1, 2)), pp(5, Fraction(-1, 2))) == pp(5, -1)
        assert mag_mul(ZERO, pp(2, Fraction(1, 4))) is ZERO
        a = Magnitude.from_factors({2: Fraction(1, 4), 5: -1})
        b = Magnitude.from_factors({2: Fraction(-1, 4), 5: -1})
        assert mag_mul(a, b) == pp(5, -2)
        assert (a * b).factors == ((5, Fraction(-2)),)

    def test_pow(self):
        assert mag_pow(pp(5, -1), Fraction(1, 2)) == pp(5, Fraction(-1, 2))
        assert mag_pow(ZERO, Fraction(1, 2)) is ZERO
        with pytest.raises(DomainError):
            mag_pow(ZERO, -1)
        with pytest.raises(DomainError):
            mag_pow(ZERO, 0)

    def test_div(self):
        assert mag_div(pp(5, -1), pp(5, -1)) == ONE
        assert mag_div(ZERO, pp(3, 1)) is ZERO
        with pytest.raises(DomainError):
            mag_div(ONE, ZERO)

    def test_from_rational(self):
        assert Magnitude.from_rational(Fraction(12, 5)) == Magnitude.from_factors({2: 2, 3: 1, 5: -1})
        assert Magnitude.from_rational(0) is ZERO
        assert Magnitude.from_rational(1) == ONE
        with pytest.raises(DomainError):
            Magnitude.from_rational(-2)

    def test_zero_exponents_dropped(self):
        assert Magnitude.from_factors({5: 0, 2: 1}).factors == ((2, Fraction(1)),)
        assert Magnitude.from_factors({}) == ONE

    @given(magnitudes(), rationals(max_abs=20), rationals(max_abs=20))
    def test_pow_is_additive_in_exponent(self, m, a, b):
        assert mag_pow(m, a + b) == mag_mul(mag_pow(m, a), mag_pow(m, b))


class TestCompare:
    def test_examples(self):
        assert mag_compare(pp(5, Fraction(-1, 2)), ONE) is Ordering.LESS
        assert mag_compare(pp(2, Fraction(1, 2)), pp(5, Fraction(1, 5))) is Ordering.GREATER
        assert mag_compare(ZERO, ZERO) is Ordering.EQUAL
        assert mag_compare(ZERO, pp(7, -100)) is Ordering.LESS
        assert mag_compare(ONE, ZERO) is Ordering.GREATER

    def test_operators(self):
        assert pp(5, -1) < ONE <= ONE
        assert pp(2, Fraction(1, 1024)) > ONE
        assert ZERO < pp(3, -50)

    def test_overflow_guard(self):
        with pytest.raises(ResourceError):
            mag_compare(pp(2, 2000001), ONE)
        with pytest.raises(ResourceError):
            mag_compare(pp(2, Fraction(1, 7)), pp(3, Fraction(1, 11)), bound=10)

    def test_max(self):
        assert mag_max([]) is ZERO
        assert mag_max([pp(5, -1), ONE, ZERO]) == ONE
        assert mag_max([pp(2, Fraction(1, 2)), pp(5, Fraction(1, 5))]) == pp(2, Fraction(1, 2))

    @given(magnitudes(), magnitudes())
    def test_agrees_with_float(self, a, b):
        log_a = sum(float(e) * math.log(p) for p, e in a.factors)
        log_b = sum(float(e) * math.log(p) for p, e in b.factors)
        if abs(log_a - log_b) > 1e-9:
            expected = Ordering.GREATER if log_a > log_b else Ordering.LESS
            assert mag_compare(a, b) is expected


class TestPadicProperties:
    @settings(max_examples=200)
    @given(rationals(), rationals(), primes)
    def test_multiplicative(self, x, y, p):
        assert padic_magnitude(x * y, p) == mag_mul(padic_magnitude(x, p), padic_magnitude(y, p))

    @settings(max_examples=200)
    @given(rationals(), rationals(), primes)
    def test_strong_triangle(self, x, y, p):
        assert padic_magnitude(x + y, p) <= mag_max([padic_magnitude(x, p), padic_magnitude(y, p)])


class TestDictionary:
    def test_examples(self):
        assert magnitude_of_valuation(Fraction(3, 2), 5) == pp(5, Fraction(-3, 2))
        assert magnitude_of_valuation(INFINITY, 5) is ZERO
        assert magnitude_of_valuation(-2, 5) == pp(5, 2)
        assert valuation_of_magnitude(pp(5, -2), 5) == 2
        assert valuation_of_magnitude(ZERO, 5) is INFINITY
        assert valuation_of_magnitude(ONE, 5) == 0

    def test_multi_prime(self):
        with pytest.raises(DomainError):
            valuation_of_magnitude(Magnitude.from_factors({2: 1, 5: -1}), 5)
        with pytest.raises(DomainError):
            valuation_of_magnitude(pp(3, 1), 5)

    @given(rationals(max_abs=1000), primes)
    def test_round_trip(self, v, p):
        assert valuation_of_magnitude(magnitude_of_valuation(v, p), p) == v


class TestFloatAndJson:
    def test_to_float(self):
        assert mag_to_float(pp(5, -1)) == pytest.approx(0.2, abs=1e-15)
        assert mag_to_float(ZERO) == 0.0
        assert abs(mag_to_float(pp(5, Fraction(-1, 2))) - 0.4472135954999579) < 1e-12
        assert mag_to_float(pp(2, 10**6)) == math.inf

    def test_to_float_exponent_beyond_float_range(self):
        assert mag_to_float(pp(2, 10**400)) == math.inf
        assert mag_to_float(pp(2, -10**400)) == 0.0
        assert mag_to_float(Magnitude.from_factors({2: 10**400, 3: -1})) == math.inf
        assert mag_to_float(Magnitude.from_factors({2: -10**400, 3: 10**399})) == 0.0

    def test_json(self):
        m = Magnitude.from_factors({5: Fraction(-1, 2), 2: Fraction(1, 4)})
        assert magnitude_to_json(m) == {"factors": {"2": "1/4", "5": "-1/2"}}
        assert magnitude_to_json(ZERO) == {"zero": True}
        assert magnitude_to_json(ONE) == {"factors": {}}
        assert magnitude_from_json({"factors": {"2": "1/4", "5": "-1/2"}}) == m
        assert magnitude_from_json("2") == pp(2, 1)
        assert valexp_to_json(INFINITY) == "inf"
        assert valexp_from_json("inf") is INFINITY
        assert valexp_from_json("-3/2") == Fraction(-3, 2)
        with pytest.raises(ParseError):
            magnitude_from_json([1, 2])

    def test_parse_rational(self):
        assert parse_rational(" -3/6 ") == Fraction(-1, 2)
        with pytest.raises(ParseError):
            parse_rational("1/0")
        with pytest.raises(ParseError):
            parse_rational("abc")
