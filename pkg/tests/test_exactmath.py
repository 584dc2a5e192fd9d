from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fuchsian_poincare.errors import DenominatorVanishesAtZero, OrderMismatch
from fuchsian_poincare.exactmath import (IntPolynomial, RationalFunction,
                                         TruncatedSeries, format_terms,
                                         poly_arith, series_equal,
                                         series_from_rational)

from oracles import geometric_expansion

P = IntPolynomial


def test_difference_of_squares():
    assert poly_arith(P((1, -1)), P((1, 1)), "mul") == P((1, 0, -1))


def test_annihilation():
    p = P((3, -1, 4))
    assert poly_arith(p, P(), "mul") == P()
    assert poly_arith(p, P(), "mul").degree == -1


def test_direct_expansion():
    assert P.one_minus_t_pow(2) * P.one_minus_t_pow(3) == P((1, 0, -1, -1, 0, 1))


def test_add_sub_and_trailing_zeros():
    a, b = P((1, 2, 3)), P((0, 0, -3))
    assert poly_arith(a, b, "add") == P((1, 2))
    assert poly_arith(a, a, "sub").is_zero()
    assert P((1, 0, 0)).coeffs == (1,)
    with pytest.raises(ValueError):
        poly_arith(a, b, "div")


def test_exact_division():
    num = P.one_minus_t_pow(2) * P.one_minus_t_pow(3)
    assert num.exact_div(P.one_minus_t_pow(1)) == P((1, 1)) * P.one_minus_t_pow(3)
    with pytest.raises(ValueError):
        P((1, 0, 1)).exact_div(P((1, -1)))


def test_geometric_series():
    s = series_from_rational(RationalFunction(P((1,)), P((1, -1))), 4)
    assert s.coeffs == (1, 1, 1, 1, 1)


def test_g2_quotient():
    f = RationalFunction(P((1, 0, 0, 1)), P((1, -1)) ** 2)
    s = series_from_rational(f, 5)
    assert s.integer_coeffs() == [1, 2, 3, 5, 7, 9]
    assert list(s) == geometric_expansion([1, 0, 0, 1], [1, -2, 1], 5)


def test_zero_numerator():
    s = series_from_rational(RationalFunction(P(), P((1, -1))), 3)
    assert s.coeffs == (0, 0, 0, 0) and s.order == 3


def test_denominator_vanishing_at_zero():
    with pytest.raises(DenominatorVanishesAtZero):
        series_from_rational(RationalFunction(P((1,)), P((0, 1))), 3)


def test_non_unit_constant_term_gives_rationals():
    s = series_from_rational(RationalFunction(P((1,)), P((2, -1))), 3)
    assert list(s) == [Fraction(1, 2), Fraction(1, 4), Fraction(1, 8), Fraction(1, 16)]
    assert not s.is_integral()


def test_den_sign_normalized():
    f = RationalFunction(P((1, 1)), P((1, -1)))
    assert f.den == P((-1, 1)) and f.num == P((-1, -1))
    assert series_from_rational(f, 3).integer_coeffs() == [1, 2, 2, 2]


def test_reduced():
    g = P((1, 1, 1))
    f = RationalFunction(P((1, 2)) * g, P((1, -1)) * g)
    r = f.reduced()
    assert r.num.degree == 1 and r.den.degree == 1
    assert r.equals(f)


def test_series_equal_reports_first_mismatch():
    assert series_equal(TruncatedSeries([1, 1]), TruncatedSeries([1, 1]))
    cmp = series_equal(TruncatedSeries([1, 1]), TruncatedSeries([1, 2]))
    assert not cmp and cmp.index == 1 and (cmp.left, cmp.right) == (1, 2)
    with pytest.raises(OrderMismatch):
        series_equal(TruncatedSeries([1]), TruncatedSeries([1, 1]))


def test_two_routes_to_inverse_square():
    a = series_from_rational(RationalFunction(P.one(), P((1, -1)) ** 2), 10)
    geo = series_from_rational(RationalFunction(P.one(), P((1, -1))), 10)
    assert series_equal(a, geo * geo)
    assert a.integer_coeffs() == list(range(1, 12))


def test_json_roundtrip():
    s = TruncatedSeries([1, Fraction(-1, 3), 5], 2)
    data = s.to_json()
    assert data == {"order": "2", "coeffs": ["1", "-1/3", "5"]}
    assert TruncatedSeries.from_json(data) == s
    assert P.from_json(P((1, -7)).to_json()) == P((1, -7))


def test_format_terms():
    assert format_terms([1, 0, -2, 1]) == "1 - 2·t^2 + t^3"
    assert format_terms([0, -1]) == "-t"
    assert format_terms([0, 0]) == "0"


small_polys = st.lists(st.integers(-5, 5), max_size=6).map(lambda c: P(tuple(c)))
unit_den = st.tuples(st.sampled_from([1, -1]), st.lists(st.integers(-4, 4), max_size=5)).map(
    lambda t: P((t[0],) + tuple(t[1])))


@given(small_polys, small_polys, small_polys)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if not a.is_zero() and not b.is_zero():
        assert (a * b).degree == a.degree + b.degree


@given(small_polys, unit_den, st.integers(0, 12), st.integers(0, 12))
def test_truncation_consistent(num, den, n, m):
    lo, hi = sorted((n, m))
    f = RationalFunction(num, den)
    assert series_from_rational(f, hi).truncate(lo) == series_from_rational(f, lo)
    assert series_from_rational(f, hi).is_integral()


@given(small_polys, unit_den, unit_den, st.integers(0, 10))
def test_common_factor_invariance(num, den, g, n):
    f = RationalFunction(num, den)
    fg = RationalFunction(num * g, den * g)
    assert series_from_rational(fg, n) == series_from_rational(f, n)


@given(small_polys, unit_den, st.integers(0, 10))
def test_multiplying_back_by_denominator(num, den, n):
    s = series_from_rational(RationalFunction(num, den), n)
    back = s * den
    assert back == TruncatedSeries(num.coeffs, n)
