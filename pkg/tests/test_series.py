from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import rationals
from hankelcf.errors import NonInvertibleConstantTerm, ShiftBeyondOrder, UnknownSeriesName
from hankelcf.exact import Poly, QPolynomial
from hankelcf.series import TruncatedSeries, cos_series, named_series, sin_series

x = Poly.gen()
series = st.lists(rationals, min_size=1, max_size=12).map(TruncatedSeries)


def test_product_and_identity():
    s = TruncatedSeries.from_poly(1 + x, 5) * TruncatedSeries.from_poly(1 - x, 5)
    assert s == TruncatedSeries([1, 0, -1], 5)
    p = TruncatedSeries([1, 1, 1])
    assert p + 0 == p


def test_tan_times_cos_is_sin():
    assert named_series("tan", 15) * cos_series(15) == sin_series(15)


def test_invert():
    assert TruncatedSeries.from_poly(1 - x, 6).invert() == TruncatedSeries([1] * 7, 6)
    sec = cos_series(8).invert()
    assert [sec[n] for n in (0, 2, 4)] == [1, Fraction(1, 2), Fraction(5, 24)]
    with pytest.raises(NonInvertibleConstantTerm):
        TruncatedSeries([0, 1, 1]).invert()


def test_division_by_series_with_valuation_lowers_order():
    f = TruncatedSeries([0, 0, 1, 1, 1], 4)
    g = TruncatedSeries([0, 1, 1, 0, 0], 4)
    q = f / g
    assert q.order == 3
    assert (q * g.truncate(3)).truncate(3).agrees_with(f, 3)


def test_named_series():
    tps = named_series("tan_plus_sec", 5)
    assert list(tps.coeffs) == [1, 1, Fraction(1, 2), Fraction(1, 3), Fraction(5, 24), Fraction(2, 15)]
    assert named_series("sec_pow", 4, r=1) == TruncatedSeries([1, 0, Fraction(1, 2), 0, Fraction(5, 24)])
    assert named_series("cos", 0) == TruncatedSeries([1], 0)
    with pytest.raises(UnknownSeriesName):
        named_series("zeta", 4)


def test_transforms():
    euler = named_series("tan_plus_sec", 9).scale_coeff_by_factorial()
    assert list(euler.coeffs) == [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936]
    sec = TruncatedSeries([1, 1, 5, 61])
    assert list(sec.interleave_zero().coeffs[:7]) == [1, 0, 1, 0, 5, 0, 61]
    odd = named_series("tan", 9)
    assert odd.even_part().is_zero()
    assert odd.transform("odd_subsequence")[1] == Fraction(1, 3)
    with pytest.raises(ShiftBeyondOrder):
        TruncatedSeries([1, 2], 1).shift_left(2)
    assert TruncatedSeries([1, 2, 3]).shift_left(1) == TruncatedSeries([2, 3])


@given(series)
def test_factorial_scaling_round_trip(f):
    assert f.scale_coeff_by_factorial().divide_coeff_by_factorial() == f


@given(series, series)
def test_first_mismatch(f, g):
    top = min(f.order, g.order)
    bad = f.first_mismatch(g)
    if bad is None:
        assert f.agrees_with(g, top)
    else:
        n, fn, gn = bad
        assert (fn, gn) == (f[n], g[n]) and fn != gn
        assert all(f[i] == g[i] for i in range(n))


@given(series)
def test_json_round_trip(f):
    assert TruncatedSeries.from_json(f.to_json()) == f


def test_series_over_q_polynomials_specializes():
    f = TruncatedSeries([QPolynomial([1, 1]), QPolynomial([0, 0, 1])], 1)
    assert f.map_coeffs(lambda c: c.at(-1)) == TruncatedSeries([0, 1], 1)
