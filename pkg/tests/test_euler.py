from fractions import Fraction
from math import factorial

import pytest

from hankelcf.errors import BoundExceeded
from hankelcf.euler import (TPolynomial, en_neg1_closed, en_neg1_recurrence, euler_from_eulerian,
                            euler_numbers, eulerian_polynomial, motzkin_numbers, neg1_det_closed,
                            neg1_hankel_identities, neg1_moments, neg1_pattern, q_euler,
                            q_tangent_secant_hat, secant_power_numbers, tangent_numbers,
                            verify_neg1_ode)
from hankelcf.exact import QPolynomial
from hankelcf.hankel import hankel_det
from hankelcf.series import TruncatedSeries, named_series
from published import EULER_FIRST, Q_EULER_FIRST, Q_SPECIALIZATIONS, q_poly


def test_euler_numbers():
    assert euler_numbers(9) == EULER_FIRST
    assert euler_numbers(0) == [1]
    ts = named_series("tan", 30) + named_series("sec", 30)
    assert euler_numbers(30) == [ts[n] * factorial(n) for n in range(31)]
    assert tangent_numbers(4) == [1, 2, 16, 272, 7936]


def test_secant_powers():
    assert secant_power_numbers(1, 4) == [1, 1, 5, 61, 1385]
    tan = named_series("tan", 10)
    derivative = [tan[n + 1] * (n + 1) for n in range(9)]
    assert secant_power_numbers(2, 4) == [derivative[2 * n] * factorial(2 * n) for n in range(5)]


def test_q_euler_polynomials():
    values = q_euler(9)
    for n, coeffs in enumerate(Q_EULER_FIRST):
        assert values[n] == q_poly(coeffs)
    for q, row in Q_SPECIALIZATIONS.items():
        assert [v.at(q) for v in values] == row
        assert q_euler(9, q) == row


def test_motzkin_at_zero():
    assert q_euler(10, 0)[1:] == motzkin_numbers(9)
    assert motzkin_numbers(8) == [1, 1, 2, 4, 9, 21, 51, 127, 323]


def test_q_equal_minus_one_three_ways():
    closed = [en_neg1_closed(n) for n in range(41)]
    assert closed[5] == 6 and closed[9] == 122 and closed[1] == 1
    assert en_neg1_recurrence(40)[:4] == [1, 1, 2, 3]
    assert en_neg1_recurrence(39) == closed[1:]
    assert q_euler(40, -1) == closed


def test_neg1_fraction_matches_moments():
    value = neg1_pattern().evaluate(20, certify=True)
    assert list(value.coeffs) == neg1_moments(20)


def test_differential_equation():
    assert verify_neg1_ode(30)
    F = TruncatedSeries(en_neg1_recurrence(30), 30)
    bumped = list(F.coeffs)
    bumped[7] += 1
    assert not verify_neg1_ode(30, TruncatedSeries(bumped, 30))
    assert verify_neg1_ode(20, u=1)
    assert verify_neg1_ode(20, u=2)


def test_hat_analogs():
    sec, tan = q_tangent_secant_hat(3)
    assert sec[0] == QPolynomial((1,))
    assert sec[1].at(1) == 1 and tan[1].at(1) == 2 and tan[2].at(1) == 16
    sec1, tan1 = q_tangent_secant_hat(5, 1)
    e = euler_numbers(11)
    assert sec1 == e[0::2] and tan1 == e[1::2]


def test_closing_determinants():
    c = neg1_moments(12)
    assert hankel_det(c, 1) == 1 == neg1_det_closed(1)
    assert hankel_det(c, 4) == 2 == neg1_det_closed(4)
    assert neg1_hankel_identities(7)


def test_eulerian():
    assert eulerian_polynomial(1) == TPolynomial((0, 1))
    assert eulerian_polynomial(3) == TPolynomial((0, 1, 4, 1))
    e = euler_numbers(8)
    for n in range(1, 9):
        assert euler_from_eulerian(n) == e[n]
    with pytest.raises(BoundExceeded):
        eulerian_polynomial(10)


def test_q_euler_coefficients_are_nonnegative_integers_so_far():
    # observed, not a proved property
    for poly in q_euler(14):
        assert all(c >= 0 and Fraction(c).denominator == 1 for c in poly.coeffs)
