import random
from fractions import Fraction
from math import factorial

import pytest

from hankelcf.errors import BoundExceeded, NotAPermutation
from hankelcf.euler import euler_numbers
from hankelcf.exact import GaussianRational
from hankelcf.perms import (distribution, flajolet_pattern, peak_da_coefficients, peak_da_polynomial,
                            quadruple_sum, stats, verify_exp_cf, verify_flajolet_cf, weight_sum,
                            weights)
from published import WEIGHTS_S3

E = euler_numbers(9)


def test_single_permutation_statistics():
    s = stats([1, 3, 2])
    assert (s.val, s.pk, s.da, s.dd, s.asc, s.des) == (2, 1, 0, 0, 1, 1)
    s = stats([1, 2, 3])
    assert (s.val, s.pk, s.da, s.dd, s.asc, s.des) == (1, 0, 2, 0, 2, 0)
    s = stats([1])
    assert (s.val, s.pk, s.da, s.dd) == (1, 0, 0, 0)
    with pytest.raises(NotAPermutation):
        stats([1, 1, 2])
    with pytest.raises(NotAPermutation):
        stats([])


def test_weight_table_for_s3():
    for sigma, row in WEIGHTS_S3.items():
        w = weights(sigma)
        assert (w["W1"], w["W2"], w["W3"], w["W4"]) == row, sigma
    assert all(weight_sum(3, k) == 2 for k in ("W1", "W2", "W3", "W4"))


def test_valleys_exceed_peaks_by_one():
    for n in range(1, 9):
        assert all(key[0] == key[1] + 1 for key in distribution(n))


@pytest.mark.parametrize("n", range(1, 9))
def test_weight_sums(n):
    assert weight_sum(n, "W2") == weight_sum(n, "W3") == E[n]
    w4 = weight_sum(n, "W4")
    assert isinstance(w4, GaussianRational) and w4.im == 0 and w4.re == E[n]
    assert weight_sum(n, "W1") == (E[n] if n % 2 else 0)
    assert quadruple_sum(n, 1, 1, 1, 1) == factorial(n)


def test_w1_at_nine():
    assert weight_sum(9, "W1") == E[9]


def test_quadruple_and_peak_polynomials():
    assert quadruple_sum(3, 1, Fraction(1, 2), 0, 1) == 2
    assert quadruple_sum(3, 1, 1, 1, 1) == 6
    assert Fraction(1, 2 ** 4) * quadruple_sum(5, 1, 2, 1, 1) == E[5]
    assert peak_da_polynomial(3, Fraction(1, 2), 0) == 2
    assert peak_da_polynomial(5, 1, -1) == 16
    for n in range(1, 7):
        assert peak_da_polynomial(n, 1, 1) == factorial(n)
        assert sum(peak_da_coefficients(n).values()) == factorial(n)


def test_bounds():
    with pytest.raises(BoundExceeded):
        weight_sum(10, "W2")
    with pytest.raises(BoundExceeded):
        quadruple_sum(4, 1, 1, 1, 1, limit=3)
    with pytest.raises(ValueError):
        weight_sum(3, "W5")


def test_flajolet_fraction():
    assert verify_flajolet_cf(8, 1, Fraction(1, 2), 0, 1)
    assert verify_flajolet_cf(8, 1, 1, 1, 1)
    value = flajolet_pattern(1, 1, 1, 1).evaluate(8, certify=True)
    assert [value[n] for n in range(1, 9)] == [factorial(n) for n in range(1, 9)]


def test_exp_fraction():
    assert verify_exp_cf(8, 1, 1, -1, -1)
    assert verify_exp_cf(8, 1, Fraction(1, 2), 0, 1)
    assert verify_exp_cf(6, 1, 1, 2, 0)


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_random_specializations(seed):
    rng = random.Random(seed)
    u = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(4)]
    assert verify_flajolet_cf(7, *u)
    assert verify_exp_cf(7, *u)


def test_mismatched_specialization_is_rejected():
    value = flajolet_pattern(1, 1, 1, 1).evaluate(6, certify=True)
    assert value[5] != quadruple_sum(5, 1, 2, 1, 1)
