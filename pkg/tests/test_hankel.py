import random
from fractions import Fraction

import pytest

from hankelcf.errors import InsufficientCoefficients
from hankelcf.euler import euler_egf_coefficients, euler_numbers
from hankelcf.exact import QPolynomial
from hankelcf.hankel import cofactor_det, det, hankel_det, hankel_sequence

E = euler_numbers(20)


def rand_matrix(rng, n):
    return [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]


def test_examples():
    assert det([[1, 1, 1], [1, 1, 2], [1, 2, 5]]) == -1
    assert hankel_det(E, 2) == 0
    assert hankel_det(E, 0) == 1
    assert hankel_sequence(E, 5)[:5] == [1, 1, 0, -1, -9]
    assert hankel_sequence([1] * 9, 5) == [1, 1, 0, 0, 0, 0]


def test_egf_determinants_match_small_closed_form():
    from hankelcf.catalog.determinants import CLOSED_FORMS
    hs = hankel_sequence(euler_egf_coefficients(5), 3)
    assert hs == [CLOSED_FORMS["H17"](n) for n in range(4)]


def test_against_cofactor_expansion():
    rng = random.Random(0)
    for _ in range(200):
        m = rand_matrix(rng, rng.randint(1, 5))
        if rng.random() < 0.2:
            m[-1] = list(m[0])
        assert det(m) == cofactor_det(m)


def test_multiplicative():
    rng = random.Random(1)
    for _ in range(10):
        a, b = rand_matrix(rng, 4), rand_matrix(rng, 4)
        ab = [[sum(a[i][k] * b[k][j] for k in range(4)) for j in range(4)] for i in range(4)]
        assert det(ab) == det(a) * det(b)


def test_polynomial_entries():
    q = QPolynomial([0, 1])
    m = [[1 + q, q], [q, 1 + q]]
    assert det(m) == (1 + q) * (1 + q) - q * q
    assert det(m) == cofactor_det(m)


def test_errors():
    with pytest.raises(InsufficientCoefficients):
        hankel_sequence([1, 2, 3], 3)
    with pytest.raises(ValueError):
        det([[1, 2]])
