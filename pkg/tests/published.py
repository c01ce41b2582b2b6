"""Published values used as fixtures (transcribed, not computed)."""
from fractions import Fraction

from hankelcf.exact import GaussianRational, QPolynomial

EULER_FIRST = [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936]

# E_n(q) for n <= 6, coefficients from q^0 upward
Q_EULER_FIRST = [[1], [1], [1], [2], [4, 1], [9, 5, 2], [21, 20, 14, 5, 1]]

Q_SPECIALIZATIONS = {
    1: [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936],
    0: [1, 1, 1, 2, 4, 9, 21, 51, 127, 323],
    -1: [1, 1, 1, 2, 3, 6, 11, 24, 51, 122],
}

_h = Fraction(1, 2)
_up = GaussianRational(_h, _h)
_down = GaussianRational(_h, -_h)

# the four weights of every permutation of S_3, each as the product of its two factors
WEIGHTS_S3 = {
    (1, 2, 3): (-1 * -1, 0 * 0, _h * _h, _up * _up),
    (1, 3, 2): (1 * 1, _h * 1, 1 * _h, _up * _down),
    (2, 1, 3): (1 * -1, 1 * 0, _h * _h, _down * _up),
    (2, 3, 1): (1 * 1, _h * 1, 1 * _h, _up * _down),
    (3, 1, 2): (1 * -1, 1 * 0, _h * _h, _down * _up),
    (3, 2, 1): (1 * 1, 1 * 1, _h * _h, _down * _down),
}


def q_poly(coeffs) -> QPolynomial:
    return QPolynomial(coeffs)
