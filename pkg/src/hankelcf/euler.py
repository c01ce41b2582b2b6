"""Euler numbers, their variants and q-analogs."""
from __future__ import annotations

from fractions import Fraction
from math import factorial

from .contfrac import CFPattern, X
from .errors import ExactArithmeticError
from .exact import I, GaussianRational, QPolynomial, binomial, q_binomial, q_int
from .hankel import hankel_det
from .perms import distribution
from .series import TruncatedSeries, named_series


class TPolynomial(QPolynomial):
    """Polynomial in t with rational coefficients."""

    __slots__ = ()
    var = "t"


def _half(n: int, what: str) -> int:
    if n % 2:
        raise ExactArithmeticError(f"{what}: {n} is odd")
    return n // 2


def euler_numbers(n_max: int) -> list[int]:
    """E_0..E_{n_max} from 2E_n = sum_k C(n-1, k-1) E_{k-1} E_{n-k}."""
    E = [1, 1][:n_max + 1]
    for n in range(2, n_max + 1):
        s = sum(binomial(n - 1, k - 1) * E[k - 1] * E[n - k] for k in range(1, n + 1))
        E.append(_half(s, f"E_{n}"))
    return E


def euler_ogf(order: int) -> TruncatedSeries:
    return TruncatedSeries(euler_numbers(order), order)


def secant_power_numbers(r: int, n_max: int) -> list[int]:
    """E^(r)_{2n} = (2n)! [x^{2n}] sec(x)^r for n = 0..n_max."""
    sec = named_series("sec_pow", 2 * n_max, r=r)
    out = []
    for n in range(n_max + 1):
        c = sec[2 * n] * factorial(2 * n)
        if c.denominator != 1:
            raise ExactArithmeticError(f"E^({r})_{2 * n} = {c} is not an integer")
        out.append(int(c))
    return out


def tangent_numbers(n_max: int) -> list[int]:
    """E_{2n+1} for n = 0..n_max."""
    return euler_numbers(2 * n_max + 1)[1::2]


def euler_egf_coefficients(n_max: int) -> list[Fraction]:
    """e_n = E_n / n!."""
    return [Fraction(e, factorial(n)) for n, e in enumerate(euler_numbers(n_max))]


def _ring(q):
    """Coefficient maps for Q[q] (q is None) or for q specialized to a rational."""
    if q is None:
        return q_int, q_binomial
    q = Fraction(q)
    return (lambda n: q_int(n).at(q)), (lambda n, k: q_binomial(n, k).at(q))


def _as_qpoly(c):
    return c if isinstance(c, QPolynomial) else QPolynomial((c,))


def q_euler_pattern(q=None) -> CFPattern:
    qi, qb = _ring(q)
    return CFPattern(lambda k: -qb(k, 2) * X ** 2, lambda k: 1 - qi(k) * X,
                     b0=1, a_first={1: X})


def q_euler(n_max: int, q=None) -> list:
    """E_0(q)..E_{n_max}(q); polynomials in q, or rationals when q is given."""
    value = q_euler_pattern(q).evaluate(n_max, certify=True)
    if q is None:
        return [_as_qpoly(c) for c in value.coeffs]
    return list(value.coeffs)


def q_tangent_secant_hat(n_max: int, q=None) -> tuple[list, list]:
    """(hat E_0, hat E_2, ..., hat E_{2 n_max}) and (hat E_1, ..., hat E_{2 n_max + 1})."""
    qi, _ = _ring(q)
    order = 2 * n_max + 1
    sec = CFPattern(lambda k: -qi(k - 1) ** 2 * X ** 2, lambda k: 1, a_first={1: 1})
    tan = CFPattern(lambda k: -qi(k - 1) * qi(k) * X ** 2, lambda k: 1, a_first={1: X})
    s = sec.evaluate(order, certify=True).coeffs
    t = tan.evaluate(order, certify=True).coeffs
    wrap = _as_qpoly if q is None else (lambda c: c)
    return [wrap(s[2 * n]) for n in range(n_max + 1)], [wrap(t[2 * n + 1]) for n in range(n_max + 1)]


def motzkin_numbers(n_max: int) -> list[int]:
    M = [1]
    for n in range(1, n_max + 1):
        M.append(M[n - 1] + sum(M[k] * M[n - 2 - k] for k in range(n - 1)))
    return M


# -- the value q = -1 ------------------------------------------------------

def en_neg1_closed(n: int) -> int:
    """E_n(-1) = sum_{k=0}^{n-1} C(n-k-1, k) k!  (and E_0(-1) = 1)."""
    if n == 0:
        return 1
    return sum(binomial(n - k - 1, k) * factorial(k) for k in range(n))


def en_neg1_recurrence(n_max: int) -> list[int]:
    """alpha_n = E_{n+1}(-1) from 2a_n = 3a_{n-1} + (n-1)a_{n-2} - (n-1)a_{n-3}."""
    a = [1, 1, 2][:n_max + 1]
    for n in range(3, n_max + 1):
        a.append(_half(3 * a[n - 1] + (n - 1) * a[n - 2] - (n - 1) * a[n - 3], f"alpha_{n}"))
    return a


def neg1_pattern(u=0) -> CFPattern:
    """1/(1-x) - (u+1)x^2/1 - (u+1)x^2/(1-x) - (u+2)x^2/1 - ..."""
    return CFPattern(lambda j: -(u + j // 2) * X ** 2,
                     lambda j: 1 if j % 2 == 0 else 1 - X,
                     b0=0, a_first={1: 1})


def neg1_ode_residual(F: TruncatedSeries, u=0) -> TruncatedSeries:
    """(x-1)x^3 F' - (x-1)(x-2)x^2 u F^2 + (x-1)(2x^2+x-2) F + (x-2)."""
    dF = F.derivative().multiply_by_x(3) * (X - 1)
    quad = (F * F) * ((X - 1) * (X - 2) * X ** 2 * u) if u != 0 else 0
    lin = F * ((X - 1) * (2 * X ** 2 + X - 2))
    return dF - quad + lin + (X - 2)


def verify_neg1_ode(order: int, F: TruncatedSeries | None = None, u=0) -> bool:
    """Check the differential equation to order - 3.

    Without ``F`` the series is sum alpha_n x^n when u = 0 and the value of
    :func:`neg1_pattern` otherwise.
    """
    if F is None:
        if u == 0:
            F = TruncatedSeries(en_neg1_recurrence(order), order)
        else:
            F = neg1_pattern(u).evaluate(order, certify=True)
    res = neg1_ode_residual(F, u)
    top = min(order - 3, res.order)
    return all(res[n] == 0 for n in range(top + 1))


def neg1_moments(n_max: int) -> list[int]:
    """c_n = sum_k C(n-k, k) k!."""
    return [sum(binomial(n - k, k) * factorial(k) for k in range(n + 1)) for n in range(n_max + 1)]


def neg1_det_closed(size: int) -> int:
    n, odd = divmod(size, 2)
    out = 1
    for k in range(1, n + 1):
        if odd:
            out *= factorial(k - 1) * factorial(k) ** 3
        else:
            out *= factorial(k - 1) ** 3 * factorial(k)
    return out


def neg1_hankel_identities(max_size: int) -> bool:
    """Hankel determinants of c_n against the two product formulas, sizes 1..max_size."""
    c = neg1_moments(max(2 * max_size - 2, 0))
    return all(hankel_det(c, m) == neg1_det_closed(m) for m in range(1, max_size + 1))


# -- Eulerian polynomials --------------------------------------------------

def eulerian_polynomial(n: int, limit: int | None = None) -> TPolynomial:
    """A_n(t) = sum over S_n of t^(1 + des)."""
    coeffs = [0] * (n + 1)
    for key, mult in distribution(n, limit).items():
        coeffs[1 + key[5]] += mult
    return TPolynomial(coeffs)


def euler_from_eulerian(n: int, limit: int | None = None):
    """-i (1+i)^(1-n) A_n(i), a Gaussian rational that should equal E_n."""
    return -I * GaussianRational(1, 1) ** (1 - n) * eulerian_polynomial(n, limit)(I)
