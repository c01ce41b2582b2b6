"""Continued-fraction patterns of the catalog.

Each factory returns a :class:`CFPattern`.  Explicit first values live in
``a_first``/``b_first`` and are never fed to the general rule, so a rule may
be written for the residue classes only.
"""
from __future__ import annotations

from fractions import Fraction as Fr

from ..contfrac import CFPattern, X
from ..exact import binomial


def _cf(a, b, b0=0, a_first=None, b_first=None, name=""):
    return CFPattern(a, b, b0=b0, a_first=a_first, b_first=b_first, name=name)


def _one(_j):
    return 1


# -- ordinary generating functions -------------------------------------------

def thm1_1():
    def a(j):
        k, m = divmod(j, 3)
        if m == 0:
            return -(4 * k - 1) ** 2 * (2 * k - 1) * X ** 3
        if m == 1:
            return -4 * k * k * X ** 2
        return -(4 * k + 1) ** 2 * (2 * k + 1) * X ** 3

    def b(j):
        k, m = divmod(j, 3)
        if m == 0:
            return 1 - (6 * k - 1) * X
        if m == 1:
            return 1 - (6 * k + 1) * X
        return 1 - 2 * (2 * k + 1) * X - 4 * (2 * k + 1) ** 2 * X ** 2

    return _cf(a, b, a_first={1: 1}, name="Thm1.1")


def secant_j():
    return _cf(lambda k: -(k - 1) ** 2 * X ** 2, _one, a_first={1: 1}, name="Eq3")


def tangent_j():
    return _cf(lambda k: -(k - 1) * k * X ** 2, _one, a_first={1: X}, name="Eq4")


def super1():
    def a(j):
        k, m = divmod(j, 6)
        return {0: -2 * k * X, 1: -2 * k * X, 2: -(4 * k + 1) * X,
                3: -(4 * k + 1) * (2 * k + 1) * X ** 2,
                4: -(4 * k + 3) * (2 * k + 1) * X ** 2, 5: -(4 * k + 3) * X}[m]

    def b(j):
        k, m = divmod(j, 6)
        return 1 - 2 * (2 * k + 1) * X if m == 3 else 1

    return _cf(a, b, a_first={1: 1}, name="Eq21")


def one_plus():
    return _cf(lambda k: -binomial(k, 2) * X ** 2, lambda k: 1 - k * X,
               b0=1, a_first={1: X}, name="Eq22")


def from_one():
    return _cf(lambda k: -binomial(k, 2) * X ** 2, lambda k: 1 - k * X,
               a_first={1: X}, name="Eq23")


def f1(r):
    return _cf(lambda k: -(k - 1) * (r + k - 2) * X ** 2, _one, a_first={1: 1}, name="F1")


def f1z(r):
    return _cf(lambda k: -(k - 1) * (r + k - 2) * X, _one, a_first={1: 1}, name="F1z")


def f2(r):
    return _cf(lambda k: -(2 * k + r - 3) * (2 * k + r - 4) * (2 * k - 3) * (2 * k - 2) * X ** 2,
               lambda k: 1 - (8 * k * k + 4 * k * r - 16 * k - 3 * r + 8) * X,
               a_first={1: 1}, name="F2")


def f3(r):
    return _cf(lambda k: -2 * (2 * k + r - 2) * (2 * k + r - 3) * (2 * k - 1) * (k - 1) * X ** 2,
               lambda k: 1 - (8 * k * k + 4 * k * r - 8 * k - r + 2) * X,
               a_first={1: r}, name="F3")


def f4():
    return _cf(lambda k: -(k - 1) * k * X ** 2, _one, a_first={1: 1}, name="F4")


def f4x():
    return _cf(lambda k: -(k - 1) * k * X, _one, a_first={1: 1}, name="F4x")


def f5():
    return _cf(lambda k: -4 * (2 * k - 1) * (2 * k - 3) * (k - 1) ** 2 * X ** 2,
               lambda k: 1 - 2 * (2 * k - 1) ** 2 * X, a_first={1: 1}, name="F5")


def f6():
    return _cf(lambda k: -4 * (2 * k - 1) ** 2 * (k - 1) * k * X ** 2,
               lambda k: 1 - 8 * k * k * X, a_first={1: 2}, name="F6")


def f7():
    return _cf(lambda k: -binomial(k, 2) * X ** 2, lambda k: 1 - k * X,
               a_first={1: 1}, name="F7")


def f8_pre(r):
    return _cf(lambda k: -(k + r - 1) * k * X ** 2, _one,
               a_first={1: X}, b_first={1: 1 - r * X ** 2}, name="F8pre")


def f8(r):
    return _cf(lambda k: -(2 * k - 1) * (2 * k - 2) * (2 * k - 3 + r) * (2 * k - 2 + r) * X ** 4,
               lambda k: 1 - (8 * k * k - 8 * k + 4 * r * k + 2 - r) * X ** 2,
               a_first={1: X}, name="F8")


def f9():
    return _cf(lambda k: -(2 * k - 1) * (2 * k - 2) ** 2 * (2 * k - 3) * X ** 4,
               lambda k: 1 - 2 * (2 * k - 1) ** 2 * X ** 2, a_first={1: X}, name="F9")


def shift2_linear_start():
    """E_{n+2} fraction whose second numerator is linear."""
    return _cf(lambda k: -binomial(k, 2) * X ** 2, lambda k: 1 - k * X,
               a_first={1: 1, 2: -X}, b_first={1: 1 - X, 2: 1 - X}, name="Enp2_xx")


def shift2_not_super1():
    def a(j):
        k, m = divmod(j, 6)
        return {0: -2 * (4 * k + 1) * k * X ** 2, 1: -(4 * k + 1) * X,
                2: -(2 * k + 1) * X, 3: -(2 * k + 1) * X, 4: -(4 * k + 3) * X,
                5: -2 * (4 * k + 3) * (k + 1) * X ** 2}[m]

    def b(j):
        k, m = divmod(j, 6)
        return 1 - 4 * (k + 1) * X if m == 5 else 1

    return _cf(a, b, a_first={1: 1}, b_first={1: 1 - X}, name="Enp2_notsuper1")


def f10():
    def a(j):
        k, m = divmod(j, 3)
        if m == 0:
            return -2 * (4 * k - 1) ** 2 * k * X ** 3
        if m == 1:
            return -2 * (4 * k + 1) ** 2 * k * X ** 3
        return -(2 * k + 1) ** 2 * X ** 2

    def b(j):
        k, m = divmod(j, 3)
        if m == 0:
            return 1 - 4 * k * X - 16 * k * k * X ** 2
        return 1 - 2 * (3 * k + m) * X

    return _cf(a, b, a_first={1: 1}, name="F10")


def f11():
    return _cf(lambda k: -4 * (2 * k - 1) ** 2 * (k - 1) * k * X ** 4,
               lambda k: 1 - 8 * k * k * X ** 2, a_first={1: 2 * X}, name="F11")


# -- exponential generating functions ------------------------------------------

def lambert_tan():
    return _cf(lambda k: -X ** 2, lambda k: 2 * k - 1, a_first={1: X}, name="Lambert_tan")


def lambert_tanh():
    return _cf(lambda k: X ** 2, lambda k: 2 * k - 1, a_first={1: X}, name="Lambert_tanh")


def f12():
    return _cf(lambda k: -Fr(1, (2 * k - 3) * (2 * k - 1)) * X ** 2, _one,
               a_first={1: 1}, name="F12")


def f13_pre():
    return _cf(lambda k: -Fr(1, (2 * k - 3) * (2 * k - 1)) * X, _one,
               a_first={1: 1}, name="f13")


def f13():
    return _cf(lambda j: -Fr(1, (4 * j - 7) * (4 * j - 5) ** 2 * (4 * j - 3)) * X ** 2,
               lambda j: 1 - Fr(2, (4 * j - 5) * (4 * j - 1)) * X,
               a_first={1: 1}, b_first={1: 1 - Fr(1, 3) * X}, name="F13")


def f14():
    return _cf(lambda j: -Fr(1, (4 * j - 5) * (4 * j - 3) ** 2 * (4 * j - 1)) * X ** 4,
               lambda j: 1 - Fr(2, (4 * j - 3) * (4 * j + 1)) * X ** 2,
               a_first={1: Fr(1, 3) * X}, b_first={1: 1 - Fr(2, 5) * X ** 2}, name="F14")


def f15():
    return _cf(lambda j: -Fr(1, (4 * j - 7) * (4 * j - 5) ** 2 * (4 * j - 3)) * X ** 4,
               lambda j: 1 - Fr(2, (4 * j - 5) * (4 * j - 1)) * X ** 2,
               a_first={1: X}, b_first={1: 1 - Fr(1, 3) * X ** 2}, name="F15")


def f16():
    return _cf(lambda j: -Fr(1, (4 * j - 6) * (4 * j - 2)) * X ** 2, _one,
               a_first={1: 1}, b_first={1: 1 - Fr(1, 2) * X}, name="F16")


def f17_pre():
    def a(j):
        k, m = divmod(j, 4)
        return {0: Fr(1, 8 * k - 2), 1: -Fr(1, 8 * k - 2),
                2: -Fr(1, 8 * k + 2), 3: Fr(1, 8 * k + 2)}[m] * X

    return _cf(a, _one, a_first={1: 1, 2: -X}, name="f17")


def f17():
    return _cf(lambda j: Fr(1, (4 * j - 6) ** 2) * X ** 2,
               lambda j: 1 + (-1) ** j * Fr(2 * (j - 1), (2 * j - 3) * (2 * j - 1)) * X,
               a_first={1: 1, 2: Fr(1, 2) * X ** 2}, b_first={1: 1 - X}, name="F17")


def f18_pre():
    def a(j):
        i, odd = divmod(j, 2)
        if odd:
            return (-1) ** (i + 1) * Fr(i * i, 2 * (i + 1) ** 2 * (2 * i + 1)) * X
        return (-1) ** i * Fr((i + 1) ** 2, 2 * i * i * (2 * i + 1)) * X

    return _cf(a, _one, a_first={1: Fr(1, 2)}, name="f18")


def f18():
    return _cf(lambda j: Fr(1, (4 * j - 2) ** 2) * X ** 2,
               lambda j: 1 + (-1) ** j * Fr(2 * j, (2 * j - 1) * (2 * j + 1)) * X,
               a_first={1: Fr(1, 2)}, name="F18")


def f19_pre():
    def a(j):
        i, odd = divmod(j, 2)
        if odd:
            return (-1) ** i * Fr(i * (i + 2) * (i * i + i - 1),
                                  2 * (i * i + 3 * i + 1) * (2 * i + 3) * (i + 1) ** 2) * X
        return (-1) ** i * Fr(i * (i + 2) * (i * i + 3 * i + 1),
                              2 * (i * i + i - 1) * (2 * i + 1) * (i + 1) ** 2) * X

    return _cf(a, _one, a_first={1: Fr(1, 3)}, name="f19")


def f19():
    return _cf(lambda j: -Fr((j - 1) ** 2 * (j + 1) ** 2, 4 * j ** 4 * (2 * j - 1) * (2 * j + 1)) * X ** 2,
               lambda j: 1 + (-1) ** j * Fr(2 * j * j + 2 * j + 1, 2 * j * j * (j + 1) ** 2) * X,
               a_first={1: Fr(1, 3)}, name="F19")


def f20():
    def a(j):
        return Fr((j * j + 3 * j + 1) * (j * j - j - 1) * (j + 2) * (j - 1),
                  4 * (j * j + j - 1) ** 2 * (2 * j + 1) ** 2 * (j + 1) * j) * X ** 2

    def b(j):
        return 1 + 2 * (-1) ** j * Fr((j + 2) * (j + 1) ** 3 * j,
                                      (j * j + 3 * j + 1) * (j * j + j - 1) * (2 * j + 3) * (2 * j + 1)) * X

    return _cf(a, b, a_first={1: Fr(5, 24)}, name="F20")


def _f21_rule(power):
    def a(j):
        k, odd = divmod(j, 2)
        if odd:
            return -Fr(k * (2 * k - 1), (4 * k + 1) * (4 * k + 3) * (2 * k + 1) * (k + 1)) * X ** power
        return -Fr((2 * k + 1) * (k + 1), (4 * k - 1) * (4 * k + 1) * (2 * k - 1) * k) * X ** power
    return a


def f21():
    return _cf(_f21_rule(2), _one, a_first={1: Fr(1, 3)}, name="F21")


def f22_pre():
    return _cf(_f21_rule(1), _one, a_first={1: Fr(1, 3)}, name="f22")


def f22():
    return _cf(lambda j: -Fr(1, (4 * j - 5) * (4 * j - 3) ** 2 * (4 * j - 1)) * X ** 2,
               lambda j: 1 - Fr(2, (4 * j - 3) * (4 * j + 1)) * X,
               a_first={1: Fr(1, 3)}, b_first={1: 1 - Fr(2, 5) * X}, name="F22")


def f23_pre():
    def a(j):
        i, odd = divmod(j, 2)
        if odd:
            return -Fr((4 * i - 2) * (4 * i) * (4 * i * i + 2 * i - 3),
                       (4 * i + 2) * (4 * i + 3) * (4 * i + 4) * (4 * i + 5) * (4 * i * i + 10 * i + 3)) * X
        return -Fr((4 * i + 6) * (4 * i + 8) * (4 * i * i + 10 * i + 3),
                   (4 * i + 1) * (4 * i + 2) * (4 * i + 3) * (4 * i + 4) * (4 * i * i + 2 * i - 3)) * X

    return _cf(a, _one, a_first={1: Fr(2, 15)}, name="f23")


def f23():
    def a(j):
        return -Fr((2 * j + 1) * (2 * j - 3) * (j + 1) * (j - 1),
                   (4 * j + 1) * (4 * j - 1) ** 2 * (4 * j - 3) * (2 * j - 1) ** 2 * j * j) * X ** 2

    def b(j):
        return 1 - Fr(8 * j ** 4 + 8 * j ** 3 + 22 * j * j + 10 * j + 3,
                      (4 * j + 3) * (4 * j - 1) * (2 * j + 1) * (2 * j - 1) * (j + 1) * j) * X

    return _cf(a, b, a_first={1: Fr(2, 15)}, name="F23")


def f24():
    def a(j):
        num = ((4 * j * j + 10 * j + 3) * (4 * j * j - 6 * j - 1) * (2 * j + 3) * (2 * j - 3)
               * (j + 2) * (j - 1))
        den = ((4 * j * j + 2 * j - 3) ** 2 * (4 * j + 3) * (4 * j + 1) ** 2 * (4 * j - 1)
               * (2 * j + 1) * (2 * j - 1) * (j + 1) * j)
        return -Fr(num, den) * X ** 2

    def b(j):
        num = 2 * (16 * j ** 4 + 48 * j ** 3 + 164 * j * j + 192 * j + 45)
        den = (4 * j * j + 10 * j + 3) * (4 * j * j + 2 * j - 3) * (4 * j + 5) * (4 * j + 1)
        return 1 - Fr(num, den) * X

    return _cf(a, b, a_first={1: Fr(17, 315)}, name="F24")
