"""Closed forms for Hankel determinants, stored by residue class."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Fr
from math import factorial as f
from math import prod
from typing import Callable

from ..exact import rising


@dataclass(frozen=True)
class ResidueForm:
    """H_n = cases[(n - offset) % modulus](k, r) with k = (n - offset) // modulus.

    ``special`` lists values for small n that the cases do not cover.
    """

    modulus: int
    cases: tuple
    offset: int = 0
    special: dict = field(default_factory=dict)

    def __call__(self, n: int, r: int | None = None):
        if n in self.special:
            return self.special[n]
        k, m = divmod(n - self.offset, self.modulus)
        return self.cases[m](k, r)


def P(lo: int, hi: int, g: Callable[[int], object]):
    """prod_{k=lo}^{hi} g(k); the empty product is 1."""
    return prod((g(k) for k in range(lo, hi + 1)), start=Fr(1))


def _sign(m: int) -> int:
    return -1 if m % 2 else 1


def _zero(_k, _r):
    return 0


def _plain(fn) -> ResidueForm:
    return ResidueForm(1, (fn,))


def _even_only(fn, special=None) -> ResidueForm:
    return ResidueForm(2, (fn, _zero), special=special or {})


def _odd_fact4(k):
    return f(2 * k + 1) ** 4


def _ratio_sq(k):
    return Fr(f(k) ** 2, f(2 * k + 1) ** 2)


def _ratio(k):
    return Fr(f(k), f(2 * k + 1))


def _ratio_shift_sq(k):
    return Fr(f(k - 1) ** 2, f(2 * k - 1) ** 2)


# Euler numbers, n = 4k + 1 + m
EULER = ResidueForm(4, (
    lambda k, r: _sign(k) * Fr(f(2 * k) ** 2, 2 ** (4 * k * (2 * k - 1))) * P(1, 2 * k - 1, _odd_fact4),
    _zero,
    lambda k, r: _sign(k + 1) * Fr(f(2 * k + 1) ** 2, 2 ** (4 * k * (2 * k + 1))) * P(1, 2 * k, _odd_fact4),
    lambda k, r: (_sign(k + 1) * Fr(f(2 * k + 1) ** 2 * f(4 * k + 3) ** 2, 2 ** (2 * (2 * k + 1) ** 2))
                  * P(1, 2 * k, _odd_fact4)),
), offset=1, special={0: 1})

# E_{n+2}, n = 4k + m
SHIFT2 = ResidueForm(4, (
    lambda k, r: (_sign(k) * Fr(k * k * f(2 * k - 1) ** 2) / Fr(2) ** (8 * k * k - 4 * k - 2)
                  * P(1, 2 * k - 1, _odd_fact4)),
    lambda k, r: _sign(k) * Fr(f(2 * k) ** 2, 2 ** (8 * k * k) * f(4 * k + 1) ** 2) * P(1, 2 * k, _odd_fact4),
    lambda k, r: _sign(k) * Fr(f(2 * k + 1) ** 2, 2 ** (8 * k * k + 4 * k)) * P(1, 2 * k, _odd_fact4),
    _zero,
), special={0: 1})


def _h21_even(k, r):
    return Fr(2) ** (4 * k * k - 1) * Fr(f(2 * k + 2), f(4 * k + 1)) * P(1, 2 * k - 1, _ratio_sq)


def _h21_odd(k, r):
    return (Fr(2) ** (4 * k * (k + 1)) * Fr((2 * k + 1) * f(2 * k + 2), f(4 * k + 3))
            * P(1, 2 * k, _ratio_sq))


CLOSED_FORMS: dict[str, ResidueForm] = {
    "Thm1.2": EULER,
    "H1": _plain(lambda n, r: P(1, n - 1, lambda k: f(k) * rising(r, k))),
    "H2": _plain(lambda n, r: P(1, n - 1, lambda k: f(2 * k) * rising(r, 2 * k))),
    "H3": _plain(lambda n, r: P(0, n - 1, lambda k: f(2 * k + 1) * rising(r, 2 * k + 1))),
    "H4": _plain(lambda n, r: f(n) * P(1, n - 1, lambda k: f(k) ** 2)),
    "H5": _plain(lambda n, r: P(1, 2 * n - 1, f)),
    "H6": _plain(lambda n, r: P(1, 2 * n, f)),
    "H7": _plain(lambda n, r: Fr(f(n), 2 ** (n * (n - 1) // 2)) * P(2, n - 1, lambda k: f(k) ** 2)),
    "H8": _even_only(lambda n, r: _sign(n) * P(1, n - 1, lambda k: (f(2 * k + 1) * rising(r + 1, 2 * k)) ** 2)),
    "H9": _even_only(lambda n, r: _sign(n) * P(1, 2 * n - 1, lambda k: f(k) ** 2)),
    "H10": SHIFT2,
    "H11": _even_only(lambda n, r: _sign(n) * P(1, 2 * n, lambda k: f(k) ** 2)),
    "H12": ResidueForm(1, (lambda n, r: Fr(2) ** ((n - 1) ** 2) * Fr(f(n - 1), f(2 * n - 1))
                           * P(1, n - 1, _ratio_shift_sq),), special={0: 1}),
    "H13": ResidueForm(1, (lambda n, r: Fr(2) ** ((n - 1) * (2 * n - 1)) * P(1, 2 * n - 2, _ratio),),
                       special={0: 1}),
    "H14": _even_only(lambda n, r: _sign(n) * Fr(2) ** (2 * n * (2 * n - 1)) * P(1, 2 * n - 1, _ratio_sq)),
    "H15": _even_only(lambda n, r: _sign(n) * Fr(2) ** (2 * (n - 1) * (2 * n - 1)) * P(1, 2 * n - 2, _ratio_sq),
                      special={0: 1}),
    "H16": ResidueForm(1, (lambda n, r: Fr(f(n - 1), 2 ** (n - 1) * f(2 * n - 1)) * P(1, n - 2, _ratio_sq),),
                       special={0: 1}),
    "H17": ResidueForm(1, (lambda n, r: _sign(n * (n - 1) // 2) * Fr(1, 2 ** (n - 1))
                           * P(2, n - 1, _ratio_shift_sq),), special={0: 1}),
    "H18": _plain(lambda n, r: _sign(n * (n - 1) // 2) * Fr(1, 2 ** n) * P(2, n, _ratio_shift_sq)),
    "H19": _plain(lambda n, r: Fr((n + 1) * f(n + 1), 2 ** n * f(2 * n + 1)) * P(1, n - 1, _ratio_sq)),
    "H20": _plain(lambda n, r: (_sign(n * (n - 1) // 2) * Fr((n + 1) * (n + 2) * (n * n + 3 * n + 1), 2 ** (n + 1))
                                * P(1, n, _ratio_sq))),
    "H21": ResidueForm(2, (_h21_even, _h21_odd)),
    "H22": _plain(lambda n, r: Fr(2) ** (n * (2 * n - 1)) * P(1, 2 * n - 1, _ratio)),
    "H23": _plain(lambda n, r: Fr(2) ** (n * (2 * n + 1)) * (n + 1) * (2 * n + 1) * P(1, 2 * n, _ratio)),
    "H24": _plain(lambda n, r: (Fr(2) ** (n * (2 * n + 3)) * (2 * n + 1) * (4 * n * n + 10 * n + 3)
                                * Fr((n + 1) * (n + 2) * (2 * n + 3), 3) * P(1, 2 * n + 1, _ratio))),
}
