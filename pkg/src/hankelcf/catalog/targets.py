"""Target sequences: the series each catalogued fraction must expand."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable

from ..euler import euler_numbers, secant_power_numbers
from ..series import TruncatedSeries


@lru_cache(maxsize=8)
def _euler(n_max: int) -> tuple:
    return tuple(euler_numbers(n_max))


def E(n: int, need: int) -> int:
    return _euler(max(need, n))[n]


def e(n: int, need: int) -> Fraction:
    return Fraction(E(n, need), factorial(n))


@lru_cache(maxsize=32)
def _secant_power(r: int, n_max: int) -> tuple:
    return tuple(secant_power_numbers(r, n_max))


def Er(r: int, n: int, need: int) -> int:
    """E^(r)_{2n}."""
    return _secant_power(r, max(need, n))[n]


def _even_only(fn: Callable[[int], object]) -> Callable[[int], object]:
    return lambda n: 0 if n % 2 else fn(n // 2)


def _odd_only(fn: Callable[[int], object]) -> Callable[[int], object]:
    return lambda n: fn(n // 2) if n % 2 else 0


def target_rule(name: str, r: int | None, order: int) -> Callable[[int], object]:
    """Coefficient rule n -> c_n for a named target, valid for n <= order."""
    m = 2 * order + 8  # enough Euler numbers for every rule below
    rules = {
        "E": lambda n: E(n, m),
        "E_shift1": lambda n: E(n + 1, m),
        "E_shift2": lambda n: E(n + 2, m),
        "E_from1": lambda n: E(n, m) if n else 0,
        "E_even": _even_only(lambda k: E(2 * k, m)),
        "E_odd": _odd_only(lambda k: E(2 * k + 1, m)),
        "E_odd_packed": lambda n: E(2 * n + 1, m),
        "E_odd_packed_from3": lambda n: E(2 * n + 3, m),
        "E_odd_interleaved": _even_only(lambda k: E(2 * k + 1, m)),
        "E_odd_from3_odd": _odd_only(lambda k: E(2 * k + 3, m)),
        "e": lambda n: e(n, m),
        "e_shift1": lambda n: e(n + 1, m),
        "e_shift2": lambda n: e(n + 2, m),
        "e_shift3": lambda n: e(n + 3, m),
        "e_shift4": lambda n: e(n + 4, m),
        "e_odd_interleaved": _even_only(lambda k: e(2 * k + 1, m)),
        "e_odd_packed": lambda n: e(2 * n + 1, m),
        "e_odd_from3_odd": _odd_only(lambda k: e(2 * k + 3, m)),
        "tan": _odd_only(lambda k: e(2 * k + 1, m)),
        "tanh": _odd_only(lambda k: (-1) ** k * e(2 * k + 1, m)),
        "e_odd_from3_interleaved": _even_only(lambda k: e(2 * k + 3, m)),
        "e_odd_packed_from3": lambda n: e(2 * n + 3, m),
        "e_odd_packed_from5": lambda n: e(2 * n + 5, m),
        "e_odd_packed_from7": lambda n: e(2 * n + 7, m),
    }
    if r is not None:
        rules.update({
            "Er_interleaved": _even_only(lambda k: Er(r, k, m)),
            "Er_packed": lambda n: Er(r, n, m),
            "Er_packed_from1": lambda n: Er(r, n + 1, m),
            "Er_over_r_odd": _odd_only(lambda k: Fraction(Er(r, k + 1, m), r)),
        })
    if name not in rules:
        raise KeyError(f"unknown target {name!r} (r = {r})")
    return rules[name]


def target_series(name: str, order: int, r: int | None = None) -> TruncatedSeries:
    rule = target_rule(name, r, order)
    return TruncatedSeries([rule(n) for n in range(order + 1)], order)


def target_sequence(name: str, length: int, r: int | None = None) -> list:
    rule = target_rule(name, r, length)
    return [rule(n) for n in range(length)]


# human-readable description of each target, shown in reports
DESCRIPTIONS = {
    "E": "sum E_n x^n",
    "E_shift1": "sum E_{n+1} x^n",
    "E_shift2": "sum E_{n+2} x^n",
    "E_from1": "sum_{n>=1} E_n x^n",
    "E_even": "sum E_{2n} x^{2n}",
    "E_odd": "sum E_{2n+1} x^{2n+1}",
    "E_odd_packed": "sum E_{2n+1} x^n",
    "E_odd_packed_from3": "sum E_{2n+3} x^n",
    "E_odd_interleaved": "sum E_{2n+1} x^{2n}",
    "E_odd_from3_odd": "sum E_{2n+3} x^{2n+1}",
    "e": "tan(x) + sec(x)",
    "e_shift1": "sum e_{n+1} x^n",
    "e_shift2": "sum e_{n+2} x^n",
    "e_shift3": "sum e_{n+3} x^n",
    "e_shift4": "sum e_{n+4} x^n",
    "e_odd_interleaved": "tan(x)/x",
    "e_odd_packed": "sum e_{2n+1} x^n",
    "e_odd_from3_odd": "(tan(x) - x)/x^2",
    "tan": "tan(x)",
    "tanh": "tanh(x)",
    "e_odd_from3_interleaved": "sum e_{2n+3} x^{2n}",
    "e_odd_packed_from3": "sum e_{2n+3} x^n",
    "e_odd_packed_from5": "sum e_{2n+5} x^n",
    "e_odd_packed_from7": "sum e_{2n+7} x^n",
    "Er_interleaved": "sec(x)^r: sum E^(r)_{2n} x^{2n}",
    "Er_packed": "sum E^(r)_{2n} x^n",
    "Er_packed_from1": "sum E^(r)_{2n+2} x^n",
    "Er_over_r_odd": "sum E^(r)_{2n}/r x^{2n-1}",
}
