"""Permutation statistics by exhaustive enumeration.

Positions are classified with the boundary letters sigma_0 = sigma_{n+1} = +inf
(valley, peak, double ascent, double descent); ascents and descents are
counted over the interior comparisons j = 1..n-1.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Sequence

from .contfrac import CFPattern, X
from .errors import BoundExceeded, NotAPermutation
from .exact import GaussianRational

MAX_N = 9
_INF = float("inf")


@dataclass(frozen=True)
class PermutationStatistics:
    val: int
    pk: int
    da: int
    dd: int
    des: int
    asc: int


def _classify(sigma: Sequence[int]):
    """Per-position kinds plus interior ascent/descent counts."""
    n = len(sigma)
    padded = (_INF, *sigma, _INF)
    kinds = []
    for j in range(1, n + 1):
        left, mid, right = padded[j - 1], padded[j], padded[j + 1]
        if left > mid < right:
            kinds.append("val")
        elif left < mid > right:
            kinds.append("pk")
        elif left < mid < right:
            kinds.append("da")
        else:
            kinds.append("dd")
    asc = sum(1 for j in range(n - 1) if sigma[j] < sigma[j + 1])
    return kinds, asc, n - 1 - asc


def _check(sigma: Sequence[int]) -> tuple:
    sigma = tuple(sigma)
    if not sigma or sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise NotAPermutation(f"{sigma!r} is not a permutation of 1..n")
    return sigma


def stats(sigma: Sequence[int]) -> PermutationStatistics:
    sigma = _check(sigma)
    kinds, asc, des = _classify(sigma)
    c = Counter(kinds)
    return PermutationStatistics(c["val"], c["pk"], c["da"], c["dd"], des, asc)


def weights(sigma: Sequence[int]) -> dict:
    """The four weights W1..W4 of a single permutation."""
    sigma = _check(sigma)
    kinds, asc, des = _classify(sigma)
    return _weights_from(_key(kinds, asc, des))


def _key(kinds, asc, des):
    c = Counter(kinds)
    tail = Counter(kinds[1:])  # positions j = 2..n
    n_tail = len(kinds) - 1
    return (c["val"], c["pk"], c["da"], c["dd"], asc, des, tail["da"], tail["pk"], n_tail)


_HALF = Fraction(1, 2)
_UP = GaussianRational(_HALF, _HALF)
_DOWN = GaussianRational(_HALF, -_HALF)


def _weights_from(key):
    _, _, _, _, asc, des, da2, pk2, n2 = key
    return {
        "W1": Fraction((-1) ** da2),
        "W2": Fraction(0) ** da2 * _HALF ** pk2,
        "W3": _HALF ** (n2 - pk2),
        "W4": _UP ** asc * _DOWN ** des,
    }


def _bound(n: int, limit: int | None):
    limit = MAX_N if limit is None else limit
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > limit:
        raise BoundExceeded(f"n = {n} exceeds the enumeration bound {limit}")


@lru_cache(maxsize=None)
def _distribution(n: int) -> Counter:
    dist = Counter()
    for sigma in permutations(range(1, n + 1)):
        kinds, asc, des = _classify(sigma)
        dist[_key(kinds, asc, des)] += 1
    return dist


def distribution(n: int, limit: int | None = None) -> Counter:
    """Multiplicities of the statistic tuples over S_n (cached per n)."""
    _bound(n, limit)
    return _distribution(n)


def weight_sum(n: int, kind: str, limit: int | None = None):
    if kind not in ("W1", "W2", "W3", "W4"):
        raise ValueError(f"unknown weight {kind!r}")
    total = 0
    for key, mult in distribution(n, limit).items():
        total = total + mult * _weights_from(key)[kind]
    return total


def quadruple_sum(n: int, u1, u2, u3, u4, limit: int | None = None):
    """Sum over S_n of u1^val u2^pk u3^da u4^dd."""
    total = 0
    for (val, pk, da, dd, *_), mult in distribution(n, limit).items():
        total = total + mult * _pow(u1, val) * _pow(u2, pk) * _pow(u3, da) * _pow(u4, dd)
    return total


def _pow(u, e: int):
    return 1 if e == 0 else u ** e


def peak_da_polynomial(n: int, t, s, limit: int | None = None):
    """P_n(t, s) = sum over S_n of t^pk s^da."""
    return quadruple_sum(n, 1, t, s, 1, limit)


def peak_da_coefficients(n: int, limit: int | None = None) -> dict:
    """P_n(t, s) as a map (pk, da) -> count."""
    out = Counter()
    for (_, pk, da, *_), mult in distribution(n, limit).items():
        out[(pk, da)] += mult
    return dict(out)


def flajolet_pattern(u1, u2, u3, u4) -> CFPattern:
    return CFPattern(lambda k: -(k - 1) * k * u1 * u2 * X ** 2,
                     lambda k: 1 - k * (u3 + u4) * X,
                     b0=0, a_first={1: u1 * X})


def verify_flajolet_cf(n_max: int, u1, u2, u3, u4, limit: int | None = None) -> bool:
    if u1 == 0:
        return all(quadruple_sum(n, u1, u2, u3, u4, limit) == 0 for n in range(1, n_max + 1))
    cf = flajolet_pattern(u1, u2, u3, u4)
    if u1 * u2 == 0:
        value = cf.materialize(1).evaluate(n_max)
    else:
        value = cf.evaluate(n_max, certify=True)
    if value[0] != 0:
        return False
    return all(value[n] == quadruple_sum(n, u1, u2, u3, u4, limit) for n in range(1, n_max + 1))


def exp_pattern(u1, u2, u3, u4) -> CFPattern:
    c = Fraction(u3 + u4) / 2
    d = c * c - u1 * u2
    return CFPattern(lambda k: d * X ** 2, lambda k: 2 * k - 1,
                     b0=0, a_first={1: u1 * X}, b_first={1: 1 - c * X})


def verify_exp_cf(n_max: int, u1, u2, u3, u4, limit: int | None = None) -> bool:
    if u1 == 0:
        return all(quadruple_sum(n, u1, u2, u3, u4, limit) == 0 for n in range(1, n_max + 1))
    cf = exp_pattern(u1, u2, u3, u4)
    c = Fraction(u3 + u4) / 2
    if c * c == u1 * u2:
        value = cf.materialize(1).evaluate(n_max)  # every deeper numerator vanishes
    else:
        value = cf.evaluate(n_max, certify=True)
    if value[0] != 0:
        return False
    return all(value[n] * factorial(n) == quadruple_sum(n, u1, u2, u3, u4, limit)
               for n in range(1, n_max + 1))
