"""Super delta-fractions: expansion of a series, evaluation, Hankel profile.

A super delta-fraction is

    v0 x^k0 / (1 + u1(x) x - v1 x^(k0+k1+delta) / (1 + u2(x) x - v2 x^(k1+k2+delta) / ...))

with nonzero constants v_j, integers k_j >= 0 and deg u_{j+1} <= k_j + delta - 2.
Every power series has exactly one such expansion.  For delta = 2 (the Hankel
fraction) the pairs (v_j, k_j) give every Hankel determinant of the series.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .contfrac import GeneralizedCF, JFraction, X, evaluate
from .errors import InsufficientCoefficients, InsufficientLevels, NotAnHFraction
from .exact import GaussianRational, Poly, format_scalar, to_fraction
from .series import TruncatedSeries


@dataclass(frozen=True)
class Level:
    v: object
    k: int
    u: Poly  # the denominator polynomial directly below this numerator


@dataclass(frozen=True)
class SuperFraction:
    """Levels of a super delta-fraction.

    ``order`` is the precision the levels were read from; ``complete`` says the
    fraction cut after the last level reproduces the series to that order.
    Otherwise ``pending`` holds the (v, k) of the next level whose u was not
    yet determined.
    """

    delta: int
    levels: tuple = ()
    order: int | None = None
    complete: bool = True
    pending: tuple | None = None

    def __post_init__(self):
        if self.delta < 1:
            raise ValueError("delta must be >= 1")
        object.__setattr__(self, "levels", tuple(self.levels))
        for j, lv in enumerate(self.levels):
            if lv.v == 0:
                raise ValueError(f"v_{j} is zero")
            if lv.k < 0:
                raise ValueError(f"k_{j} is negative")
            if lv.u.degree > lv.k + self.delta - 2:
                raise ValueError(f"u_{j + 1} has degree {lv.u.degree} > k_{j} + delta - 2")

    @property
    def k_pattern(self) -> tuple:
        return tuple(lv.k for lv in self.levels)

    @property
    def certified_order(self) -> int:
        """Order to which the cut fraction equals the series it came from."""
        if self.order is None:
            raise ValueError("fraction was not produced by expansion")
        if self.complete:
            return self.order
        offset = sum(2 * lv.k + self.delta for lv in self.levels)
        return offset + self.pending[1] - 1

    def to_cf(self) -> GeneralizedCF:
        out = []
        prev_k = None
        for lv in self.levels:
            num = lv.v * X ** lv.k if prev_k is None else -lv.v * X ** (prev_k + lv.k + self.delta)
            out.append((num, 1 + lv.u * X))
            prev_k = lv.k
        return GeneralizedCF(0, out)

    def evaluate(self, order: int) -> TruncatedSeries:
        return evaluate_super(self, order)

    def to_dict(self) -> dict:
        return {"delta": self.delta,
                "levels": [{"v": format_scalar(lv.v), "k": lv.k, "u": format_scalar(lv.u)}
                           for lv in self.levels]}

    @classmethod
    def from_dict(cls, data: dict) -> SuperFraction:
        levels = [Level(_read_scalar(lv["v"]), int(lv["k"]),
                        Poly([_read_scalar(c) for c in lv.get("u", [])]))
                  for lv in data.get("levels", [])]
        return cls(int(data["delta"]), levels)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> SuperFraction:
        return cls.from_dict(json.loads(text))


def _read_scalar(c):
    if isinstance(c, dict):
        return GaussianRational(to_fraction(c["re"]), to_fraction(c["im"]))
    return to_fraction(c)


def expand(f: TruncatedSeries, delta: int = 2) -> SuperFraction:
    """Super delta-fraction of ``f``, keeping only levels fixed by its trusted coefficients."""
    if delta < 1:
        raise ValueError("delta must be >= 1")
    levels = []
    rem = f
    while True:
        k = rem.valuation
        if k is None:
            return SuperFraction(delta, levels, f.order, True)
        v = rem[k]
        quo = TruncatedSeries.from_poly(Poly.monomial(v, k), rem.order) / rem
        top = k + delta - 1
        if quo.order < top:
            return SuperFraction(delta, levels, f.order, False, (v, k))
        u = Poly(quo.coeffs[1:top + 1])
        levels.append(Level(v, k, u))
        tail = quo - 1 - u * X
        rest = tail.coeffs[top + 1:]
        rem = -TruncatedSeries(rest, tail.order - top - 1)


def evaluate_super(sf: SuperFraction, order: int) -> TruncatedSeries:
    if not sf.levels:
        return TruncatedSeries.zero(order)
    return evaluate(sf.to_cf(), order)


def classify(sf: SuperFraction) -> str:
    flat = all(lv.k == 0 for lv in sf.levels)
    if sf.delta == 1 and flat:
        return "S"
    if sf.delta == 2:
        return "J" if flat else "H"
    return "general"


@dataclass(frozen=True)
class HankelProfile:
    s: tuple
    eps: tuple
    values: dict = field(default_factory=dict)
    known_through: int | None = None  # every H_n with n <= this is determined

    def determinant(self, n: int):
        if n in self.values:
            return self.values[n]
        if self.known_through is not None and n > self.known_through:
            raise InsufficientCoefficients(f"H_{n} is not determined by the expansion")
        return 0


def hankel_profile(sf: SuperFraction) -> HankelProfile:
    if sf.delta != 2:
        raise NotAnHFraction(f"delta = {sf.delta}")
    pairs = [(lv.v, lv.k) for lv in sf.levels]
    if not sf.complete and sf.pending is not None:
        pairs.append(sf.pending)
    s, eps = [0], [0]
    for _, k in pairs:
        s.append(s[-1] + k + 1)
        eps.append(eps[-1] + k * (k + 1) // 2)
    values = {}
    for j, sj in enumerate(s):
        val = -1 if eps[j] % 2 else 1
        for i in range(j):
            val = val * pairs[i][0] ** (sj - s[i])
        values[sj] = val
    if not sf.complete:
        known = s[-1]
    elif sf.order is not None:
        known = max(s[-1], sf.order // 2 + 1)
    else:
        known = None
    return HankelProfile(tuple(s), tuple(eps), values, known)


def heilermann(jf: JFraction, n: int):
    """H_n = v0^n v1^(n-1) ... v_{n-1} for the series of a J-fraction."""
    if n > len(jf.v):
        raise InsufficientLevels(f"need v_0..v_{n - 1}, have {len(jf.v)}")
    out = Fraction(1)
    for i in range(n):
        out = out * jf.v[i] ** (n - i)
    return out


def to_jfraction(sf: SuperFraction) -> JFraction:
    if classify(sf) != "J":
        raise NotAnHFraction("not a J-fraction")
    return JFraction([lv.v for lv in sf.levels], [lv.u.coefficient(0) for lv in sf.levels])
