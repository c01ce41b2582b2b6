"""Generalized continued fractions with polynomial parts.

A fraction is written in Pringsheim form

    b0 + a1/(b1 + a2/(b2 + a3/(b3 + ...)))

with every a_j, b_j a polynomial in x.  :class:`GeneralizedCF` holds a finite
prefix; :class:`CFPattern` describes an infinite fraction by index rules with
explicit first values, and materializes prefixes on demand.

All transforms work on finite prefixes and are exact there: the even
contraction of L levels has the value of the original's 2n-th approximant,
the odd contraction its (2n+1)-th, and chop/haircut/equivalence keep the
value of the prefix unchanged.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import (AlphaDegenerate, DepthInsufficient, DivisionFails, ExactArithmeticError,
                     InsufficientLevels, NonInvertibleConstantTerm, NonInvertibleDenominator,
                     ZeroFactor)
from .exact import GaussianRational, Poly, QPolynomial, exact_div, format_scalar, to_fraction
from .series import TruncatedSeries

X = Poly.gen()
_SCALARS = (int, Fraction, GaussianRational, QPolynomial)


def as_poly(p) -> Poly:
    if isinstance(p, Poly):
        return p
    if isinstance(p, _SCALARS):
        return Poly((p,))
    if isinstance(p, (list, tuple)):
        return Poly(p)
    raise TypeError(f"cannot read {p!r} as a polynomial in x")


def _exact(num: Poly, den: Poly, what: str) -> Poly:
    try:
        return num / den
    except (ExactArithmeticError, ZeroDivisionError) as exc:
        raise DivisionFails(f"{what}: ({num}) / ({den}) is not a polynomial") from exc


@dataclass(frozen=True)
class GeneralizedCF:
    b0: Poly
    levels: tuple  # ((a1, b1), (a2, b2), ...)

    def __init__(self, b0=0, levels: Sequence = ()):
        lv = tuple((as_poly(a), as_poly(b)) for a, b in levels)
        for j, (a, _) in enumerate(lv, 1):
            if a.is_zero():
                raise ValueError(f"partial numerator a_{j} is zero")
        object.__setattr__(self, "b0", as_poly(b0))
        object.__setattr__(self, "levels", lv)

    @property
    def depth(self) -> int:
        return len(self.levels)

    def a(self, j: int) -> Poly:
        return self.levels[j - 1][0]

    def b(self, j: int) -> Poly:
        return self.b0 if j == 0 else self.levels[j - 1][1]

    def prefix(self, depth: int) -> GeneralizedCF:
        if depth > self.depth:
            raise InsufficientLevels(f"asked for {depth} levels, have {self.depth}")
        return GeneralizedCF(self.b0, self.levels[:depth])

    def evaluate(self, order: int, depth: int | None = None) -> TruncatedSeries:
        return evaluate(self, order, depth)

    # -- value-level rewrites -------------------------------------------
    def add_constant(self, c) -> GeneralizedCF:
        return GeneralizedCF(self.b0 + c, self.levels)

    def scale(self, s) -> GeneralizedCF:
        """Multiply the value by s (scalar or polynomial)."""
        if not self.levels:
            return GeneralizedCF(self.b0 * s, ())
        (a1, b1), *rest = self.levels
        return GeneralizedCF(self.b0 * s, [(a1 * s, b1), *rest])

    def divide(self, s) -> GeneralizedCF:
        """Divide the value by a nonzero scalar or exactly by a polynomial."""
        if isinstance(s, Poly):
            if not self.levels:
                return GeneralizedCF(_exact(self.b0, s, "b0"), ())
            (a1, b1), *rest = self.levels
            return GeneralizedCF(_exact(self.b0, s, "b0"), [(_exact(a1, s, "a1"), b1), *rest])
        return self.scale(exact_div(1, s))

    def divide_by_x(self, k: int = 1) -> GeneralizedCF:
        return self.divide(X ** k)

    def multiply_by_x(self, k: int = 1) -> GeneralizedCF:
        return self.scale(X ** k)

    def map_polys(self, fn: Callable[[Poly], Poly]) -> GeneralizedCF:
        return GeneralizedCF(fn(self.b0), [(fn(a), fn(b)) for a, b in self.levels])

    def compose_power(self, k: int) -> GeneralizedCF:
        """Substitute x -> x^k in every part."""
        return self.map_polys(lambda p: p.compose_power(k))

    def contract_power(self, k: int) -> GeneralizedCF:
        """Substitute x^k -> x in every part."""
        try:
            return self.map_polys(lambda p: p.contract_power(k))
        except ExactArithmeticError as exc:
            raise DivisionFails(str(exc)) from exc

    def specialize(self, fn) -> GeneralizedCF:
        """Apply a coefficient-ring homomorphism (e.g. q -> 1) to every part."""
        return self.map_polys(lambda p: p.map_coeffs(fn))

    # -- io -------------------------------------------------------------
    def to_dict(self) -> dict:
        return {"b0": format_scalar(self.b0),
                "levels": [{"a": format_scalar(a), "b": format_scalar(b)} for a, b in self.levels]}

    @classmethod
    def from_dict(cls, data: dict) -> GeneralizedCF:
        def poly(cs):
            return Poly([to_fraction(c) for c in cs])
        return cls(poly(data.get("b0", [])),
                   [(poly(lv["a"]), poly(lv["b"])) for lv in data.get("levels", [])])

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> GeneralizedCF:
        return cls.from_dict(json.loads(text))

    def __str__(self):
        parts = [f"({self.b0})"] if not self.b0.is_zero() else []
        for a, b in self.levels:
            parts.append(f"({a})/({b})")
        return " + ".join(parts) + (" + ..." if self.levels else "")


class CFPattern:
    """An infinite continued fraction given by index rules.

    ``a_rule(j)`` and ``b_rule(j)`` give the general case; ``a_first`` and
    ``b_first`` map indices to explicit first values, which take precedence
    (an index listed there is never fed to the rule).
    """

    def __init__(self, a_rule: Callable[[int], object], b_rule: Callable[[int], object],
                 b0=0, a_first: dict | None = None, b_first: dict | None = None,
                 name: str = ""):
        self.a_rule = a_rule
        self.b_rule = b_rule
        self.b0 = as_poly(b0)
        self.a_first = {j: as_poly(v) for j, v in (a_first or {}).items()}
        self.b_first = {j: as_poly(v) for j, v in (b_first or {}).items()}
        self.name = name
        self._cache: dict[int, tuple[Poly, Poly]] = {}

    def level(self, j: int) -> tuple[Poly, Poly]:
        if j < 1:
            raise IndexError("levels start at 1")
        hit = self._cache.get(j)
        if hit is None:
            a = self.a_first[j] if j in self.a_first else as_poly(self.a_rule(j))
            b = self.b_first[j] if j in self.b_first else as_poly(self.b_rule(j))
            hit = self._cache.setdefault(j, (a, b))
        return hit

    def a(self, j: int) -> Poly:
        return self.level(j)[0]

    def b(self, j: int) -> Poly:
        return self.b0 if j == 0 else self.level(j)[1]

    def materialize(self, depth: int) -> GeneralizedCF:
        return GeneralizedCF(self.b0, [self.level(j) for j in range(1, depth + 1)])

    def depth_for(self, order: int, max_depth: int | None = None) -> int:
        """Smallest depth whose truncation error provably lies beyond x^order.

        Valid when every b_j has a unit constant term: the tail cut below
        level L moves the value only from x^(v(a_1)+...+v(a_{L+1})) on.
        """
        cap = max_depth if max_depth is not None else 4 * order + 16
        total = 0
        for j in range(1, cap + 2):
            a, b = self.level(j)
            if b.coefficient(0) == 0:
                return cap
            total += a.valuation
            if total > order:
                return j - 1
        return cap

    def evaluate(self, order: int, depth: int | None = None, certify: bool = False) -> TruncatedSeries:
        if depth is None:
            depth = self.depth_for(order)
        return evaluate(self, order, depth, certify=certify)


def _evaluate_prefix(b0: Poly, levels, order: int) -> TruncatedSeries:
    tail = TruncatedSeries.zero(order)
    for j in range(len(levels), 0, -1):
        a, b = levels[j - 1]
        denom = tail + b
        try:
            tail = TruncatedSeries.from_poly(a, denom.order) / denom
        except NonInvertibleConstantTerm as exc:
            raise NonInvertibleDenominator(f"level {j}: {exc}") from exc
    return tail + b0


def evaluate(cf, order: int, depth: int | None = None, certify: bool = False) -> TruncatedSeries:
    """Value of the fraction cut at ``depth`` (tail 0) as a series to x^order.

    With ``certify`` the cut is also made one level deeper and the two values
    must agree to ``order``; otherwise :class:`DepthInsufficient` is raised.
    """
    if isinstance(cf, CFPattern):
        if depth is None:
            depth = cf.depth_for(order)
        levels = [cf.level(j) for j in range(1, depth + 2 if certify else depth + 1)]
        b0 = cf.b0
    else:
        if depth is None:
            depth = cf.depth
        if depth > cf.depth or (certify and depth + 1 > cf.depth):
            raise InsufficientLevels(f"fraction has only {cf.depth} levels")
        levels = list(cf.levels[:depth + 1 if certify else depth])
        b0 = cf.b0
    value = _evaluate_prefix(b0, levels[:depth], order)
    if certify:
        deeper = _evaluate_prefix(b0, levels[:depth + 1], order)
        top = min(value.order, deeper.order, order)
        if top < order or not value.agrees_with(deeper, top):
            raise DepthInsufficient(f"depth {depth} does not settle the value to x^{order}")
    return value


def is_certified(cf, order: int, depth: int) -> bool:
    try:
        evaluate(cf, order, depth, certify=True)
    except DepthInsufficient:
        return False
    return True


def _prefix_of(cf, depth: int | None) -> GeneralizedCF:
    if isinstance(cf, CFPattern):
        if depth is None:
            raise ValueError("a depth is required to transform an infinite pattern")
        return cf.materialize(depth)
    return cf if depth is None else cf.prefix(depth)


# -- contractions --------------------------------------------------------

def contract_even(cf, depth: int | None = None) -> GeneralizedCF:
    cf = _prefix_of(cf, depth)
    L = cf.depth
    if L < 2:
        raise InsufficientLevels("even contraction needs at least 2 levels")
    a, b = cf.a, cf.b
    levels = [(a(1) * b(2), b(1) * b(2) + a(2))]
    for j in range(2, L // 2 + 1):
        if j == 2:
            num = -a(2) * a(3) * b(4)
        else:
            num = -a(2 * j - 2) * a(2 * j - 1) * b(2 * j - 4) * b(2 * j)
        den = b(2 * j - 2) * b(2 * j - 1) * b(2 * j) + a(2 * j) * b(2 * j - 2) + a(2 * j - 1) * b(2 * j)
        levels.append((num, den))
    return GeneralizedCF(cf.b0, levels)


def contract_odd(cf, depth: int | None = None) -> GeneralizedCF:
    cf = _prefix_of(cf, depth)
    L = cf.depth
    if L < 1:
        raise InsufficientLevels("odd contraction needs at least 1 level")
    a, b = cf.a, cf.b
    new_b0 = _exact(cf.b0 * b(1) + a(1), b(1), "odd contraction b'_0")
    levels = []
    if L >= 3:
        levels.append((_exact(-a(1) * a(2) * b(3), b(1), "odd contraction a'_1"),
                       b(1) * b(2) * b(3) + a(3) * b(1) + a(2) * b(3)))
    for j in range(2, (L - 1) // 2 + 1):
        num = -a(2 * j - 1) * a(2 * j) * b(2 * j - 3) * b(2 * j + 1)
        den = (b(2 * j - 1) * b(2 * j) * b(2 * j + 1) + a(2 * j + 1) * b(2 * j - 1)
               + a(2 * j) * b(2 * j + 1))
        levels.append((num, den))
    return GeneralizedCF(new_b0, levels)


def chop(cf, position: int = 1, depth: int | None = None) -> GeneralizedCF:
    """Chop contraction applied to the tail that starts at b_{position-1}."""
    cf = _prefix_of(cf, depth)
    p = position
    L = cf.depth
    if p < 1 or L < p + 1:
        raise InsufficientLevels(f"chop at position {p} needs {p + 1} levels, have {L}")
    a, b = cf.a, cf.b
    head_b = _exact(b(p - 1) * b(p) + a(p), b(p), f"chop b'_{p - 1}")
    new_a = _exact(-a(p) * a(p + 1), b(p), f"chop a'_{p}")
    new_b = b(p) * b(p + 1) + a(p + 1)
    levels = list(cf.levels)
    out = levels[:p - 1]
    if p == 1:
        b0 = head_b
    else:
        b0 = cf.b0
        out[p - 2] = (out[p - 2][0], head_b)
    out.append((new_a, new_b))
    if L >= p + 2:
        out.append((a(p + 2) * b(p), b(p + 2)))
        out.extend(levels[p + 2:])
    return GeneralizedCF(b0, out)


def haircut(cf, alpha, position: int = 1, depth: int | None = None) -> GeneralizedCF:
    """Haircut contraction with parameter alpha on the tail starting at b_{position-1}."""
    cf = _prefix_of(cf, depth)
    p = position
    L = cf.depth
    if p < 1 or L < p:
        raise InsufficientLevels(f"haircut at position {p} needs {p} levels, have {L}")
    a, b = cf.a, cf.b
    alpha = as_poly(alpha)
    rest = a(p) - alpha * b(p)
    if rest.is_zero():
        raise AlphaDegenerate(f"alpha = a_{p}/b_{p}")
    levels = list(cf.levels)
    out = levels[:p - 1]
    if p == 1:
        b0 = cf.b0 + alpha
    else:
        b0 = cf.b0
        out[p - 2] = (out[p - 2][0], out[p - 2][1] + alpha)
    out.append((rest, b(p)))
    if L >= p + 1:
        out.append((a(p) * a(p + 1), b(p + 1) * a(p) - b(p) * b(p + 1) * alpha - a(p + 1) * alpha))
    if L >= p + 2:
        out.append((a(p + 2) * rest, b(p + 2)))
        out.extend(levels[p + 2:])
    return GeneralizedCF(b0, out)


def equivalence_scale(cf, factors: Sequence, depth: int | None = None) -> GeneralizedCF:
    """a_j -> r_{j-1} r_j a_j, b_j -> r_j b_j with r_0 = 1; missing factors are 1."""
    cf = _prefix_of(cf, depth)
    rs = [1] + list(factors) + [1] * max(cf.depth - len(factors), 0)
    for j, r in enumerate(rs[1:cf.depth + 1], 1):
        if r == 0:
            raise ZeroFactor(f"factor r_{j} is zero")
    levels = [(rs[j - 1] * rs[j] * a, rs[j] * b) for j, (a, b) in enumerate(cf.levels, 1)]
    return GeneralizedCF(cf.b0, levels)


def normalize(cf, depth: int | None = None) -> GeneralizedCF:
    """Equivalence transform making every b_j start with 1 (lowest term 1).

    Factors may be 1/(c x^v); the numerators must then divide exactly.
    """
    cf = _prefix_of(cf, depth)
    prev_scale, prev_shift = Fraction(1), 0
    levels = []
    for j, (a, b) in enumerate(cf.levels, 1):
        v = b.valuation
        if v is None:
            raise DivisionFails(f"b_{j} is zero")
        c = b.coefficient(v)
        scale = exact_div(1, c)
        try:
            new_b = b.div_x(v) * scale
            new_a = a.div_x(prev_shift + v) * (prev_scale * scale)
        except ExactArithmeticError as exc:
            raise DivisionFails(f"normalizing level {j}: {exc}") from exc
        levels.append((new_a, new_b))
        prev_scale, prev_shift = scale, v
    return GeneralizedCF(cf.b0, levels)


def _is_linear_monomial(p: Poly) -> bool:
    return p.is_monomial() and p.degree == 1


def chop_chain(cf, start: int = 1, depth: int | None = None) -> GeneralizedCF:
    """Repeat: chop at the first position p >= start where a_p and a_{p+1}
    are both degree-1 monomials, until no such position remains."""
    cf = _prefix_of(cf, depth)
    while True:
        hit = next((p for p in range(start, cf.depth)
                    if _is_linear_monomial(cf.a(p)) and _is_linear_monomial(cf.a(p + 1))), None)
        if hit is None:
            return cf
        cf = chop(cf, hit)


@dataclass(frozen=True)
class JFraction:
    """v0/(1 + u1 x) - v1 x^2/(1 + u2 x) - v2 x^2/(1 + u3 x) - ..."""

    v: tuple
    u: tuple

    def __init__(self, v: Sequence, u: Sequence):
        if any(c == 0 for c in v):
            raise ValueError("J-fraction needs nonzero v_j")
        object.__setattr__(self, "v", tuple(v))
        object.__setattr__(self, "u", tuple(u))

    def to_cf(self) -> GeneralizedCF:
        L = min(len(self.v), len(self.u))
        levels = [(self.v[0], 1 + self.u[0] * X)]
        for j in range(1, L):
            levels.append((-self.v[j] * X ** 2, 1 + self.u[j] * X))
        return GeneralizedCF(0, levels)

    def evaluate(self, order: int) -> TruncatedSeries:
        return evaluate(self.to_cf(), order)
