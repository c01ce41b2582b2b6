"""Truncated formal power series over an exact ring.

A :class:`TruncatedSeries` knows its coefficients c_0..c_N and the order N
up to which they are trusted.  Binary operations keep the smaller order;
division by a series with zero constant term lowers it further by the
divisor's valuation.  Nothing beyond the trusted order is ever reported.
"""
from __future__ import annotations

import json
import math
from fractions import Fraction

from .errors import NonInvertibleConstantTerm, ShiftBeyondOrder, UnknownSeriesName
from .exact import GaussianRational, Poly, QPolynomial, exact_div, format_scalar, inverse, to_fraction

_SCALARS = (int, Fraction, GaussianRational, QPolynomial)


def _coerce(c):
    if isinstance(c, int) and not isinstance(c, bool):
        return Fraction(c)
    return c


class TruncatedSeries:
    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order: int | None = None):
        cs = [_coerce(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < -1:
            raise ValueError("order must be >= -1")
        if len(cs) < order + 1:
            cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        object.__setattr__(self, "coeffs", tuple(cs[:order + 1]))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- construction ---------------------------------------------------
    @classmethod
    def zero(cls, order: int):
        return cls([], order)

    @classmethod
    def one(cls, order: int):
        return cls([1], order)

    @classmethod
    def from_poly(cls, p: Poly, order: int):
        return cls([p.coefficient(i) for i in range(order + 1)], order)

    @classmethod
    def from_function(cls, fn, order: int):
        return cls([fn(n) for n in range(order + 1)], order)

    # -- access ---------------------------------------------------------
    def __getitem__(self, n):
        if isinstance(n, slice):
            return self.coeffs[n]
        if n < 0 or n > self.order:
            raise IndexError(f"coefficient {n} is beyond trusted order {self.order}")
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    @property
    def valuation(self) -> int | None:
        """Index of the first nonzero trusted coefficient, or None."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return None

    def is_zero(self) -> bool:
        return self.valuation is None

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot raise trusted order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[:order + 1], order)

    def agrees_with(self, other: TruncatedSeries, order: int | None = None) -> bool:
        return self.first_mismatch(other, order) is None

    def first_mismatch(self, other: TruncatedSeries, order: int | None = None):
        """(n, self[n], other[n]) for the first differing index, else None."""
        top = min(self.order, other.order) if order is None else order
        if top > min(self.order, other.order):
            raise ValueError(f"comparison order {top} exceeds trusted orders")
        for n in range(top + 1):
            if self.coeffs[n] != other.coeffs[n]:
                return n, self.coeffs[n], other.coeffs[n]
        return None

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    # -- ring operations ------------------------------------------------
    def _lift(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, Poly):
            return TruncatedSeries.from_poly(other, self.order)
        if isinstance(other, _SCALARS):
            return TruncatedSeries([other], self.order)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        return TruncatedSeries([self.coeffs[i] + o.coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            return TruncatedSeries([c * other for c in self.coeffs], self.order)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = min(self.order, o.order)
        a, b = self.coeffs, o.coeffs
        out = [0] * (n + 1)
        for i in range(n + 1):
            x = a[i]
            if x == 0:
                continue
            for j in range(n + 1 - i):
                y = b[j]
                if y != 0:
                    out[i + j] = out[i + j] + x * y
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        out = TruncatedSeries.one(self.order)
        for _ in range(e):
            out = out * self
        return out

    def invert(self) -> TruncatedSeries:
        """1/f; the constant term must be a unit of the coefficient ring."""
        if self.order < 0:
            return self
        try:
            inv0 = inverse(self.coeffs[0])
        except ZeroDivisionError as exc:
            raise NonInvertibleConstantTerm(
                f"constant term {self.coeffs[0]} has no inverse") from exc
        c = self.coeffs
        out = [inv0]
        for n in range(1, self.order + 1):
            s = 0
            for k in range(1, n + 1):
                if c[k] != 0:
                    s = s + c[k] * out[n - k]
            out.append(-s * inv0)
        return TruncatedSeries(out, self.order)

    def __truediv__(self, other):
        if isinstance(other, _SCALARS):
            return TruncatedSeries([exact_div(c, other) for c in self.coeffs], self.order)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        v = o.valuation
        if v is None:
            raise NonInvertibleConstantTerm("division by a series that is zero to its trusted order")
        if v == 0:
            n = min(self.order, o.order)
            return self.truncate(n) * o.truncate(n).invert()
        # divisor = x^v * unit: numerator must vanish below x^v
        for i in range(min(v, self.order + 1)):
            if self.coeffs[i] != 0:
                raise NonInvertibleConstantTerm(
                    f"quotient is not a power series (numerator has x^{i}, divisor has valuation {v})")
        if self.order < v - 1:
            raise NonInvertibleConstantTerm("numerator order too small to certify the quotient")
        return self._drop(v) / o._drop(v)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    # -- resequencing ---------------------------------------------------
    def shift_left(self, m: int) -> TruncatedSeries:
        """(f - (c_0 + ... + c_{m-1} x^{m-1})) / x^m."""
        if m > self.order:
            raise ShiftBeyondOrder(f"shift by {m} exceeds trusted order {self.order}")
        return self._drop(m)

    def _drop(self, m: int) -> TruncatedSeries:
        return TruncatedSeries(self.coeffs[m:], self.order - m)

    def multiply_by_x(self, k: int = 1) -> TruncatedSeries:
        return TruncatedSeries([0] * k + list(self.coeffs), self.order + k)

    def substitute_x_squared(self) -> TruncatedSeries:
        """Read a series in x^2 as a series in x: c_{2n} becomes the x^n coefficient."""
        return TruncatedSeries(self.coeffs[0::2], self.order // 2)

    even_subsequence = substitute_x_squared

    def odd_subsequence(self) -> TruncatedSeries:
        """c_{2n+1} becomes the x^n coefficient."""
        return TruncatedSeries(self.coeffs[1::2], (self.order - 1) // 2)

    def interleave_zero(self) -> TruncatedSeries:
        """f(x^2): c_n moves to x^{2n}, zeros in between."""
        out = []
        for c in self.coeffs:
            out.extend([c, 0])
        return TruncatedSeries(out, 2 * self.order + 1)

    def even_part(self) -> TruncatedSeries:
        return TruncatedSeries([c if i % 2 == 0 else 0 for i, c in enumerate(self.coeffs)], self.order)

    def odd_part(self) -> TruncatedSeries:
        return TruncatedSeries([c if i % 2 else 0 for i, c in enumerate(self.coeffs)], self.order)

    def scale_coeff_by_factorial(self) -> TruncatedSeries:
        """EGF -> OGF: c_n becomes n! c_n."""
        return TruncatedSeries([c * math.factorial(i) for i, c in enumerate(self.coeffs)], self.order)

    def divide_coeff_by_factorial(self) -> TruncatedSeries:
        return TruncatedSeries([exact_div(c, math.factorial(i)) for i, c in enumerate(self.coeffs)],
                               self.order)

    def derivative(self) -> TruncatedSeries:
        return TruncatedSeries([i * c for i, c in enumerate(self.coeffs) if i], self.order - 1)

    def negate_x(self) -> TruncatedSeries:
        """f(-x)."""
        return TruncatedSeries([-c if i % 2 else c for i, c in enumerate(self.coeffs)], self.order)

    def scale_x(self, s) -> TruncatedSeries:
        """f(s x) for a scalar s."""
        out, p = [], 1
        for c in self.coeffs:
            out.append(c * p)
            p = p * s
        return TruncatedSeries(out, self.order)

    def map_coeffs(self, fn) -> TruncatedSeries:
        """Apply a ring homomorphism (e.g. q -> -1) coefficientwise."""
        return TruncatedSeries([fn(c) for c in self.coeffs], self.order)

    def transform(self, kind: str, m: int | None = None) -> TruncatedSeries:
        if kind == "shift_left":
            return self.shift_left(1 if m is None else m)
        if kind == "multiply_by_x":
            return self.multiply_by_x(1 if m is None else m)
        try:
            fn = _TRANSFORMS[kind]
        except KeyError:
            raise ValueError(f"unknown series transform {kind!r}") from None
        return fn(self)

    # -- io -------------------------------------------------------------
    def to_dict(self) -> dict:
        return {"order": self.order, "coeffs": [format_scalar(c) for c in self.coeffs]}

    @classmethod
    def from_dict(cls, data: dict) -> TruncatedSeries:
        return cls([to_fraction(c) for c in data["coeffs"]], int(data["order"]))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> TruncatedSeries:
        return cls.from_dict(json.loads(text))

    def __repr__(self):
        return f"TruncatedSeries([{', '.join(str(c) for c in self.coeffs)}], order={self.order})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            cs = str(c) if isinstance(c, (int, Fraction)) else f"({c})"
            terms.append(cs if not mono else (mono if c == 1 else f"{cs}*{mono}"))
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(x^{self.order + 1})"


_TRANSFORMS = {
    "substitute_x_squared": TruncatedSeries.substitute_x_squared,
    "even_subsequence": TruncatedSeries.even_subsequence,
    "odd_subsequence": TruncatedSeries.odd_subsequence,
    "interleave_zero": TruncatedSeries.interleave_zero,
    "even_part": TruncatedSeries.even_part,
    "odd_part": TruncatedSeries.odd_part,
    "scale_coeff_by_factorial": TruncatedSeries.scale_coeff_by_factorial,
    "divide_coeff_by_factorial": TruncatedSeries.divide_coeff_by_factorial,
    "derivative": TruncatedSeries.derivative,
    "negate_x": TruncatedSeries.negate_x,
}


def sin_series(order: int) -> TruncatedSeries:
    return TruncatedSeries.from_function(
        lambda n: Fraction((-1) ** (n // 2), math.factorial(n)) if n % 2 else 0, order)


def cos_series(order: int) -> TruncatedSeries:
    return TruncatedSeries.from_function(
        lambda n: 0 if n % 2 else Fraction((-1) ** (n // 2), math.factorial(n)), order)


def named_series(name: str, order: int, r: int | None = None) -> TruncatedSeries:
    """Exact Taylor series of sin, cos, tan, sec, tan_plus_sec or sec_pow(r)."""
    if name == "sin":
        return sin_series(order)
    if name == "cos":
        return cos_series(order)
    if name == "sec":
        return cos_series(order).invert()
    if name == "tan":
        return sin_series(order) * cos_series(order).invert()
    if name == "tan_plus_sec":
        return (sin_series(order) + 1) * cos_series(order).invert()
    if name == "sec_pow":
        if r is None or r < 1:
            raise ValueError("sec_pow needs an integer r >= 1")
        return named_series("sec", order) ** r
    raise UnknownSeriesName(name)
