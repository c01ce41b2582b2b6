"""Exact coefficient rings: Q, Q(i) and univariate polynomials.

Rationals are plain :class:`fractions.Fraction` values (ints are accepted
wherever a rational is).  Everything here is immutable, so values can be
shared freely between threads.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import ExactArithmeticError

Rational = Fraction

__all__ = [
    "Rational", "GaussianRational", "QPolynomial", "Poly",
    "binomial", "q_int", "q_factorial", "q_binomial",
    "rising", "inverse", "exact_div", "to_fraction", "parse_fraction",
    "format_scalar",
]


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def parse_fraction(text: str) -> Fraction:
    """Parse "p/q" or "p".  Decimal points are rejected on purpose."""
    text = text.strip()
    if "." in text or "e" in text.lower():
        raise ValueError(f"decimal notation is not exact: {text!r}")
    return Fraction(text)


def exact_div(a, b):
    """a / b in whichever exact ring a and b live in."""
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return a / b


def inverse(c):
    """Multiplicative inverse of a ring element; ZeroDivisionError if none."""
    if isinstance(c, int):
        return Fraction(1, c)
    return 1 / c


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n or n < 0:
        return 0
    return math.comb(n, k)


def rising(r, k: int):
    """Rising factorial r(r+1)...(r+k-1); 1 when k = 0."""
    out = 1
    for i in range(k):
        out = out * (r + i)
    return out


class GaussianRational:
    """a + b*i with rational a, b."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", to_fraction(re))
        object.__setattr__(self, "im", to_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """|z|^2 = z * conj(z)."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> GaussianRational:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of 0 in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self if e >= 0 else self.inverse()
        out = GaussianRational(1)
        for _ in range(abs(e)):
            out = out * base
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


I = GaussianRational(0, 1)


class _DensePoly:
    """Dense univariate polynomial; subclasses decide what counts as a scalar."""

    __slots__ = ("coeffs",)
    var = "x"

    def __init__(self, coeffs=()):
        cs = [self._coerce_coeff(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    # -- coercion hooks -------------------------------------------------
    @classmethod
    def _coerce_coeff(cls, c):
        raise NotImplementedError

    @classmethod
    def _is_scalar(cls, other) -> bool:
        raise NotImplementedError

    def _lift(self, other):
        if type(other) is type(self):
            return other
        if self._is_scalar(other):
            return type(self)((other,))
        return None

    # -- constructors ---------------------------------------------------
    @classmethod
    def monomial(cls, coeff, power: int):
        return cls([0] * power + [coeff])

    @classmethod
    def gen(cls):
        return cls((0, 1))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    # -- structure ------------------------------------------------------
    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return None

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __getitem__(self, i):
        return self.coefficient(i)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_monomial(self) -> bool:
        return sum(1 for c in self.coeffs if c != 0) == 1

    # -- ring operations ------------------------------------------------
    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        n = max(len(a), len(b))
        return type(self)(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
            for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return type(self)(-c for c in self.coeffs)

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
        if self._is_scalar(other):
            return type(self)(c * other for c in self.coeffs)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return type(self)()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return type(self)(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        out = type(self)((1,))
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = o.degree
        lead = o.lead
        quot = [0] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = exact_div(c, lead)
            quot[i - dq] = q
            for j, d in enumerate(o.coeffs):
                rem[i - dq + j] = rem[i - dq + j] - q * d
        return type(self)(quot), type(self)(rem)

    def __truediv__(self, other):
        """Exact division; raises ExactArithmeticError on a remainder."""
        if self._is_scalar(other):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero scalar")
            return type(self)(exact_div(c, other) for c in self.coeffs)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        q, r = divmod(self, o)
        if not r.is_zero():
            raise ExactArithmeticError(f"({self}) / ({o}) leaves remainder {r}")
        return q

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coefficient(0))
        return hash((type(self).__name__, self.coeffs))

    # -- evaluation and substitutions ----------------------------------
    def __call__(self, value):
        out = 0
        for c in reversed(self.coeffs):
            out = out * value + c
        return out

    def map_coeffs(self, fn):
        return type(self)(fn(c) for c in self.coeffs)

    def derivative(self):
        return type(self)(i * c for i, c in enumerate(self.coeffs) if i)

    def mul_x(self, k: int = 1):
        if k < 0:
            return self.div_x(-k)
        return type(self)([0] * k + list(self.coeffs)) if self.coeffs else self

    def div_x(self, k: int = 1):
        """Exact division by var**k."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise ExactArithmeticError(f"{self} is not divisible by {self.var}^{k}")
        return type(self)(self.coeffs[k:])

    def compose_power(self, k: int):
        """Substitute var -> var**k."""
        out = [0] * (k * max(self.degree, 0) + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return type(self)(out)

    def contract_power(self, k: int):
        """Substitute var**k -> var; every exponent must be a multiple of k."""
        for i, c in enumerate(self.coeffs):
            if c != 0 and i % k:
                raise ExactArithmeticError(
                    f"{self} has a {self.var}^{i} term, not a polynomial in {self.var}^{k}")
        return type(self)(self.coeffs[::k])

    # -- printing -------------------------------------------------------
    def __repr__(self):
        return f"{type(self).__name__}({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            cs = str(c)
            if not isinstance(c, (int, Fraction)):
                cs = f"({cs})"
            if i == 0:
                parts.append(cs)
                continue
            mono = self.var if i == 1 else f"{self.var}^{i}"
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


class QPolynomial(_DensePoly):
    """Polynomial in q with rational coefficients."""

    __slots__ = ()
    var = "q"

    @classmethod
    def _coerce_coeff(cls, c):
        return to_fraction(c)

    @classmethod
    def _is_scalar(cls, other):
        return isinstance(other, (int, Fraction))

    def __rtruediv__(self, other):
        if self._is_scalar(other):
            if self.degree != 0:
                raise ZeroDivisionError(f"{self} is not a unit in Q[q]")
            return QPolynomial((exact_div(other, self.coeffs[0]),))
        return super().__rtruediv__(other)

    def at(self, q):
        return self(q)


class Poly(_DensePoly):
    """Polynomial in x whose coefficients come from any exact ring.

    Anything that is not itself a :class:`Poly` is treated as a coefficient,
    so ``Poly`` over :class:`QPolynomial` or :class:`GaussianRational` works
    without extra plumbing.
    """

    __slots__ = ()
    var = "x"

    @classmethod
    def _coerce_coeff(cls, c):
        if isinstance(c, int) and not isinstance(c, bool):
            return Fraction(c)
        return c

    @classmethod
    def _is_scalar(cls, other):
        return not isinstance(other, Poly) and isinstance(
            other, (int, Fraction, GaussianRational, QPolynomial))

    def __rtruediv__(self, other):
        if self._is_scalar(other):
            if self.degree != 0:
                raise ZeroDivisionError(f"{self} is not a unit")
            return Poly((exact_div(other, self.coeffs[0]),))
        return super().__rtruediv__(other)


def q_int(n: int) -> QPolynomial:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    return QPolynomial([1] * max(n, 0))


def q_factorial(n: int) -> QPolynomial:
    out = QPolynomial((1,))
    for k in range(1, n + 1):
        out = out * q_int(k)
    return out


def q_binomial(n: int, k: int) -> QPolynomial:
    if k < 0 or k > n:
        return QPolynomial()
    num = q_factorial(n)
    den = q_factorial(k) * q_factorial(n - k)
    quo, rem = divmod(num, den)
    if not rem.is_zero():
        raise ExactArithmeticError(f"q-binomial ({n},{k}) left remainder {rem}")
    return quo


def format_scalar(c):
    """JSON-friendly exact rendering of a ring element."""
    if isinstance(c, (int, Fraction)):
        return str(c)
    if isinstance(c, GaussianRational):
        return {"re": str(c.re), "im": str(c.im)}
    if isinstance(c, _DensePoly):
        return [format_scalar(x) for x in c.coeffs]
    raise TypeError(f"cannot format {c!r}")
