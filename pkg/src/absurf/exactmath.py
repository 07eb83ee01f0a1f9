"""Exact scalars: arbitrary-precision rationals and real quadratic irrationals.

Every strict inequality decided by this package reduces to the exact sign
of a value ``a + b*sqrt(d)`` with rational ``a``, ``b`` and a squarefree
integer radicand ``d``.  Floating point never enters a decision; it is
reserved for SVG coordinates and for test oracles.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt

from .errors import IncompatibleRadicands, NegativeRadicand, ParseError

# The package-wide exact fraction type.  All rational quantities (degrees,
# polarization types, slopes, thresholds) are plain Fractions.
Rational = Fraction


def _fraction_sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


def square_free_decomposition(n: int) -> tuple[int, int]:
    """Split n >= 1 as s*s*d with d squarefree; returns (s, d)."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    s, d = 1, 1
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        s *= p ** (e >> 1)
        if e & 1:
            d *= p
    # wheel over 6k +- 1 up to the cube root of the remaining cofactor
    p, step = 5, 2
    while p * p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        s *= p ** (e >> 1)
        if e & 1:
            d *= p
        p += step
        step = 6 - step
    # the cofactor now has at most two prime factors: a perfect square,
    # a prime, or a product of two distinct primes
    r = isqrt(n)
    if r * r == n:
        s *= r
    else:
        d *= n
    return s, d


class QuadraticValue:
    """An exact real number a + b*sqrt(d).

    ``a`` and ``b`` are Fractions and ``d`` is a squarefree integer >= 0.
    ``d == 0`` is the canonical encoding of a pure rational (``b`` is then
    0); the constructor extracts square factors of the radicand, so equal
    reals always have identical components.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d: int = 0):
        if d < 0:
            raise NegativeRadicand(f"radicand must be nonnegative, got {d}")
        a = Fraction(a)
        b = Fraction(b)
        if b == 0 or d == 0:
            # b*sqrt(0) contributes nothing
            b, d = Fraction(0), 0
        else:
            s, d = square_free_decomposition(d)
            b *= s
            if d == 1:
                a += b
                b, d = Fraction(0), 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadraticValue is immutable")

    # -- classification ------------------------------------------------

    def is_rational(self) -> bool:
        return self.d == 0

    def is_integer(self) -> bool:
        return self.d == 0 and self.a.denominator == 1

    def as_fraction(self) -> Fraction:
        if self.d != 0:
            raise IncompatibleRadicands(f"{self} is irrational")
        return self.a

    # -- exact sign and order ------------------------------------------

    def sign(self) -> int:
        """Exact sign of the real number, from integer comparisons only."""
        sa = _fraction_sign(self.a)
        if self.b == 0:
            return sa
        sb = _fraction_sign(self.b)
        if sa == 0:
            return sb
        if sa == sb:
            return sa
        # opposite signs: |a| vs |b|*sqrt(d) decided by squaring
        return sa * _fraction_sign(self.a * self.a - self.b * self.b * self.d)

    def _common_radicand(self, other: "QuadraticValue") -> int:
        if self.d == other.d:
            return self.d
        if self.d == 0:
            return other.d
        if other.d == 0:
            return self.d
        raise IncompatibleRadicands(
            f"cannot combine sqrt({self.d}) with sqrt({other.d})"
        )

    # -- field arithmetic ----------------------------------------------

    @staticmethod
    def _coerce(x) -> "QuadraticValue":
        if isinstance(x, QuadraticValue):
            return x
        if isinstance(x, (int, Fraction)):
            return QuadraticValue(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._common_radicand(other)
        return QuadraticValue(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticValue(-self.a, -self.b, self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._common_radicand(other)
        return QuadraticValue(
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
            d,
        )

    __rmul__ = __mul__

    def _inverse(self) -> "QuadraticValue":
        norm = self.a * self.a - self.b * self.b * self.d
        if norm == 0:
            raise ZeroDivisionError("division by zero QuadraticValue")
        return QuadraticValue(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other._inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self._inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        out = QuadraticValue(1)
        base = self
        for _ in range(exponent):
            out = out * base
        return out

    # -- comparisons ----------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # canonical forms are unique, so distinct radicands never collide
        return (self.a, self.b, self.d) == (other.a, other.b, other.d)

    def __hash__(self):
        if self.d == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def _compare(self, other) -> int:
        other = self._coerce(other)
        if other is NotImplemented:
            raise TypeError(f"cannot compare QuadraticValue with {other!r}")
        return (self - other).sign()

    def __lt__(self, other):
        return self._compare(other) < 0

    def __le__(self, other):
        return self._compare(other) <= 0

    def __gt__(self, other):
        return self._compare(other) > 0

    def __ge__(self, other):
        return self._compare(other) >= 0

    # -- conversion and rendering ----------------------------------------

    def __float__(self):
        # display use only (SVG); decisions never run through here
        return float(self.a) + float(self.b) * (self.d ** 0.5)

    def __str__(self):
        if self.d == 0:
            return str(self.a)
        mag = abs(self.b)
        radical = f"sqrt({self.d})" if mag == 1 else f"{mag}*sqrt({self.d})"
        if self.a == 0:
            return radical if self.b > 0 else "-" + radical
        connector = "+" if self.b > 0 else "-"
        return f"{self.a}{connector}{radical}"

    def __repr__(self):
        return f"QuadraticValue({self.a!r}, {self.b!r}, {self.d})"


def quad_sign(v: QuadraticValue) -> int:
    """Exact sign of a + b*sqrt(d): -1, 0 or +1."""
    return v.sign()


def quad_compare(u, v) -> int:
    """Total order on a shared quadratic field: sign of u - v.

    One operand may be purely rational; two distinct nonzero radicands
    raise :class:`IncompatibleRadicands`.
    """
    u = QuadraticValue._coerce(u)
    if u is NotImplemented:
        raise TypeError("quad_compare expects QuadraticValue or rational operands")
    return u._compare(v)


def sqrt_exact(q) -> QuadraticValue:
    """Exact square root of a nonnegative rational, as r*sqrt(d).

    Square factors are pulled out of numerator and denominator, so the
    result is canonical: sqrt(8) == 2*sqrt(2), sqrt(2/9) == 1/3*sqrt(2).
    """
    q = Fraction(q)
    if q < 0:
        raise NegativeRadicand(f"square root of negative rational {q}")
    if q == 0:
        return QuadraticValue(0)
    # sqrt(p/q) = sqrt(p*q) / q
    s, d = square_free_decomposition(q.numerator * q.denominator)
    return QuadraticValue(0, Fraction(s, q.denominator), d)


def ceil_div_sqrt(num: int, den: int, n: int) -> int:
    """ceil(num / (den * sqrt(n))) for positive integers, exactly.

    m is the answer iff (m-1)*den*sqrt(n) < num <= m*den*sqrt(n); both
    sides are decided by comparing squares of nonnegative integers.
    """
    if num <= 0 or den <= 0 or n <= 0:
        raise ValueError("ceil_div_sqrt needs positive integers")
    target = num * num
    scale = den * den * n
    floor_value = isqrt(target // scale)
    if floor_value * floor_value * scale == target:
        return floor_value
    return floor_value + 1


# Scalar text grammar: "a/b", "a", "c/d*sqrt(D)", "sqrt(D)", and a
# rational head followed by a signed radical term, all whitespace-free.
_SCALAR_RE = re.compile(
    r"^(?:(?P<rat>-?\d+(?:/\d+)?)(?=$|[+-]))?"
    r"(?:(?P<sign>[+-])?(?:(?P<coef>\d+(?:/\d+)?)\*)?sqrt\((?P<rad>\d+)\))?$"
)


def parse_scalar(text: str) -> QuadraticValue:
    """Parse canonical scalar text; inverse of str() on QuadraticValue."""
    s = text.strip().replace(" ", "")
    match = _SCALAR_RE.match(s)
    if not match or (match.group("rat") is None and match.group("rad") is None):
        raise ParseError(f"malformed scalar {text!r}")
    try:
        a = Fraction(match.group("rat")) if match.group("rat") else Fraction(0)
        if match.group("rad") is None:
            return QuadraticValue(a)
        b = Fraction(match.group("coef")) if match.group("coef") else Fraction(1)
        if match.group("sign") == "-":
            b = -b
        return QuadraticValue(a, b, int(match.group("rad")))
    except ZeroDivisionError as exc:
        raise ParseError(f"zero denominator in scalar {text!r}") from exc


def scalar_text(v) -> str:
    """Canonical whitespace-free rendering used by the CLI, CSV and JSON."""
    if isinstance(v, (int, Fraction)):
        return str(Fraction(v))
    return str(v)
