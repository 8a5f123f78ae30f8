"""
Exact scalar arithmetic.

Rationals are plain :class:`fractions.Fraction` values. :class:`Cyclo` is the
quadratic field Q(w) where w is a primitive cube root of unity, stored on the
basis {1, w} with the reduction w^2 = -w - 1.  The two non-real roots of
x^3 - x^2 - x - 2 live here as ``OMEGA1 = w`` and ``OMEGA2 = -1 - w``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

Rational = Fraction

ScalarLike = Union[int, Fraction, "Cyclo"]


def as_rational(value) -> Fraction:
    """Coerce an int/Fraction/decimal string into a reduced Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(value, (int, str, _RationalABC)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


class Cyclo:
    """An element ``a + b*w`` of Q(w), with ``w**2 == -w - 1``.

    Values are immutable and hashable; equality is structural on the reduced
    rational coordinates, and a Cyclo with ``b == 0`` compares equal to the
    plain rational ``a``.
    """

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", as_rational(a))
        object.__setattr__(self, "b", as_rational(b))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclo is immutable")

    @classmethod
    def coerce(cls, value) -> "Cyclo":
        if isinstance(value, Cyclo):
            return value
        return cls(as_rational(value), 0)

    # Queries

    def is_rational(self) -> bool:
        return self.b == 0

    def to_rational(self) -> Fraction:
        if self.b != 0:
            raise ValueError(f"{self} has a nonzero w-part")
        return self.a

    def conjugate(self) -> "Cyclo":
        """Galois conjugate: w -> w^2 = -1 - w."""
        return Cyclo(self.a - self.b, -self.b)

    def norm(self) -> Fraction:
        """Field norm ``a^2 - a*b + b^2`` (always >= 0, zero only at 0)."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    # Arithmetic

    def __add__(self, other):
        try:
            o = Cyclo.coerce(other)
        except TypeError:
            return NotImplemented
        return Cyclo(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(-self.a, -self.b)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = Cyclo.coerce(other)
        except TypeError:
            return NotImplemented
        return Cyclo(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        try:
            o = Cyclo.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, Cyclo):
            a, b, c, d = self.a, self.b, other.a, other.b
            bd = b * d
            return Cyclo(a * c - bd, a * d + b * c - bd)
        try:
            k = as_rational(other)
        except TypeError:
            return NotImplemented
        return Cyclo(self.a * k, self.b * k)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclo":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("Cyclo division by zero")
        c = self.conjugate()
        return Cyclo(c.a / n, c.b / n)

    def __truediv__(self, other):
        if isinstance(other, Cyclo):
            return self * other.inverse()
        try:
            k = as_rational(other)
        except TypeError:
            return NotImplemented
        if k == 0:
            raise ZeroDivisionError("Cyclo division by zero")
        return Cyclo(self.a / k, self.b / k)

    def __rtruediv__(self, other):
        try:
            o = Cyclo.coerce(other)
        except TypeError:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("Cyclo powers need a non-negative integer exponent")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # Comparison / hashing

    def __eq__(self, other):
        if isinstance(other, Cyclo):
            return self.a == other.a and self.b == other.b
        try:
            k = as_rational(other)
        except TypeError:
            return NotImplemented
        return self.b == 0 and self.a == k

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __repr__(self):
        return f"Cyclo({self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*w"
        sign = "-" if self.b < 0 else "+"
        return f"({self.a} {sign} {abs(self.b)}*w)"


ZERO = Cyclo(0, 0)
ONE = Cyclo(1, 0)
OMEGA = Cyclo(0, 1)
OMEGA1 = OMEGA
OMEGA2 = Cyclo(-1, -1)


def cyclo_add(x: Cyclo, y: Cyclo) -> Cyclo:
    return Cyclo.coerce(x) + y


def cyclo_mul(x: Cyclo, y: Cyclo) -> Cyclo:
    return Cyclo.coerce(x) * y


def cyclo_inv(x: Cyclo) -> Cyclo:
    """Multiplicative inverse via the Galois conjugate over the field norm.

    Raises ZeroDivisionError for zero input.
    """
    return Cyclo.coerce(x).inverse()


def cyclo_pow(x: Cyclo, n: int) -> Cyclo:
    return Cyclo.coerce(x) ** n


def is_zero(x) -> bool:
    """Zero test that works for any scalar ring used in the package."""
    return not x
