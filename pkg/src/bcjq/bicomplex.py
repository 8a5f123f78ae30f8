"""
The commutative bicomplex ring over an exact scalar ring.

A bicomplex number is stored as four coefficients on the basis {1, i, j, ij}
with i^2 = j^2 = -1 and ij = ji, so (ij)^2 = +1.  Coefficients may be
Fractions or :class:`~bcjq.scalars.Cyclo` values; mixing the two promotes
to Cyclo through ordinary operator dispatch.

The idempotents e1 = (1 + ij)/2 and e2 = (1 - ij)/2 split the ring into two
copies of the complex numbers over the scalar ring.  Products, inverses and
determinants act componentwise there, which is how zero divisors are
detected and how inversion is done.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterator

from .scalars import Cyclo, as_rational

KINDS = ("i", "j", "ij")


class NotInvertibleError(ZeroDivisionError):
    """Raised when inverting a zero divisor of the bicomplex ring."""


class ProjectionError(ValueError):
    """Raised when a Cyclo-valued quantity has a nonzero w-part."""


def _coerce_scalar(value):
    if isinstance(value, (Fraction, Cyclo)):
        return value
    return as_rational(value)


def project_scalar(value) -> Fraction:
    if isinstance(value, Cyclo):
        if value.b != 0:
            raise ProjectionError(f"scalar {value} is not rational")
        return value.a
    return as_rational(value)


class ComplexS:
    """``re + i*im`` with both parts in an exact scalar field.

    This is the ring each idempotent component of a bicomplex number lives in.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _coerce_scalar(re)
        self.im = _coerce_scalar(im)

    @classmethod
    def coerce(cls, value) -> "ComplexS":
        if isinstance(value, ComplexS):
            return value
        return cls(value, 0)

    def __add__(self, other):
        if not isinstance(other, ComplexS):
            if isinstance(other, (int, Fraction, Cyclo)):
                other = ComplexS(other)
            else:
                return NotImplemented
        return ComplexS(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return ComplexS(-self.re, -self.im)

    def __sub__(self, other):
        if not isinstance(other, ComplexS):
            if isinstance(other, (int, Fraction, Cyclo)):
                other = ComplexS(other)
            else:
                return NotImplemented
        return ComplexS(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return ComplexS.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, ComplexS):
            a, b, c, d = self.re, self.im, other.re, other.im
            return ComplexS(a * c - b * d, a * d + b * c)
        if isinstance(other, (int, Fraction, Cyclo)):
            return ComplexS(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "ComplexS":
        # a^2 + b^2 vanishes only at 0 over Q and Q(w): -1 is not a square there
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("complex component is zero")
        return ComplexS(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * ComplexS.coerce(other).inverse()

    def __rtruediv__(self, other):
        return ComplexS.coerce(other) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, ComplexS):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction, Cyclo)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"ComplexS({self.re!s}, {self.im!s})"


@dataclass(frozen=True)
class IdempotentPair:
    """Components of a bicomplex number at e1 = (1+ij)/2 and e2 = (1-ij)/2."""

    c1: ComplexS
    c2: ComplexS

    def __mul__(self, other: "IdempotentPair") -> "IdempotentPair":
        return IdempotentPair(self.c1 * other.c1, self.c2 * other.c2)


class Bicomplex:
    """An immutable bicomplex number ``w0 + w1*i + w2*j + w3*ij``."""

    __slots__ = ("w0", "w1", "w2", "w3")

    def __init__(self, w0=0, w1=0, w2=0, w3=0):
        object.__setattr__(self, "w0", _coerce_scalar(w0))
        object.__setattr__(self, "w1", _coerce_scalar(w1))
        object.__setattr__(self, "w2", _coerce_scalar(w2))
        object.__setattr__(self, "w3", _coerce_scalar(w3))

    def __setattr__(self, name, value):
        raise AttributeError("Bicomplex is immutable")

    @classmethod
    def coerce(cls, value) -> "Bicomplex":
        if isinstance(value, Bicomplex):
            return value
        return cls(value)

    @classmethod
    def from_complex(cls, z1: ComplexS, z2: ComplexS) -> "Bicomplex":
        """Build ``z1 + j*z2``."""
        return cls(z1.re, z1.im, z2.re, z2.im)

    @property
    def coeffs(self) -> tuple:
        return (self.w0, self.w1, self.w2, self.w3)

    @property
    def z1(self) -> ComplexS:
        return ComplexS(self.w0, self.w1)

    @property
    def z2(self) -> ComplexS:
        return ComplexS(self.w2, self.w3)

    def __iter__(self) -> Iterator[Any]:
        return iter(self.coeffs)

    # Ring operations

    def __add__(self, other):
        if not isinstance(other, Bicomplex):
            if isinstance(other, (int, Fraction, Cyclo)):
                other = Bicomplex(other)
            else:
                return NotImplemented
        return Bicomplex(self.w0 + other.w0, self.w1 + other.w1,
                         self.w2 + other.w2, self.w3 + other.w3)

    __radd__ = __add__

    def __neg__(self):
        return Bicomplex(-self.w0, -self.w1, -self.w2, -self.w3)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, Bicomplex):
            if isinstance(other, (int, Fraction, Cyclo)):
                other = Bicomplex(other)
            else:
                return NotImplemented
        return Bicomplex(self.w0 - other.w0, self.w1 - other.w1,
                         self.w2 - other.w2, self.w3 - other.w3)

    def __rsub__(self, other):
        return Bicomplex.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, Bicomplex):
            x1, y1, x2, y2 = self.w0, self.w1, self.w2, self.w3
            u1, v1, u2, v2 = other.w0, other.w1, other.w2, other.w3
            return Bicomplex(
                x1 * u1 - y1 * v1 - x2 * u2 + y2 * v2,
                x1 * v1 + y1 * u1 - x2 * v2 - y2 * u2,
                x1 * u2 - y1 * v2 + x2 * u1 - y2 * v1,
                x1 * v2 + y1 * u2 + x2 * v1 + y2 * u1,
            )
        if isinstance(other, (int, Fraction, Cyclo)):
            return Bicomplex(self.w0 * other, self.w1 * other,
                             self.w2 * other, self.w3 * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Bicomplex):
            return self * other.inverse()
        if isinstance(other, (int, Fraction, Cyclo)):
            if not other:
                raise ZeroDivisionError("bicomplex division by zero scalar")
            return Bicomplex(self.w0 / other, self.w1 / other,
                             self.w2 / other, self.w3 / other)
        return NotImplemented

    def __rtruediv__(self, other):
        return Bicomplex.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("bicomplex powers need a non-negative integer exponent")
        result = Bicomplex(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # Conjugations and norms

    def conj(self, kind: str) -> "Bicomplex":
        """One of the three conjugations.

        ``i`` negates the i and ij parts, ``j`` the j and ij parts, ``ij`` the
        i and j parts.
        """
        if kind == "i":
            return Bicomplex(self.w0, -self.w1, self.w2, -self.w3)
        if kind == "j":
            return Bicomplex(self.w0, self.w1, -self.w2, -self.w3)
        if kind == "ij":
            return Bicomplex(self.w0, -self.w1, -self.w2, self.w3)
        raise ValueError(f"unknown conjugation kind {kind!r}; expected one of {KINDS}")

    def norm_sq(self, kind: str) -> "Bicomplex":
        """The exact product ``w * conj(w, kind)``."""
        return self * self.conj(kind)

    def real_magnitude(self) -> float:
        """Euclidean length of the coefficient 4-tuple; display only."""
        return math.sqrt(sum(float(abs(_to_float_scalar(c))) ** 2 for c in self.coeffs))

    # Idempotent decomposition

    def split(self) -> IdempotentPair:
        w0, w1, w2, w3 = self.coeffs
        return IdempotentPair(ComplexS(w0 + w3, w1 - w2), ComplexS(w0 - w3, w1 + w2))

    @classmethod
    def recompose(cls, pair: IdempotentPair) -> "Bicomplex":
        c1, c2 = pair.c1, pair.c2
        half = Fraction(1, 2)
        return cls(
            (c1.re + c2.re) * half,
            (c1.im + c2.im) * half,
            (c2.im - c1.im) * half,
            (c1.re - c2.re) * half,
        )

    def is_invertible(self) -> bool:
        p = self.split()
        return bool(p.c1) and bool(p.c2)

    def inverse(self) -> "Bicomplex":
        p = self.split()
        if not p.c1 and not p.c2:
            raise NotInvertibleError("cannot invert zero")
        if not p.c1:
            raise NotInvertibleError(
                f"{self} is a zero divisor: its component at e1 = (1+ij)/2 vanishes")
        if not p.c2:
            raise NotInvertibleError(
                f"{self} is a zero divisor: its component at e2 = (1-ij)/2 vanishes")
        return Bicomplex.recompose(IdempotentPair(p.c1.inverse(), p.c2.inverse()))

    # Projection, comparison, rendering

    def is_rational(self) -> bool:
        return all(not isinstance(c, Cyclo) or c.b == 0 for c in self.coeffs)

    def project(self) -> "Bicomplex":
        """Drop a vanishing w-part; raise :class:`ProjectionError` otherwise."""
        try:
            return Bicomplex(*(project_scalar(c) for c in self.coeffs))
        except ProjectionError as exc:
            raise ProjectionError(f"{self} has non-rational coefficients") from exc

    def __eq__(self, other):
        if isinstance(other, Bicomplex):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, Cyclo)):
            return self.coeffs == (other, 0, 0, 0)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(bool(c) for c in self.coeffs)

    def __repr__(self):
        return f"Bicomplex({', '.join(str(c) for c in self.coeffs)})"

    def __str__(self):
        return render(self)


def _to_float_scalar(c) -> float:
    if isinstance(c, Cyclo):
        # |a + b w| with w = -1/2 + i sqrt(3)/2
        re = float(c.a) - float(c.b) / 2
        im = float(c.b) * math.sqrt(3) / 2
        return math.hypot(re, im)
    return float(c)


# Module-level operation names mirror the methods for callers that prefer
# a functional style.

def bc_add(w: Bicomplex, v: Bicomplex) -> Bicomplex:
    return Bicomplex.coerce(w) + v


def bc_mul(w: Bicomplex, v: Bicomplex) -> Bicomplex:
    return Bicomplex.coerce(w) * v


def bc_conj(w: Bicomplex, kind: str) -> Bicomplex:
    return Bicomplex.coerce(w).conj(kind)


def bc_norm_sq(w: Bicomplex, kind: str) -> Bicomplex:
    return Bicomplex.coerce(w).norm_sq(kind)


def bc_split(w: Bicomplex) -> IdempotentPair:
    return Bicomplex.coerce(w).split()


def bc_recompose(pair: IdempotentPair) -> Bicomplex:
    return Bicomplex.recompose(pair)


def bc_inv(w: Bicomplex) -> Bicomplex:
    return Bicomplex.coerce(w).inverse()


def real_magnitude(w: Bicomplex) -> float:
    return Bicomplex.coerce(w).real_magnitude()


I = Bicomplex(0, 1, 0, 0)
J = Bicomplex(0, 0, 1, 0)
IJ = Bicomplex(0, 0, 0, 1)


# Text format: "a + b*i + c*j + d*ij", coefficients exact rationals.

_UNITS = ("", "i", "j", "ij")

_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+(?:/\d+)?)\s*(?:\*\s*)?)?
        (?P<unit>ij|ji|i|j)?\s*""",
    re.VERBOSE,
)


def _render_scalar(c) -> str:
    return str(c)


def render(w: Bicomplex) -> str:
    """Render as ``a + b*i + c*j + d*ij``, always with all four terms."""
    parts = []
    for idx, (c, unit) in enumerate(zip(w.coeffs, _UNITS)):
        negative = not isinstance(c, Cyclo) and c < 0
        body = _render_scalar(-c if negative else c)
        term = f"{body}*{unit}" if unit else body
        if idx == 0:
            parts.append(f"-{term}" if negative else term)
        else:
            parts.append(f"- {term}" if negative else f"+ {term}")
    return " ".join(parts)


def parse(text: str) -> Bicomplex:
    """Parse the :func:`render` grammar (rational coefficients only).

    Terms may come in any order and repeat; a missing coefficient means 1,
    so ``"1 + i - 2*ij"`` is accepted too.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty bicomplex literal")
    acc = [Fraction(0)] * 4
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse bicomplex literal {text!r} at offset {pos}")
        sign, coef, unit = m.group("sign"), m.group("coef"), m.group("unit")
        if coef is None and unit is None:
            raise ValueError(f"cannot parse bicomplex literal {text!r} at offset {pos}")
        if sign is None and not first:
            raise ValueError(f"missing operator in bicomplex literal {text!r} at offset {pos}")
        value = Fraction(coef) if coef is not None else Fraction(1)
        if sign == "-":
            value = -value
        slot = {None: 0, "i": 1, "j": 2, "ij": 3, "ji": 3}[unit]
        acc[slot] += value
        pos = m.end()
        first = False
    return Bicomplex(*acc)
