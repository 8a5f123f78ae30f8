"""
Exponential polynomials with period-3 coefficients.

An :class:`ExpPoly` represents a function of a non-negative integer n of the
form ``sum_d c[d, n % 3] * (2**n)**d`` with bicomplex rational coefficients.
Every closed form in this package (J, V, U, their bicomplex versions, and
products thereof) has this shape, which makes identities between them
decidable: for each residue class the function is a polynomial of degree at
most D in x = 2**n, and D + 1 distinct values of x pin it down.  Checking
n = 0 .. 3(D+1) - 1 therefore decides whether it vanishes for every n.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Tuple

from .bicomplex import Bicomplex

Key = Tuple[int, int]

_ZERO = Bicomplex()


def _as_bc(value) -> Bicomplex:
    if isinstance(value, Bicomplex):
        # Cyclo coefficients are accepted only when they are rational
        return value.project()
    return Bicomplex(value)


class ExpPoly:
    """``n -> sum_d coeff[(d, n % 3)] * 2**(d*n)``; immutable."""

    __slots__ = ("_coeff",)

    def __init__(self, coeff: Dict[Key, Bicomplex] | None = None):
        clean = {}
        for (d, r), c in (coeff or {}).items():
            if d < 0 or r not in (0, 1, 2):
                raise ValueError(f"bad ExpPoly key {(d, r)}")
            c = _as_bc(c)
            if c:
                clean[(d, r)] = c
        self._coeff = clean

    # Constructors

    @classmethod
    def const(cls, value) -> "ExpPoly":
        c = _as_bc(value)
        return cls({(0, r): c for r in range(3)})

    @classmethod
    def periodic(cls, values: Iterable, degree: int = 0) -> "ExpPoly":
        """Coefficient ``values[n % 3]`` on ``(2**n)**degree``."""
        vals = list(values)
        if len(vals) != 3:
            raise ValueError("periodic needs exactly three residue values")
        return cls({(degree, r): v for r, v in enumerate(vals)})

    @classmethod
    def pow2(cls, degree: int = 1, scale=1) -> "ExpPoly":
        """``scale * (2**n)**degree``."""
        c = _as_bc(scale)
        return cls({(degree, r): c for r in range(3)})

    # Structure

    @property
    def coeff(self) -> Dict[Key, Bicomplex]:
        return dict(self._coeff)

    @property
    def degree(self) -> int:
        """Largest power of 2**n present; 0 for the zero function."""
        return max((d for d, _ in self._coeff), default=0)

    def is_structurally_zero(self) -> bool:
        return not self._coeff

    # Arithmetic

    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._coeff)
        for k, c in other._coeff.items():
            out[k] = out.get(k, _ZERO) + c
        return ExpPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return ExpPoly({k: -c for k, c in self._coeff.items()})

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        out: Dict[Key, Bicomplex] = {}
        for (d1, r1), c1 in self._coeff.items():
            for (d2, r2), c2 in other._coeff.items():
                if r1 != r2:
                    continue
                k = (d1 + d2, r1)
                out[k] = out.get(k, _ZERO) + c1 * c2
        return ExpPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            inv = Fraction(1) / scalar
            return ExpPoly({k: c * inv for k, c in self._coeff.items()})
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = ExpPoly.const(1)
        for _ in range(n):
            result = result * self
        return result

    def shift(self, k: int = 1) -> "ExpPoly":
        """The function ``n -> self(n + k)`` for k >= 0."""
        if k < 0:
            raise ValueError("only forward shifts keep the domain n >= 0")
        out = {}
        for (d, r), c in self._coeff.items():
            # coefficient read at residue r after shifting came from (r + k) % 3
            out[(d, (r - k) % 3)] = c * (2 ** (d * k))
        return ExpPoly(out)

    def conj(self, kind: str) -> "ExpPoly":
        return ExpPoly({k: c.conj(kind) for k, c in self._coeff.items()})

    def map_coeffs(self, fn) -> "ExpPoly":
        return ExpPoly({k: fn(c) for k, c in self._coeff.items()})

    # Evaluation

    def __call__(self, n: int) -> Bicomplex:
        if n < 0:
            raise ValueError("ExpPoly is defined for n >= 0")
        r = n % 3
        x = 2 ** n
        total = _ZERO
        for (d, rr), c in self._coeff.items():
            if rr == r:
                total = total + c * (x ** d)
        return total

    def sample_bound(self) -> int:
        """Number of leading samples that decide identical vanishing."""
        return 3 * (self.degree + 1)

    def __eq__(self, other):
        if isinstance(other, ExpPoly):
            return self._coeff == other._coeff
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._coeff.items()))

    def __repr__(self):
        terms = ", ".join(f"{k}: {v}" for k, v in sorted(self._coeff.items()))
        return f"ExpPoly({{{terms}}})"


def _lift(value):
    if isinstance(value, ExpPoly):
        return value
    if isinstance(value, (int, Fraction, Bicomplex)):
        return ExpPoly.const(value)
    return NotImplemented
