"""
Third-order Jacobsthal integers and their period-3 companions.

``j3`` is the sequence 0, 1, 1, 2, 5, 9, 18, ... with
J(n) = J(n-1) + J(n-2) + 2 J(n-3).  The characteristic polynomial
x^3 - x^2 - x - 2 factors as (x - 2)(x^2 + x + 1), so
7 J(n) = 2^(n+1) - V(n) with V periodic: 2, -3, 1.

Three evaluation paths are provided for J: a cached recurrence, companion
matrix powering, and the closed form evaluated exactly in Q(w).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from .scalars import OMEGA1, OMEGA2, Cyclo

_V_TABLE = (2, -3, 1)


def _check_index(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"index must be an int, got {type(n).__name__}")
    if n < 0:
        raise ValueError(f"negative index {n} is not supported")


def exact_div(num: int, den: int) -> int:
    """Integer division that refuses to truncate."""
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


class _JacobsthalCache:
    # Append-only list guarded by a lock; readers of an already-filled prefix
    # never see a partially written value.
    def __init__(self):
        self._values = [0, 1, 1]
        self._lock = threading.Lock()

    def get(self, n: int) -> int:
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            while len(values) <= n:
                values.append(values[-1] + values[-2] + 2 * values[-3])
            return values[n]


_CACHE = _JacobsthalCache()


def j3(n: int) -> int:
    """n-th third-order Jacobsthal number by the recurrence."""
    _check_index(n)
    return _CACHE.get(n)


def j3_iter(n: int) -> int:
    """Uncached recurrence; used as an independent reference and by benchmarks."""
    _check_index(n)
    a, b, c = 0, 1, 1
    for _ in range(n):
        a, b, c = b, c, c + b + 2 * a
    return a


def v3(n: int) -> int:
    _check_index(n)
    return _V_TABLE[n % 3]


def u3(n: int) -> int:
    """U(n) = (2 V(n) - V(n+1)) / 7, periodic 1, -1, 0."""
    _check_index(n)
    return exact_div(2 * v3(n) - v3(n + 1), 7)


@dataclass(frozen=True)
class SeqParams:
    """Closed-form constants for the Jacobsthal family.

    ``alpha`` enters the second and third quadratic-approximation constants
    and is left configurable; with ``alpha == 2`` they reduce to w1 and w2.
    """

    alpha: Cyclo = field(default_factory=lambda: Cyclo(2))

    @property
    def A(self) -> Cyclo:
        return -3 - 2 * OMEGA2

    @property
    def B(self) -> Cyclo:
        return -3 - 2 * OMEGA1

    @property
    def P(self) -> Cyclo:
        return 1 - (OMEGA1 + OMEGA2)

    @property
    def Q(self) -> Cyclo:
        return 1 - (Cyclo.coerce(self.alpha) + OMEGA2)

    @property
    def R(self) -> Cyclo:
        return 1 - (Cyclo.coerce(self.alpha) + OMEGA1)


DEFAULT_PARAMS = SeqParams()


def v3_binet(n: int, params: SeqParams = DEFAULT_PARAMS) -> Cyclo:
    """(A w1^n - B w2^n) / (w1 - w2) evaluated in Q(w)."""
    _check_index(n)
    return (params.A * OMEGA1 ** n - params.B * OMEGA2 ** n) / (OMEGA1 - OMEGA2)


def j3_binet(n: int, params: SeqParams = DEFAULT_PARAMS) -> int:
    """J(n) from the closed form, computed in Q(w) and projected to an integer."""
    _check_index(n)
    value = (Cyclo(2 ** (n + 1)) - v3_binet(n, params)) / 7
    if value.b != 0:
        raise AssertionError(f"closed form for J({n}) has w-part {value.b}")
    if value.a.denominator != 1:
        raise AssertionError(f"closed form for J({n}) is not an integer: {value.a}")
    return value.a.numerator


def j3_sum(n: int) -> int:
    """Sum of J(0..n) via (J(n+2) + 2 J(n) - 1) / 3."""
    _check_index(n)
    return exact_div(j3(n + 2) + 2 * j3(n) - 1, 3)


def j3_sum_cases(n: int) -> int:
    """The residue-class form of the partial sum: J(n+1) - [n = 0 mod 3]."""
    _check_index(n)
    return j3(n + 1) - (1 if n % 3 == 0 else 0)


_COMPANION = ((1, 1, 2), (1, 0, 0), (0, 1, 0))


def _matmul3(a, b):
    return tuple(
        tuple(sum(a[r][k] * b[k][c] for k in range(3)) for c in range(3))
        for r in range(3)
    )


def companion_power(n: int):
    """The n-th power of the companion matrix [[1,1,2],[1,0,0],[0,1,0]]."""
    _check_index(n)
    result = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    base = _COMPANION
    while n:
        if n & 1:
            result = _matmul3(result, base)
        base = _matmul3(base, base)
        n >>= 1
    return result


def j3_matpow(n: int) -> int:
    """J(n) by square-and-multiply on the companion matrix.

    The state vector is (J(k+2), J(k+1), J(k)); M^n applied to the initial
    window (1, 1, 0) gives (J(n+2), J(n+1), J(n)).
    """
    m = companion_power(n)
    return m[2][0] + m[2][1]


@dataclass(frozen=True)
class QuadraticCheck:
    """Verdicts for the three quadratic-approximation identities at one n."""

    n: int
    holds: tuple
    lhs: tuple
    rhs: tuple

    def __bool__(self):
        return all(self.holds)


def quadratic_approx_check(n: int, params: SeqParams = DEFAULT_PARAMS) -> QuadraticCheck:
    """Check the quadratic approximation of J at index n for the roots 2, w1, w2.

    For each root x with constant K in (P, Q, R):
        K x^(n+2) == x^2 J(n+2) + x (J(n+1) + 2 J(n)) + 2 J(n+1)
    """
    _check_index(n)
    jn, jn1, jn2 = j3(n), j3(n + 1), j3(n + 2)
    roots = (Cyclo(2), OMEGA1, OMEGA2)
    consts = (params.P, params.Q, params.R)
    lhs, rhs = [], []
    for x, k in zip(roots, consts):
        lhs.append(k * x ** (n + 2))
        rhs.append(x * x * jn2 + x * (jn1 + 2 * jn) + 2 * jn1)
    holds = tuple(a == b for a, b in zip(lhs, rhs))
    return QuadraticCheck(n, holds, tuple(lhs), tuple(rhs))


def binet_identity_holds(n: int) -> bool:
    """7 J(n) + V(n) == 2^(n+1)."""
    return 7 * j3(n) + v3(n) == 2 ** (n + 1)


__all__ = [
    "DEFAULT_PARAMS",
    "QuadraticCheck",
    "SeqParams",
    "binet_identity_holds",
    "companion_power",
    "exact_div",
    "j3",
    "j3_binet",
    "j3_iter",
    "j3_matpow",
    "j3_sum",
    "j3_sum_cases",
    "quadratic_approx_check",
    "u3",
    "v3",
    "v3_binet",
]
