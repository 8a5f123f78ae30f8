"""
Bicomplex third-order Jacobsthal quaternions.

``bcj(n) = J(n) + i J(n+1) + j J(n+2) + ij J(n+3)``, with the period-3
companions ``bcv`` and ``bcu`` built the same way from V and U.  Besides the
definitional constructor there is a recurrence path and a closed-form path
evaluated in Bicomplex[Q(w)]; all three must agree.

This module also holds the exponential-polynomial normal forms of these
sequences and the closed-form candidates for the three squared norms.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

from .bicomplex import KINDS, Bicomplex, I, IJ, J
from .exppoly import ExpPoly
from .scalars import OMEGA1, OMEGA2, Cyclo
from .sequences import _check_index, j3, j3_sum, u3, v3


def _quaternion(seq, n: int) -> Bicomplex:
    return Bicomplex(seq(n), seq(n + 1), seq(n + 2), seq(n + 3))


def bcj(n: int) -> Bicomplex:
    """Definitional path: four consecutive Jacobsthal numbers."""
    _check_index(n)
    return _quaternion(j3, n)


def bcv(n: int) -> Bicomplex:
    _check_index(n)
    return _quaternion(v3, n)


def bcu(n: int) -> Bicomplex:
    _check_index(n)
    return _quaternion(u3, n)


BCJ0 = Bicomplex(0, 1, 1, 2)
BCJ1 = Bicomplex(1, 1, 2, 5)
BCJ2 = Bicomplex(1, 2, 5, 9)


class _RecurrenceCache:
    def __init__(self):
        self._values = [BCJ0, BCJ1, BCJ2]
        self._lock = threading.Lock()

    def get(self, n: int) -> Bicomplex:
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            while len(values) <= n:
                values.append(values[-1] + values[-2] + 2 * values[-3])
            return values[n]


_REC = _RecurrenceCache()


def bcj_recurrence(n: int) -> Bicomplex:
    """Recurrence path from the three initial quaternions."""
    _check_index(n)
    return _REC.get(n)


def bcj_recurrence_iter(n: int) -> Bicomplex:
    """Uncached recurrence (benchmark reference)."""
    _check_index(n)
    a, b, c = BCJ0, BCJ1, BCJ2
    for _ in range(n):
        a, b, c = b, c, c + b + 2 * a
    return a


def bcj_matpow(n: int) -> Bicomplex:
    """Companion-matrix power applied to the bicomplex initial window."""
    from .sequences import companion_power

    m = companion_power(n)
    return m[2][0] * BCJ2 + m[2][1] * BCJ1 + m[2][2] * BCJ0


@dataclass(frozen=True)
class BcqConstants:
    """Closed-form constants: 2-hat, w1-hat, w2-hat and phi."""

    hat2: Bicomplex
    hat_w1: Bicomplex
    hat_w2: Bicomplex
    phi: Cyclo


def _hat(x) -> Bicomplex:
    return Bicomplex(1, x, x ** 2, x ** 3)


CONSTANTS = BcqConstants(
    hat2=_hat(Fraction(2)),
    hat_w1=_hat(OMEGA1),
    hat_w2=_hat(OMEGA2),
    phi=(2 - OMEGA1) * (2 - OMEGA2) * (OMEGA1 - OMEGA2),
)

HAT2 = CONSTANTS.hat2
HAT_W1 = CONSTANTS.hat_w1
HAT_W2 = CONSTANTS.hat_w2
PHI = CONSTANTS.phi


def hat_w1_w2() -> Bicomplex:
    """The product of the two w-hat constants, projected to rationals."""
    return (HAT_W1 * HAT_W2).project()


def bcj_binet_exact(n: int) -> Bicomplex:
    """The closed form evaluated in Bicomplex[Q(w)] without projection."""
    _check_index(n)
    w1, w2 = OMEGA1, OMEGA2
    total = ((w1 - w2) * 2 ** (n + 1)) * HAT2
    total = total - ((2 - w2) * w1 ** (n + 1)) * HAT_W1
    total = total + ((2 - w1) * w2 ** (n + 1)) * HAT_W2
    return total / PHI


def bcj_binet(n: int) -> Bicomplex:
    """Closed-form path, projected back to rational coefficients.

    Raises AssertionError if any w-part survives; that can only mean an
    arithmetic bug.
    """
    value = bcj_binet_exact(n)
    if not value.is_rational():
        raise AssertionError(f"closed form for bcj({n}) left w-parts: {value!r}")
    return value.project()


def bcj_conj(n: int, kind: str) -> Bicomplex:
    return bcj(n).conj(kind)


def bcj_norm(n: int, kind: str) -> Bicomplex:
    """``bcj(n) * conj(bcj(n), kind)``, computed by the ring product."""
    return bcj(n).norm_sq(kind)


# Which basis axes a squared norm may occupy, per conjugation kind.
NORM_AXES = {"i": (0, 2), "j": (0, 1), "ij": (0, 3)}


def norm_shape_ok(value: Bicomplex, kind: str) -> bool:
    allowed = NORM_AXES[kind]
    return all(c == 0 for idx, c in enumerate(value.coeffs) if idx not in allowed)


def bcj_sum(n: int) -> Bicomplex:
    """Closed-form partial sum of bcj(0..n) via the scalar sum S(n)."""
    _check_index(n)
    return Bicomplex(j3_sum(n), j3_sum(n + 1), j3_sum(n + 2) - 1, j3_sum(n + 3) - 2)


# Residue-class table for the partial sum: offsets subtracted from
# (J(n+1), J(n+2), J(n+3), J(n+4)).
SUM_CASE_OFFSETS = {0: (1, 0, 1, 3), 1: (0, 0, 2, 2), 2: (0, 1, 1, 2)}


def bcj_sum_cases(n: int) -> Bicomplex:
    _check_index(n)
    off = SUM_CASE_OFFSETS[n % 3]
    return Bicomplex(*(j3(n + 1 + k) - off[k] for k in range(4)))


def bcj_sum_direct(n: int) -> Bicomplex:
    _check_index(n)
    total = Bicomplex()
    for s in range(n + 1):
        total = total + bcj(s)
    return total


# Normal forms ---------------------------------------------------------------

X = ExpPoly.pow2(1)  # n -> 2**n

V_EP = ExpPoly.periodic([2, -3, 1])
U_EP = ExpPoly.periodic([1, -1, 0])
J_EP = (2 * X - V_EP) / 7

BCV_EP = ExpPoly.periodic([bcv(0), bcv(1), bcv(2)])
BCU_EP = ExpPoly.periodic([bcu(0), bcu(1), bcu(2)])
BCJ_EP = (HAT2 * 2 * X - BCV_EP) / 7


def quaternion_ep(scalar_ep: ExpPoly) -> ExpPoly:
    """Lift a scalar ExpPoly s(n) to s(n) + i s(n+1) + j s(n+2) + ij s(n+3)."""
    return (scalar_ep + I * scalar_ep.shift(1) + J * scalar_ep.shift(2)
            + IJ * scalar_ep.shift(3))


def _v(k: int) -> ExpPoly:
    return V_EP.shift(k)


def _candidate_norm_parts() -> Dict[str, Tuple[ExpPoly, ExpPoly]]:
    x, v0, v1, v2 = X, _v(0), _v(1), _v(2)
    x2 = x * x
    X1 = (-75 * 4 * x2 - 3 * 4 * x * (2 * v1 - 3 * v0) - 2 * v0 * v1 - v0 * v0) / 49
    Y1 = (5 * 16 * x2 - 2 * x * (2 * v1 - 5 * v2) - v0 * v0) / 49
    X2 = (-51 * 4 * x2 - 4 * x * (6 * v2 - 5 * v0) + 2 * v0 * v1 + v0 * v0) / 49
    Y2 = (17 * 8 * x2 - 2 * x * (5 * v0 + 7 * v2) - v0 * v0) / 49
    X3 = (85 * 4 * x2 - 4 * x * (2 * v2 + 7 * v0) - 2 * v1 * v2 + 3 * v0 * v0) / 49
    Y3 = (-2 * x * (11 * v0 - 2 * v1) + v0 * v0 - v1 * v2) / 49
    return {"i": (X1, Y1), "j": (X2, Y2), "ij": (X3, Y3)}


@dataclass(frozen=True)
class NormCandidates:
    """Candidate closed forms X1..Y3 of the three squared norms."""

    X1: ExpPoly
    Y1: ExpPoly
    X2: ExpPoly
    Y2: ExpPoly
    X3: ExpPoly
    Y3: ExpPoly

    def parts(self, kind: str) -> Tuple[ExpPoly, ExpPoly]:
        return {"i": (self.X1, self.Y1), "j": (self.X2, self.Y2),
                "ij": (self.X3, self.Y3)}[kind]

    def candidate(self, kind: str) -> ExpPoly:
        """``X + 2*axis*Y`` where axis is j, i or ij for kinds i, j, ij."""
        x_part, y_part = self.parts(kind)
        axis = {"i": J, "j": I, "ij": IJ}[kind]
        return x_part + (2 * axis) * y_part


_parts = _candidate_norm_parts()
NORM_CANDIDATES = NormCandidates(*_parts["i"], *_parts["j"], *_parts["ij"])
del _parts


def definitional_norm_ep(kind: str) -> ExpPoly:
    return BCJ_EP * BCJ_EP.conj(kind)


def norm_candidates_eval(n: int, kind: str) -> Tuple[Bicomplex, Bicomplex]:
    """(candidate at n, definitional product at n)."""
    _check_index(n)
    if kind not in KINDS:
        raise ValueError(f"unknown conjugation kind {kind!r}")
    return NORM_CANDIDATES.candidate(kind)(n), bcj_norm(n, kind)
