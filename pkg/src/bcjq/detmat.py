"""
Banded-determinant characterization of third-order recurrences.

For x(n+3) = r x(n+2) + s x(n+1) + t x(n) with x0 = A (invertible), x1 = B,
x2 = C, the determinant of a particular (n+1) x (n+1) banded matrix equals
x(n).  :func:`build_matrix` lays that matrix out entry by entry, with an
override table for probing variants.  Determinants over the bicomplex ring
are taken by splitting every entry into its two idempotent components,
eliminating in each component field, and recombining.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .bicomplex import Bicomplex, IdempotentPair, NotInvertibleError
from .scalars import Cyclo

Matrix = List[List[object]]


def _inverse(x):
    if isinstance(x, Bicomplex):
        return x.inverse()
    if not x:
        raise NotInvertibleError(f"{x} is not invertible")
    if isinstance(x, Cyclo):
        return x.inverse()
    return Fraction(1) / x


@dataclass(frozen=True)
class ThirdOrderSpec:
    """Weights (r, s, t) and initial values (A, B, C) = (x0, x1, x2)."""

    r: object
    s: object
    t: object
    A: object
    B: object
    C: object

    def terms(self, count: int) -> list:
        """First ``count`` terms by the recurrence (the independent oracle)."""
        xs = [self.A, self.B, self.C]
        while len(xs) < count:
            xs.append(self.r * xs[-1] + self.s * xs[-2] + self.t * xs[-3])
        return xs[:count]


BCJ_SPEC = ThirdOrderSpec(
    r=1, s=1, t=2,
    A=Bicomplex(0, 1, 1, 2), B=Bicomplex(1, 1, 2, 5), C=Bicomplex(1, 2, 5, 9),
)


def build_matrix(spec: ThirdOrderSpec, n: int,
                 overrides: Optional[Mapping[Tuple[int, int], object]] = None) -> Matrix:
    """The (n+1) x (n+1) banded matrix whose determinant is x(n).

    Row layout, 1-based:
      1: A, 1
      2: A r - B, r, 1/A
      3: 0, B r - C, r, t
      4: 0, A, -s/t, r, t
      k >= 5: 1/t, -s/t, r, t  starting at column k - 2

    ``overrides`` maps 1-based (row, col) to a replacement entry; positions
    outside the matrix are ignored.
    """
    if n < 0:
        raise ValueError("matrix order needs n >= 0")
    size = n + 1
    r, s, t, A, B, C = spec.r, spec.s, spec.t, spec.A, spec.B, spec.C
    inv_a = _inverse(A)
    try:
        inv_t = _inverse(t)
    except ZeroDivisionError as exc:
        raise NotInvertibleError(f"recurrence weight t = {t} is not invertible") from exc
    m: Matrix = [[0] * size for _ in range(size)]

    def put(row, col, value):
        if row <= size and col <= size:
            m[row - 1][col - 1] = value

    put(1, 1, A)
    put(1, 2, 1)
    put(2, 1, A * r - B)
    put(2, 2, r)
    put(2, 3, inv_a)
    put(3, 2, B * r - C)
    put(3, 3, r)
    put(3, 4, t)
    put(4, 2, A)
    put(4, 3, -s * inv_t)
    put(4, 4, r)
    put(4, 5, t)
    for k in range(5, size + 1):
        put(k, k - 2, inv_t)
        put(k, k - 1, -s * inv_t)
        put(k, k, r)
        put(k, k + 1, t)
    for (row, col), value in (overrides or {}).items():
        if row < 1 or col < 1:
            raise ValueError(f"override position {(row, col)} is not 1-based")
        put(row, col, value)
    return m


# Determinants -----------------------------------------------------------

def _exact(v):
    # plain ints would turn into floats under true division
    if isinstance(v, float):
        raise TypeError("floating-point entries are not supported")
    if isinstance(v, int):
        return Fraction(v)
    return v


def _sparse(rows) -> List[Dict[int, object]]:
    return [{j: _exact(v) for j, v in enumerate(row) if v} for row in rows]


def det_bareiss(rows: Sequence[Sequence[object]]):
    """Fraction-free (Bareiss) elimination over a commutative field.

    Rows are kept sparse.  A row with a zero in the pivot column is only
    rescaled by Bareiss, and consecutive rescalings telescope to
    ``pivot[k] / pivot[s]``, so such rows are brought up to date lazily when
    next touched.  Banded inputs thus cost O(n * bandwidth^2).  Row swaps are
    tracked for the sign; a column with no usable pivot means det = 0.
    """
    size = len(rows)
    if size == 0:
        return 1
    if any(len(row) != size for row in rows):
        raise ValueError("determinant needs a square matrix")
    sparse = _sparse(rows)
    # stage[i] = s means row i holds the values after elimination step s;
    # pivots[s + 1] is the pivot used at step s (pivots[0] = 1).
    stage = [-1] * size
    pivots: List[object] = [Fraction(1)]

    def refresh(i: int, target: int) -> None:
        s = stage[i]
        if s == target:
            return
        num, den = pivots[target + 1], pivots[s + 1]
        sparse[i] = {j: v * num / den for j, v in sparse[i].items()}
        stage[i] = target

    sign = 1
    for k in range(size - 1):
        refresh(k, k - 1)
        if not sparse[k].get(k):
            for i in range(k + 1, size):
                if sparse[i].get(k):
                    refresh(i, k - 1)
                    sparse[k], sparse[i] = sparse[i], sparse[k]
                    stage[k], stage[i] = stage[i], stage[k]
                    sign = -sign
                    break
            else:
                return _zero_like(rows)
        p = sparse[k][k]
        prev = pivots[k]
        tail = [(j, v) for j, v in sparse[k].items() if j > k]
        for i in range(k + 1, size):
            if not sparse[i].get(k):
                continue
            refresh(i, k - 1)
            row = sparse[i]
            a = row.pop(k)
            new: Dict[int, object] = {j: p * v for j, v in row.items() if j > k}
            for j, v in tail:
                new[j] = new.get(j, 0) - a * v
            if prev != 1:
                new = {j: v / prev for j, v in new.items()}
            sparse[i] = {j: v for j, v in new.items() if v}
            stage[i] = k
        pivots.append(p)
    refresh(size - 1, size - 2)
    last = sparse[size - 1].get(size - 1, 0)
    if not last:
        return _zero_like(rows)
    return last if sign == 1 else -last


def det_gauss(rows: Sequence[Sequence[object]]):
    """Plain Gaussian elimination over a field; touches only nonzero entries."""
    size = len(rows)
    if size == 0:
        return 1
    if any(len(row) != size for row in rows):
        raise ValueError("determinant needs a square matrix")
    sparse = _sparse(rows)
    det = Fraction(1)
    for k in range(size):
        if not sparse[k].get(k):
            for i in range(k + 1, size):
                if sparse[i].get(k):
                    sparse[k], sparse[i] = sparse[i], sparse[k]
                    det = -det
                    break
            else:
                return _zero_like(rows)
        p = sparse[k][k]
        det = det * p
        inv_p = _inverse(p)
        tail = [(j, v) for j, v in sparse[k].items() if j > k]
        for i in range(k + 1, size):
            a = sparse[i].pop(k, None)
            if not a:
                continue
            f = a * inv_p
            row = sparse[i]
            for j, v in tail:
                nv = row.get(j, 0) - f * v
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
    return det


def det_cofactor(rows: Sequence[Sequence[object]]):
    """Laplace expansion along the first row.

    Division-free, so it works over any commutative ring, zero divisors
    included.  Exponential cost; meant as an oracle for small matrices.
    """
    size = len(rows)
    if size == 0:
        return 1
    if size == 1:
        return rows[0][0]
    total = 0
    for col, entry in enumerate(rows[0]):
        if not entry:
            continue
        minor = [row[:col] + row[col + 1:] for row in rows[1:]]
        term = entry * det_cofactor(minor)
        total = total + term if col % 2 == 0 else total - term
    return total


def _zero_like(rows):
    for row in rows:
        for v in row:
            if isinstance(v, Bicomplex):
                return Bicomplex()
    return 0


_METHODS = {"bareiss": det_bareiss, "gauss": det_gauss}


def det_exact(rows: Sequence[Sequence[object]], method: str = "bareiss"):
    """Exact determinant.

    Scalar matrices (Fraction, Cyclo) are eliminated directly.  If any entry
    is bicomplex, every entry is split at the idempotents, each component
    matrix is eliminated over its complex field, and the two determinants are
    recombined; the result is a :class:`Bicomplex`.
    """
    try:
        eliminate = _METHODS[method]
    except KeyError:
        raise ValueError(f"unknown determinant method {method!r}") from None
    if not any(isinstance(v, Bicomplex) for row in rows for v in row):
        return eliminate(rows)
    split_rows = [[Bicomplex.coerce(v).split() for v in row] for row in rows]
    d1 = eliminate([[p.c1 for p in row] for row in split_rows])
    d2 = eliminate([[p.c2 for p in row] for row in split_rows])
    one = Bicomplex(1).split()
    d1 = d1 if not isinstance(d1, int) else one.c1 * d1
    d2 = d2 if not isinstance(d2, int) else one.c2 * d2
    return Bicomplex.recompose(IdempotentPair(d1, d2))


def bcj_via_det(n: int, overrides=None, method: str = "bareiss") -> Bicomplex:
    """bcj(n) as the determinant of the bicomplex banded matrix."""
    if n < 0:
        raise ValueError("n must be non-negative")
    result = det_exact(build_matrix(BCJ_SPEC, n, overrides), method=method)
    return Bicomplex.coerce(result)


def matrix_to_json(rows: Sequence[Sequence[object]]) -> str:
    """Array-of-arrays of rendered scalars (debug dump)."""
    return json.dumps([[str(v) for v in row] for row in rows])
