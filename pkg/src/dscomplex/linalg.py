"""Exact linear algebra over Z and Q.

Integer matrices go through fraction-free (Bareiss) elimination, so every
intermediate value is an exact minor and no rational arithmetic is needed.
Rational systems (nullspaces, affine solution sets) use Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

import numpy as np

Matrix = list[list]


_SAFE = 2**62


def _to_array(m: Sequence[Sequence[int]], ncols: int) -> np.ndarray:
    """int64 array when every entry is small, otherwise Python ints."""
    big = any(abs(int(x)) >= _SAFE for row in m for x in row)
    a = np.zeros((len(m), ncols), dtype=object if big else np.int64)
    for i, row in enumerate(m):
        for j, x in enumerate(row):
            a[i, j] = int(x)
    return a


def _step(a: np.ndarray, piv, col: np.ndarray, row: np.ndarray, prev) -> np.ndarray:
    """One fraction-free update (a * piv - col row^T) / prev, exact.

    Runs in int64 while the products provably fit and promotes to Python
    ints otherwise, so the arithmetic is exact either way.
    """
    if a.dtype != object:
        bound = int(np.abs(a).max()) * abs(int(piv)) + int(np.abs(col).max()) * int(np.abs(row).max())
        if bound >= _SAFE:
            a, col, row = a.astype(object), col.astype(object), row.astype(object)
            piv, prev = int(piv), int(prev)
    return (a * piv - np.outer(col, row)) // prev


def bareiss_determinant(m: Sequence[Sequence[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    a = _to_array(m, n)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k, k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r, k] != 0), None)
            if swap is None:
                return 0
            a[[k, swap]] = a[[swap, k]]
            sign = -sign
        piv = a[k, k]
        sub = _step(a[k + 1:, k + 1:], piv, a[k + 1:, k], a[k, k + 1:], prev)
        if sub.dtype != a.dtype:
            a = a.astype(object)
        a[k + 1:, k + 1:] = sub
        a[k + 1:, k] = 0
        prev = a[k, k]
    return sign * int(a[n - 1, n - 1])


def bareiss_inverse(m: Sequence[Sequence[int]]) -> tuple[int, np.ndarray | None]:
    """Return (det, adj) with m @ adj == det * I, via fraction-free Gauss-Jordan.

    ``adj`` is None when m is singular. For a unimodular m the exact inverse is
    ``adj * det``. The returned array has Python int entries.
    """
    n = len(m)
    if n == 0:
        return 1, np.empty((0, 0), dtype=object)
    a = _to_array(m, 2 * n)
    for i in range(n):
        a[i, n + i] = 1
    sign, prev = 1, 1
    for k in range(n):
        if a[k, k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r, k] != 0), None)
            if swap is None:
                return 0, None
            a[[k, swap]] = a[[swap, k]]
            sign = -sign
        piv = a[k, k]
        col = a[:, k].copy()
        col[k] = 0
        row = a[k].copy()
        a = _step(a, piv, col, row, prev)
        a[k] = row
        prev = piv
    # left block is now prev * I and the right block prev * m^{-1}
    det = sign * int(prev)
    return det, a[:, n:].astype(object) * sign


def rational_rref(m: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    rows = [[Fraction(x) for x in row] for row in m]
    pivots: list[int] = []
    if not rows:
        return rows, pivots
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def nullspace(m: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of {x : m x = 0}."""
    if ncols is None:
        ncols = len(m[0])
    if not m:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    rref, pivots = rational_rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rref[r][fc]
        basis.append(v)
    return basis


def solve_affine(m: Sequence[Sequence], rhs: Sequence) -> tuple[list[Fraction] | None, list[list[Fraction]]]:
    """Particular solution and nullspace basis of m x = rhs (None if inconsistent)."""
    ncols = len(m[0])
    aug = [list(row) + [b] for row, b in zip(m, rhs)]
    rref, pivots = rational_rref(aug)
    if ncols in pivots:
        return None, []
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = rref[r][ncols]
    return x, nullspace(m, ncols)


def primitive_integer_vector(v: Sequence) -> list[int]:
    """Scale to coprime integers with the last non-zero entry positive."""
    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return ints
    ints = [x // g for x in ints]
    last = next(x for x in reversed(ints) if x != 0)
    return [-x for x in ints] if last < 0 else ints


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def transpose(a: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*a)]
