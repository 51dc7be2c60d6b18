"""The Barycentric refinement operator on f-vectors and its eigen-data.

For a complex of dimension at most d the f-vector of its Barycentric
refinement is A f, where A is the upper triangular integer matrix
A[i][j] = S2(j, i) * i! (1-based, S2 = Stirling numbers of the second kind).
Its eigenvalues 1!, 2!, ..., (d+1)! are distinct.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Sequence

from .errors import InvalidInputError
from .linalg import primitive_integer_vector, rational_rref, solve_affine
from .poly import FPolynomial, reflect

MAX_DIMENSION = 30


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if n == 0 or k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def _check_dim(d: int) -> None:
    if not isinstance(d, int) or not 0 <= d <= MAX_DIMENSION:
        raise InvalidInputError(f"dimension must be in 0..{MAX_DIMENSION}, got {d!r}")


@dataclass(frozen=True)
class RefinementOperator:
    dimension: int
    matrix: tuple[tuple[int, ...], ...]

    @property
    def eigenvalues(self) -> tuple[int, ...]:
        return tuple(self.matrix[i][i] for i in range(self.dimension + 1))

    def to_json(self) -> dict:
        return {"dimension": self.dimension, "matrix": [list(r) for r in self.matrix]}


@dataclass(frozen=True)
class Functional:
    coefficients: tuple[int, ...]
    eigenvalue: int

    def __call__(self, f: Sequence) -> int:
        f = list(f) + [0] * (len(self.coefficients) - len(f))
        return sum(c * x for c, x in zip(self.coefficients, f))

    @property
    def nonzero_count(self) -> int:
        return sum(1 for c in self.coefficients if c)

    def to_json(self) -> dict:
        return {"coefficients": list(self.coefficients), "eigenvalue": self.eigenvalue}


def operator_matrix(d: int) -> RefinementOperator:
    _check_dim(d)
    n = d + 1
    rows = tuple(
        tuple(stirling2(j, i) * factorial(i) for j in range(1, n + 1)) for i in range(1, n + 1)
    )
    return RefinementOperator(d, rows)


def apply(op: RefinementOperator, f: Sequence[int]) -> tuple:
    """f-vector of the refinement; shorter input is zero-padded."""
    n = op.dimension + 1
    if len(f) > n:
        raise InvalidInputError(f"f-vector of length {len(f)} exceeds operator size {n}")
    v = list(f) + [0] * (n - len(f))
    return tuple(sum(a * x for a, x in zip(row, v)) for row in op.matrix)


def eigen_functionals(d: int) -> list[Functional]:
    """Left eigenvectors of A, ordered by decreasing eigenvalue (d+1)!, ..., 1!."""
    a = operator_matrix(d).matrix
    n = d + 1
    out = []
    for k in reversed(range(n)):
        lam = a[k][k]
        v = [Fraction(0)] * n
        v[k] = Fraction(1)
        # forward substitution on (A^T - lam) v = 0 below the pivot
        for i in range(k + 1, n):
            s = sum(a[j][i] * v[j] for j in range(k, i))
            v[i] = -s / (a[i][i] - lam)
        out.append(Functional(tuple(primitive_integer_vector(v)), lam))
    return out


def perron_vector(d: int) -> tuple[int, ...]:
    """Right eigenvector of A for (d+1)!, as coprime positive integers."""
    a = operator_matrix(d).matrix
    n = d + 1
    lam = a[d][d]
    w = [Fraction(0)] * n
    w[d] = Fraction(1)
    for i in reversed(range(d)):
        s = sum(a[i][j] * w[j] for j in range(i + 1, n))
        w[i] = -s / (a[i][i] - lam)
    return tuple(primitive_integer_vector(w))


def perron_polynomial(d: int) -> FPolynomial:
    """sum_k w_k t^(k+1) for the Perron vector w."""
    return FPolynomial([0, *perron_vector(d)])


def ds_equations(d: int) -> tuple[list[list[Fraction]], list[Fraction]]:
    """Linear system M f = r equivalent to f(t) + (-1)^d f(-1-t) = 0 for
    f(t) = 1 + sum_k f_k t^(k+1); one row per power of t."""
    n = d + 2
    sign = -1 if d % 2 else 1
    # coefficient of t^m in c_j t^j + sign * c_j (-1-t)^j
    def coef(m, j):
        return Fraction(int(m == j) + sign * (-1) ** j * comb(j, m))

    rows, rhs = [], []
    for m in range(n):
        rows.append([coef(m, j) for j in range(1, n)])
        rhs.append(-coef(m, 0))
    return rows, rhs


def ds_affine_set(d: int) -> tuple[list[Fraction], list[list[Fraction]]]:
    """A point and a direction basis of the f-vectors satisfying the symmetry."""
    rows, rhs = ds_equations(d)
    point, basis = solve_affine(rows, rhs)
    if point is None:
        raise InvalidInputError(f"no f-vector satisfies the symmetry for d={d}")
    return point, basis


def annihilates_ds_set(v: Sequence, d: int) -> bool:
    point, basis = ds_affine_set(d)
    dot = lambda x: sum(a * b for a, b in zip(v, x))  # noqa: E731
    return dot(point) == 0 and all(dot(b) == 0 for b in basis)


def ds_invariant_functionals(d: int) -> list[Functional]:
    """Eigen-functionals vanishing on every f-vector with the symmetry for d."""
    return [phi for phi in eigen_functionals(d) if annihilates_ds_set(phi.coefficients, d)]


def annihilator_dimension(d: int) -> int:
    """Dimension of the space of functionals vanishing on the symmetric set."""
    point, basis = ds_affine_set(d)
    _, pivots = rational_rref([point, *basis])
    return d + 1 - len(pivots)


def _in_ds_set(f: Sequence, d: int) -> bool:
    rows, rhs = ds_equations(d)
    return all(sum(a * x for a, x in zip(row, f)) == b for row, b in zip(rows, rhs))


def _in_ds_directions(h: Sequence, d: int) -> bool:
    rows, _ = ds_equations(d)
    return all(sum(a * x for a, x in zip(row, h)) == 0 for row in rows)


def symmetry_invariance_check(d: int) -> bool:
    """A maps the symmetric affine set into itself, and the Perron polynomial
    carries the homogeneous symmetry p(-1-t) = (-1)^(d+1) p(t)."""
    op = operator_matrix(d)
    point, basis = ds_affine_set(d)
    if not _in_ds_set(apply(op, point), d):
        return False
    if not all(_in_ds_directions(apply(op, b), d) for b in basis):
        return False
    p = perron_polynomial(d)
    return reflect(p) == (p if d % 2 else -p)


def parity_label(phi: Functional) -> str:
    """'even' for an odd number of non-zero entries, else 'odd' (bookkeeping only)."""
    return "even" if phi.nonzero_count % 2 else "odd"
