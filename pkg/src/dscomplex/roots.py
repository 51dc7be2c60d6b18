"""Numeric roots of exact polynomials.

Repeated roots are split off exactly (square-free decomposition over Q) so
the floating point iteration only ever sees simple roots. Each square-free
factor is then solved with Aberth-Ehrlich simultaneous iteration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.optimize import linear_sum_assignment

from .errors import InvalidInputError, NumericFailureError
from .poly import FPolynomial, compose_affine, derivative

MAX_ITERATIONS = 200
RESIDUAL_TOLERANCE = 1e-12


@dataclass(frozen=True)
class RootSet:
    roots: tuple[complex, ...]
    residuals: tuple[float, ...]

    @property
    def residual_bound(self) -> float:
        return max(self.residuals, default=0.0)

    def __len__(self) -> int:
        return len(self.roots)

    def real_flags(self) -> tuple[bool, ...]:
        return tuple(is_real(z) for z in self.roots)

    def all_real(self) -> bool:
        return all(self.real_flags())

    def to_json(self) -> list[dict]:
        return [{"re": z.real, "im": z.imag} for z in self.roots]


def is_real(z: complex) -> bool:
    return abs(z.imag) < 1e-8 * (1 + abs(z.real))


def _divmod(a: FPolynomial, b: FPolynomial) -> tuple[FPolynomial, FPolynomial]:
    if b.degree < 0:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coefficients)
    q = [Fraction(0)] * max(a.degree - b.degree + 1, 0)
    lead = b.coefficients[-1]
    for i in range(len(q) - 1, -1, -1):
        c = rem[i + b.degree] / lead
        q[i] = c
        if c:
            for j, bc in enumerate(b.coefficients):
                rem[i + j] -= c * bc
    return FPolynomial(q), FPolynomial(rem[: b.degree] if b.degree > 0 else [])


def _monic(p: FPolynomial) -> FPolynomial:
    return FPolynomial(c / p.coefficients[-1] for c in p.coefficients)


def _gcd(a: FPolynomial, b: FPolynomial) -> FPolynomial:
    while b.degree >= 0:
        a, b = b, _divmod(a, b)[1]
    return _monic(a)


def squarefree_decomposition(f: FPolynomial) -> list[tuple[FPolynomial, int]]:
    """Yun's algorithm: f = c * prod p_i^i with p_i square-free and coprime."""
    if f.degree < 1:
        return []
    out = []
    df = derivative(f)
    c = _gcd(f, df)
    w = _divmod(f, c)[0]
    y = _divmod(df, c)[0]
    z = y - derivative(w)
    i = 1
    while w.degree > 0:
        g = _gcd(w, z)
        if g.degree > 0:
            out.append((g, i))
        w = _divmod(w, g)[0]
        y = _divmod(z, g)[0]
        z = y - derivative(w)
        i += 1
    return out


def _aberth(p: FPolynomial) -> np.ndarray:
    n = p.degree
    if n == 1:
        return np.array([complex(-p.coefficients[0] / p.coefficients[1])])
    lead = p.coefficients[-1]
    center = -p.coefficients[-2] / (n * lead)
    shifted = compose_affine(p, center, 1)
    # Fujiwara-type radius of the roots about the centroid
    radius = max(
        (abs(float(shifted[k] / lead)) ** (1.0 / (n - k)) for k in range(n)), default=0.0
    )
    radius = 2.0 * radius if radius > 0 else 1.0
    scale = max(abs(c) for c in p.coefficients)
    coeffs = np.array([float(c / scale) for c in reversed(p.coefficients)])
    dcoeffs = np.polyder(coeffs)
    angles = 2 * np.pi * np.arange(n) / n + 0.4
    z = float(center) + radius * np.exp(1j * angles)
    abs_coeffs = np.abs(coeffs)
    for _ in range(MAX_ITERATIONS):
        pv = np.polyval(coeffs, z)
        dv = np.polyval(dcoeffs, z)
        ratio = np.divide(pv, dv, out=np.zeros_like(pv), where=dv != 0)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        s = inv.sum(axis=1)
        w = ratio / (1.0 - ratio * s)
        z = z - w
        tiny = np.abs(w) <= 1e-15 * (1.0 + np.abs(z))
        bound = np.polyval(abs_coeffs, np.abs(z))
        small = np.abs(np.polyval(coeffs, z)) <= RESIDUAL_TOLERANCE * bound
        if np.all(tiny | small):
            # one more correction step settles the last bits
            pv = np.polyval(coeffs, z)
            dv = np.polyval(dcoeffs, z)
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            ratio = np.divide(pv, dv, out=np.zeros_like(pv), where=dv != 0)
            return z - ratio / (1.0 - ratio * inv.sum(axis=1))
    raise NumericFailureError(
        f"Aberth iteration did not converge in {MAX_ITERATIONS} steps", best_iterate=z
    )


def _snap_real(z: complex) -> complex:
    return complex(z.real, 0.0) if is_real(z) else z


def roots(f: FPolynomial) -> RootSet:
    """All complex roots of f with multiplicity, sorted by (Re, Im)."""
    if f.degree < 1:
        raise InvalidInputError("root finding needs degree >= 1")
    found: list[complex] = []
    for factor, mult in squarefree_decomposition(f):
        for z in _aberth(factor):
            found.extend([_snap_real(complex(z))] * mult)
    found.sort(key=lambda z: (round(z.real, 12), z.imag))
    coeffs = [float(c) for c in reversed(f.coefficients)]
    residuals = tuple(float(abs(np.polyval(coeffs, z))) for z in found)
    return RootSet(tuple(found), residuals)


def pairing_mismatch(r: RootSet) -> float:
    """Largest distance in the best matching of the roots with their mirror images."""
    if not r.roots:
        return 0.0
    z = np.array(r.roots)
    mirror = -1.0 - z
    cost = np.abs(z[:, None] - mirror[None, :])
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].max())


def root_pairing_check(r: RootSet, d: int | None = None, tol: float = 1e-6) -> bool:
    """True iff the root multiset is invariant under z -> -1-z."""
    return pairing_mismatch(r) <= tol


def has_center_root(r: RootSet, tol: float = 1e-6) -> bool:
    return any(abs(z.real + 0.5) <= tol for z in r.roots)


def pairing_report(r: RootSet, d: int | None = None, tol: float = 1e-6) -> dict:
    report = {"paired": root_pairing_check(r, d, tol), "max_mismatch": pairing_mismatch(r)}
    if d is not None and d % 2 == 0:
        report["center_root"] = has_center_root(r, tol)
    return report


def root_intervals(r: RootSet) -> dict:
    reals = [z.real for z in r.roots if is_real(z)]
    return {
        "all_real": r.all_real(),
        "in_open_unit_interval": r.all_real() and all(-1 < x < 0 for x in reals),
        "min_real": min(reals) if reals else math.nan,
        "max_real": max(reals) if reals else math.nan,
    }

