"""Parametrized Gauss-Bonnet for Whitney complexes.

Every k-simplex y of a unit sphere S(x) spans a (k+1)-simplex with x whose
weight t^(k+2) is shared equally among its k+2 vertices. The share collected
at x is the antiderivative of the sphere's f-function, and summing over all
vertices recovers every simplex of G once. The empty set is counted by the
constant term, so the identity reads f_G(t) = 1 + sum_x F_S(x)(t).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .complex import Graph, clique_f_vector, euler_characteristic, unit_sphere
from .errors import InvalidInputError
from .poly import FPolynomial, antiderivative, derivative, ds_symmetric, evaluate


def _sphere_f(g: Graph, v: int) -> FPolynomial:
    return FPolynomial.from_f_vector(clique_f_vector(unit_sphere(g, v)))


def curvature_polynomial(g: Graph, v: int) -> FPolynomial:
    return antiderivative(_sphere_f(g, v))


def levitt_curvature(g: Graph, v: int) -> Fraction:
    """K(v) = -F_S(v)(-1) = sum_{k>=-1} (-1)^(k+1) f_k(S(v)) / (k+2), f_{-1} = 1."""
    return -evaluate(curvature_polynomial(g, v), Fraction(-1))


@dataclass(frozen=True)
class CurvatureReport:
    per_vertex: dict
    total: FPolynomial
    levitt: dict

    def to_json(self) -> dict:
        return {
            "per_vertex": {str(v): p.to_json() for v, p in self.per_vertex.items()},
            "total": self.total.to_json(),
            "levitt": {str(v): str(k) for v, k in self.levitt.items()},
        }

    def to_csv_rows(self) -> list[tuple]:
        return [("vertex", "K")] + [(v, str(k)) for v, k in self.levitt.items()]


def curvature_report(g: Graph) -> CurvatureReport:
    per_vertex = {v: curvature_polynomial(g, v) for v in g.vertices}
    total = FPolynomial()
    for p in per_vertex.values():
        total = total + p
    levitt = {v: -evaluate(p, Fraction(-1)) for v, p in per_vertex.items()}
    return CurvatureReport(per_vertex, total, levitt)


def gauss_bonnet_check(g: Graph) -> bool:
    lhs = FPolynomial.from_f_vector(clique_f_vector(g))
    return lhs == 1 + curvature_report(g).total


def derivative_identity_check(g: Graph) -> bool:
    """f_G'(t) = sum_x f_S(x)(t)."""
    total = FPolynomial()
    for v in g.vertices:
        total = total + _sphere_f(g, v)
    return derivative(FPolynomial.from_f_vector(clique_f_vector(g))) == total


def levitt_check(g: Graph) -> bool:
    return sum(levitt_curvature(g, v) for v in g.vertices) == euler_characteristic(
        clique_f_vector(g)
    )


class ValuationVector(tuple):
    """Coefficients X_0, X_1, ... of the valuation G -> sum_k X_k f_k(G)."""

    def __new__(cls, coefficients: Sequence = ()):
        return super().__new__(cls, (Fraction(c) for c in coefficients))

    def __repr__(self) -> str:
        return f"ValuationVector({[str(c) for c in self]})"


def euler_vector(d: int) -> ValuationVector:
    return ValuationVector((-1) ** k for k in range(d + 1))


def counting_vector(k: int) -> ValuationVector:
    """The valuation v_k = f_k."""
    return ValuationVector([0] * k + [1])


def ds_valuation_vector(k: int, d: int) -> ValuationVector:
    """Classical Dehn-Sommerville valuation X_{k,d} on (f_0, ..., f_{d-1}).

    It vanishes on discrete manifolds of dimension d - 1 (whose f-vectors have
    length d), e.g. X_{0,2} on cycle graphs and X_{k,3} on 2-spheres.
    """
    if not 0 <= k <= d - 1:
        raise InvalidInputError(f"X_(k,d) needs 0 <= k <= d-1, got k={k}, d={d}")
    x = [0] * d
    for j in range(k, d):
        x[j] = (-1) ** (j + d) * comb(j + 1, k + 1)
    x[k] += 1
    return ValuationVector(x)


def ds_valuation_matrix(d: int) -> list[ValuationVector]:
    """Rows X_{0,d} .. X_{d-2,d}."""
    return [ds_valuation_vector(k, d) for k in range(d - 1)]


def valuation_eval(x: Sequence, f) -> Fraction:
    """sum_k X_k f_k with zero padding on whichever side is shorter."""
    f = f.f_vector if hasattr(f, "f_vector") else tuple(f)
    return sum((Fraction(a) * b for a, b in zip(x, f)), Fraction(0))


def valuation_curvature(x: Sequence, g: Graph, v: int) -> Fraction:
    """sum_l X_l f_{l-1}(S(v)) / (l+1), f_{-1} = 1."""
    sphere = (1,) + clique_f_vector(unit_sphere(g, v))
    return sum(
        (Fraction(c) * sphere[l] / (l + 1) for l, c in enumerate(x) if l < len(sphere)),
        Fraction(0),
    )


def valuation_gauss_bonnet_check(x: Sequence, g: Graph) -> bool:
    total = sum((valuation_curvature(x, g, v) for v in g.vertices), Fraction(0))
    return total == valuation_eval(x, clique_f_vector(g))


def valuation_identity_check(k: int, d: int) -> bool:
    """X_{k+1,d+1}[l+1] / (l+2) == X_{k,d}[l] / (k+2) for every l in 0..d-1."""
    upper = ds_valuation_vector(k + 1, d + 1)
    lower = ds_valuation_vector(k, d)
    return all(upper[l + 1] / (l + 2) == lower[l] / (k + 2) for l in range(d))


def generalized_handshake_check(g: Graph) -> bool:
    """f_k(G) = sum_x f_{k-1}(S(x)) / (k+1) for every k."""
    f = clique_f_vector(g)
    spheres = [(1,) + clique_f_vector(unit_sphere(g, v)) for v in g.vertices]
    for k in range(len(f) + 1):
        rhs = sum((Fraction(s[k], k + 1) for s in spheres if k < len(s)), Fraction(0))
        if rhs != (f[k] if k < len(f) else 0):
            return False
    return True


def ds_flat(g: Graph) -> bool:
    """Every unit sphere satisfies the symmetry for its own dimension."""
    return not non_flat_vertices(g)


def non_flat_vertices(g: Graph) -> list[int]:
    bad = []
    for v in g.vertices:
        f = _sphere_f(g, v)
        if not ds_symmetric(f, f.degree - 1):
            bad.append(v)
    return bad
