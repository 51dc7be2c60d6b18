"""Connection matrix L, its integer inverse g and the identities g satisfies.

L(x, y) = 1 when simplices x and y share a vertex. L is unimodular, so the
Green function g = L^-1 is an integer matrix. The inverse is computed with
fraction-free elimination and unimodularity is checked, not assumed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .complex import SimplicialComplex, comparability_graph, graph_euler_characteristic, unit_sphere
from .config import DEFAULT_CONNECTION_CAP, simplex_cap
from .errors import CapExceededError, InconsistencyError
from .linalg import bareiss_inverse
from .poly import FPolynomial, derivative, evaluate
from .refinement import apply, operator_matrix


def _grid_text(m: np.ndarray) -> str:
    return "\n".join(" ".join(str(int(x)) for x in row) for row in m) + "\n"


@dataclass(frozen=True, eq=False)
class ConnectionMatrix:
    ordering: tuple
    entries: np.ndarray

    def __len__(self) -> int:
        return len(self.ordering)

    @property
    def trace(self) -> int:
        return int(sum(self.entries[i, i] for i in range(len(self))))

    def to_text(self) -> str:
        return _grid_text(self.entries)

    def to_json(self) -> dict:
        return {
            "ordering": [list(s) for s in self.ordering],
            "entries": [[int(x) for x in row] for row in self.entries],
        }


@dataclass(frozen=True, eq=False)
class GreenFunction:
    ordering: tuple
    entries: np.ndarray
    determinant: int

    @property
    def trace(self) -> int:
        return int(sum(self.entries[i, i] for i in range(len(self.ordering))))

    @property
    def total(self) -> int:
        return int(self.entries.sum()) if len(self.ordering) else 0

    def to_text(self) -> str:
        return _grid_text(self.entries)

    def to_json(self) -> dict:
        return {
            "ordering": [list(s) for s in self.ordering],
            "determinant": self.determinant,
            "entries": [[int(x) for x in row] for row in self.entries],
        }


def connection_matrix(c: SimplicialComplex, cap: int | None = None) -> ConnectionMatrix:
    cap = simplex_cap(DEFAULT_CONNECTION_CAP) if cap is None else cap
    n = len(c)
    if n > cap:
        raise CapExceededError(f"{n} simplices exceed the connection matrix cap {cap}",
                               required=n, cap=cap)
    # SimplicialComplex already orders by (dimension, lexicographic)
    ordering = c.simplices
    # incidence of simplices against vertices; L = [B B^T > 0]
    verts = {v: i for i, v in enumerate(c.vertices)}
    b = np.zeros((n, len(verts)), dtype=np.int64)
    for i, s in enumerate(ordering):
        for v in s:
            b[i, verts[v]] = 1
    entries = ((b @ b.T) > 0).astype(object) * 1 if n else np.empty((0, 0), dtype=object)
    return ConnectionMatrix(ordering, entries)


def green(c: SimplicialComplex, cap: int | None = None) -> GreenFunction:
    """Exact inverse of L; results are cached per complex and read-only."""
    cap = simplex_cap(DEFAULT_CONNECTION_CAP) if cap is None else cap
    return _green(c, cap)


@lru_cache(maxsize=128)
def _green(c: SimplicialComplex, cap: int) -> GreenFunction:
    lm = connection_matrix(c, cap)
    n = len(lm)
    det, adj = bareiss_inverse(lm.entries.tolist()) if n else (1, np.empty((0, 0), dtype=object))
    if det not in (1, -1):
        raise InconsistencyError(f"connection matrix has determinant {det}, expected +1 or -1")
    g = adj * det
    if n and not np.array_equal(lm.entries.dot(g), np.identity(n, dtype=object)):
        raise InconsistencyError("L g != I after exact inversion")
    g.flags.writeable = False
    return GreenFunction(lm.ordering, g, int(det))


def energy_check(c: SimplicialComplex) -> bool:
    """Sum of all Green function entries equals the Euler characteristic."""
    return green(c).total == sum((-1) ** k * f for k, f in enumerate(c.f_vector))


@lru_cache(maxsize=128)
def _sphere_chis(c: SimplicialComplex) -> tuple[int, ...]:
    """chi(S(x)) for each simplex x, with S(x) taken in the comparability graph."""
    gamma = comparability_graph(c)
    return tuple(graph_euler_characteristic(unit_sphere(gamma, i)) for i in range(len(c)))


def green_diagonal_check(c: SimplicialComplex) -> bool:
    g = green(c)
    chis = _sphere_chis(c)
    return all(g.entries[i, i] == 1 - chis[i] for i in range(len(c)))


def super_trace_check(c: SimplicialComplex) -> bool:
    """sum_x w(x) L(x,x) = sum_x w(x) g(x,x) = chi, with w(x) = (-1)^dim(x)."""
    g = green(c)
    w = [(-1) ** (len(s) - 1) for s in c.simplices]
    chi = sum(w)
    return sum(wi * int(g.entries[i, i]) for i, wi in enumerate(w)) == chi


def refined_f_polynomial(c: SimplicialComplex) -> FPolynomial:
    """f-function of the Barycentric refinement, through the refinement operator."""
    if c.dimension < 0:
        return FPolynomial([1])
    return FPolynomial.from_f_vector(apply(operator_matrix(c.dimension), c.f_vector))


@dataclass(frozen=True)
class HydrogenReport:
    trace_g: int
    trace_l: int
    refined_derivative: Fraction
    sphere_sum: int
    trace_l_minus_g: int

    def to_json(self) -> dict:
        return {
            "trace_g": self.trace_g,
            "trace_L": self.trace_l,
            "refined_derivative_at_minus_one": str(self.refined_derivative),
            "sum_one_minus_sphere_chi": self.sphere_sum,
            "trace_L_minus_trace_g": self.trace_l_minus_g,
        }


def hydrogen_report(c: SimplicialComplex) -> HydrogenReport:
    """Collect trace data; raises InconsistencyError unless f'_{G1}(-1) = tr(g)."""
    g = green(c)
    tr_l = len(c)
    d1 = evaluate(derivative(refined_f_polynomial(c)), Fraction(-1))
    sphere_sum = sum(1 - x for x in _sphere_chis(c))
    if d1 != g.trace:
        raise InconsistencyError(f"f'_G1(-1) = {d1} but tr(g) = {g.trace}")
    return HydrogenReport(g.trace, tr_l, d1, sphere_sum, tr_l - g.trace)


def _ratio(a, b):
    return None if b == 0 else Fraction(a) / Fraction(b)


@dataclass(frozen=True)
class LogDerivativeReport:
    refined_value: Fraction
    refined_derivative: Fraction
    log_derivative: Fraction | None
    trace_over_energy: Fraction | None
    trace_over_one_minus_chi: Fraction | None

    @property
    def flags(self) -> list[str]:
        out = []
        if self.log_derivative is None:
            out.append("f_G1(-1) = 0")
        if self.trace_over_energy is None:
            out.append("sum g = 0")
        if self.trace_over_one_minus_chi is None:
            out.append("1 - chi = 0")
        return out

    def to_json(self) -> dict:
        s = lambda x: None if x is None else str(x)  # noqa: E731
        return {
            "f_G1(-1)": s(self.refined_value),
            "f_G1'(-1)": s(self.refined_derivative),
            "log_derivative": s(self.log_derivative),
            "trace_g_over_sum_g": s(self.trace_over_energy),
            "trace_g_over_one_minus_chi": s(self.trace_over_one_minus_chi),
            "flags": self.flags,
        }


def log_derivative_report(c: SimplicialComplex) -> LogDerivativeReport:
    g = green(c)
    p = refined_f_polynomial(c)
    val = evaluate(p, Fraction(-1))
    der = evaluate(derivative(p), Fraction(-1))
    chi = sum((-1) ** k * f for k, f in enumerate(c.f_vector))
    return LogDerivativeReport(
        val, der, _ratio(der, val), _ratio(g.trace, g.total), _ratio(g.trace, 1 - chi)
    )


def dumps_matrix(m, fmt: str = "text") -> str:
    return m.to_text() if fmt == "text" else json.dumps(m.to_json())
