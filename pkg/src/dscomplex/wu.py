"""f-matrix, Wu characteristic and the bivariate simplex generating function.

f_kl counts ordered pairs (x, y) of intersecting simplices with dim x = k and
dim y = l. The generating function is f(t, s) = 1 + sum f_kl t^(k+1) s^(l+1)
and the Wu characteristic is w(G) = sum_{x ~ y} w(x) w(y), w(x) = (-1)^dim x,
which equals f(-1, -1) - 1.

The local form of the bivariate Gauss-Bonnet formula distributes the weight
t^|x| s^|y| of an intersecting pair equally among the vertices of x & y.
Seen from a vertex v with x = x' + v and y = y' + v this gives

    K_v(t, s) = sum_{x', y'} t^(|x'|+1) s^(|y'|+1) / (1 + |x' & y'|)

over pairs of (possibly empty) cliques of the unit sphere S(v).
"""

from __future__ import annotations

import csv
import io
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .complex import Graph, SimplicialComplex, _cliques, unit_sphere, whitney
from .config import DEFAULT_PAIR_CAP, simplex_cap
from .errors import CapExceededError, InvalidInputError


class BiPolynomial:
    """Exact polynomial in (t, s); ``coefficients[(i, j)]`` multiplies t^i s^j."""

    def __init__(self, coefficients: Mapping[tuple[int, int], object] | None = None):
        self._c: dict[tuple[int, int], Fraction] = {}
        for (i, j), v in (coefficients or {}).items():
            if isinstance(v, float):
                raise TypeError("BiPolynomial coefficients must be exact")
            v = Fraction(v)
            if v:
                self._c[(int(i), int(j))] = v

    @property
    def coefficients(self) -> dict:
        return dict(self._c)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        return self._c.get(key, Fraction(0))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = BiPolynomial({(0, 0): other})
        return isinstance(other, BiPolynomial) and self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __bool__(self) -> bool:
        return bool(self._c)

    def __repr__(self) -> str:
        return f"BiPolynomial({ {k: str(v) for k, v in sorted(self._c.items())} })"

    def __add__(self, other) -> "BiPolynomial":
        if isinstance(other, (int, Fraction)):
            other = BiPolynomial({(0, 0): other})
        out = defaultdict(Fraction, self._c)
        for k, v in other._c.items():
            out[k] += v
        return BiPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "BiPolynomial":
        return BiPolynomial({k: -v for k, v in self._c.items()})

    def __sub__(self, other) -> "BiPolynomial":
        return self + (-other if isinstance(other, BiPolynomial) else -Fraction(other))

    def __mul__(self, other) -> "BiPolynomial":
        if isinstance(other, (int, Fraction)):
            return BiPolynomial({k: v * other for k, v in self._c.items()})
        out = defaultdict(Fraction)
        for (a, b), u in self._c.items():
            for (c, d), v in other._c.items():
                out[(a + c, b + d)] += u * v
        return BiPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, t, s):
        return sum((v * t**i * s**j for (i, j), v in self._c.items()), Fraction(0))

    @property
    def shape(self) -> tuple[int, int]:
        if not self._c:
            return (0, 0)
        return (max(i for i, _ in self._c) + 1, max(j for _, j in self._c) + 1)

    def grid(self) -> list[list[Fraction]]:
        rows, cols = self.shape
        return [[self[(i, j)] for j in range(cols)] for i in range(rows)]

    def swap(self) -> "BiPolynomial":
        return BiPolynomial({(j, i): v for (i, j), v in self._c.items()})

    def substitute_reflection(self, variable: int) -> "BiPolynomial":
        """Replace t (variable 0) or s (variable 1) by -1 - t or -1 - s."""
        out = BiPolynomial()
        base = BiPolynomial({(0, 0): -1, (1, 0) if variable == 0 else (0, 1): -1})
        powers = {0: BiPolynomial({(0, 0): 1})}
        for (i, j), v in sorted(self._c.items()):
            e = i if variable == 0 else j
            while max(powers) < e:
                powers[max(powers) + 1] = powers[max(powers)] * base
            rest = BiPolynomial({(0, j) if variable == 0 else (i, 0): v})
            out = out + powers[e] * rest
        return out

    def integrate_t(self) -> "BiPolynomial":
        """Antiderivative in t vanishing at t = 0."""
        return BiPolynomial({(i + 1, j): v / (i + 1) for (i, j), v in self._c.items()})

    def to_json(self) -> dict:
        return {"grid": [[str(x) for x in row] for row in self.grid()]}

    @classmethod
    def from_json(cls, data: dict) -> "BiPolynomial":
        return cls({(i, j): Fraction(x) for i, row in enumerate(data["grid"])
                    for j, x in enumerate(row)})


@dataclass(frozen=True)
class FMatrix:
    entries: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, key: tuple[int, int]) -> int:
        k, l = key
        return self.entries[k][l]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k"] + [f"l={l}" for l in range(self.size)])
        for k, row in enumerate(self.entries):
            w.writerow([k, *row])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {"entries": [list(r) for r in self.entries]}


def _incidence(c: SimplicialComplex) -> dict[int, list[int]]:
    inc: dict[int, list[int]] = defaultdict(list)
    for i, s in enumerate(c.simplices):
        for v in s:
            inc[v].append(i)
    return inc


def intersecting_pairs(c: SimplicialComplex, cap: int | None = None):
    """Yield ordered pairs (i, j) of indices of intersecting simplices, i-major order."""
    cap = simplex_cap(DEFAULT_PAIR_CAP) if cap is None else cap
    inc = _incidence(c)
    # upper bound on the work: each pair appears once per shared vertex
    bound = sum(len(inc[v]) for s in c.simplices for v in s)
    if bound > cap:
        raise CapExceededError(f"pair enumeration needs up to {bound} steps, cap is {cap}",
                               required=bound, cap=cap)
    for i, s in enumerate(c.simplices):
        partners = set()
        for v in s:
            partners.update(inc[v])
        for j in sorted(partners):
            yield i, j


def f_matrix(c: SimplicialComplex, cap: int | None = None) -> FMatrix:
    n = c.dimension + 1
    m = [[0] * n for _ in range(n)]
    simplices = c.simplices
    for i, j in intersecting_pairs(c, cap):
        m[len(simplices[i]) - 1][len(simplices[j]) - 1] += 1
    return FMatrix(tuple(tuple(r) for r in m))


def wu_characteristic(c: SimplicialComplex, cap: int | None = None) -> int:
    """Direct double sum of w(x) w(y) over ordered intersecting pairs."""
    simplices = c.simplices
    return sum(
        (-1) ** (len(simplices[i]) + len(simplices[j]))
        for i, j in intersecting_pairs(c, cap)
    )


def bivariate_f(c: SimplicialComplex | FMatrix, cap: int | None = None) -> BiPolynomial:
    fm = c if isinstance(c, FMatrix) else f_matrix(c, cap)
    coeffs = {(0, 0): 1}
    for k, row in enumerate(fm.entries):
        for l, v in enumerate(row):
            coeffs[(k + 1, l + 1)] = v
    return BiPolynomial(coeffs)


def wu_from_generating_function(f: BiPolynomial) -> Fraction:
    return f(-1, -1) - 1


def _check_vertex(g: Graph, v: int) -> None:
    if v not in g.adjacency:
        raise InvalidInputError(f"unknown vertex {v}")


def bivariate_curvature(g: Graph, v: int) -> BiPolynomial:
    """Antiderivative in t of the unit sphere's bivariate f-function."""
    _check_vertex(g, v)
    return bivariate_f(whitney(unit_sphere(g, v))).integrate_t()


def wu_curvature(g: Graph, v: int) -> BiPolynomial:
    """Share of f_G(t, s) - 1 collected at v (see module docstring)."""
    _check_vertex(g, v)
    cliques = [frozenset()] + [frozenset(x) for x in _cliques(unit_sphere(g, v))]
    acc: dict[tuple[int, int], Fraction] = defaultdict(Fraction)
    for x in cliques:
        for y in cliques:
            acc[(len(x) + 1, len(y) + 1)] += Fraction(1, 1 + len(x & y))
    return BiPolynomial(acc)


def graph_bivariate_f(g: Graph) -> BiPolynomial:
    return bivariate_f(whitney(g))


def wu_gauss_bonnet_check(g: Graph) -> bool:
    """f_G(t, s) = 1 + sum_v K_v(t, s)."""
    total = BiPolynomial({(0, 0): 1})
    for v in g.vertices:
        total = total + wu_curvature(g, v)
    return total == graph_bivariate_f(g)


def literal_bivariate_gauss_bonnet_check(g: Graph) -> bool:
    """The same identity with K_v replaced by bivariate_curvature; fails in general."""
    total = BiPolynomial({(0, 0): 1})
    for v in g.vertices:
        total = total + bivariate_curvature(g, v)
    return total == graph_bivariate_f(g)


def wu_ds_check(c: SimplicialComplex, d: int | None = None) -> bool:
    """f(t,s) + (-1)^d f(-1-t, s) = 0 and f(t,s) + (-1)^d f(t, -1-s) = 0."""
    d = c.dimension if d is None else d
    f = bivariate_f(c)
    sign = -1 if d % 2 else 1
    return all(not (f + f.substitute_reflection(var) * sign) for var in (0, 1))
