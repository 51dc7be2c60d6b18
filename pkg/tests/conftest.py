"""Shared corpus builders and brute-force oracles for the test suite."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import pytest

from dscomplex.complex import Graph, SimplicialComplex, from_facets, whitney
from dscomplex.generators import (
    complete, connected_sum_octahedron_four_sphere, cross_polytope, cycle, ds_non_flat,
    erdos_renyi, hair_sphere, icosahedron, moebius, path, random_sphere, rng_for, star, sun,
    wheel,
)


def named_graphs() -> dict[str, Graph]:
    return {
        "point": complete(1),
        "edge": complete(2),
        "K4": complete(4),
        "K5": complete(5),
        "C4": cycle(4),
        "C5": cycle(5),
        "C7": cycle(7),
        "P4": path(4),
        "star6": star(6),
        "wheel7": wheel(7),
        "S0": cross_polytope(0),
        "octahedron": cross_polytope(2),
        "cross3": cross_polytope(3),
        "icosahedron": icosahedron(),
        "moebius": moebius(),
        "sun": sun(15, 14),
        "hair_sphere": hair_sphere(),
        "connected_sum": connected_sum_octahedron_four_sphere(),
        "ds_non_flat": ds_non_flat(),
        "sphere2": random_sphere(2, 6, 3),
        "sphere3": random_sphere(3, 4, 5),
    }


def er_corpus(count: int, max_n: int, seed0: int = 1000, p: float = 0.5) -> list[Graph]:
    out = []
    for i in range(count):
        n = 3 + i % (max_n - 2)
        out.append(erdos_renyi(n, p, seed0 + i))
    return out


def random_complex(seed: int, max_simplices: int = 200, vertices: int = 10) -> SimplicialComplex:
    """Closure of a few random facets on a small vertex set, kept below a simplex budget."""
    rng = rng_for(seed, stream=7)
    while True:
        facets = []
        for _ in range(int(rng.integers(1, 11))):
            k = int(rng.integers(1, 7))
            facets.append(sorted(int(x) for x in rng.choice(vertices, size=k, replace=False)))
        c = from_facets(facets)
        if len(c) <= max_simplices:
            return c


def brute_cliques(g: Graph) -> list[tuple[int, ...]]:
    out = []
    for k in range(1, len(g.vertices) + 1):
        for s in combinations(g.vertices, k):
            if all(g.has_edge(a, b) for a, b in combinations(s, 2)):
                out.append(s)
    return out


def brute_f_vector(g: Graph) -> tuple[int, ...]:
    counts: dict[int, int] = {}
    for s in brute_cliques(g):
        counts[len(s) - 1] = counts.get(len(s) - 1, 0) + 1
    return tuple(counts[k] for k in range(len(counts)))


def fraction_inverse(m) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over Q; independent of the Bareiss routine."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[p] = a[p], a[c]
        pv = a[c][c]
        a[c] = [x / pv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


@pytest.fixture(scope="session")
def graphs() -> dict[str, Graph]:
    return named_graphs()


@pytest.fixture(scope="session")
def complexes(graphs) -> dict[str, SimplicialComplex]:
    return {k: whitney(g) for k, g in graphs.items()}


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion, in criterion order."""
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when == "call" and "test_acceptance.py::" in rep.nodeid:
                name = rep.nodeid.split("::")[-1]
                lines.append((name, "PASS" if rep.passed else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, verdict in sorted(lines):
            number = name.split("_")[2]
            terminalreporter.write_line(f"criterion {int(number):2d}  {verdict}  {name}")
