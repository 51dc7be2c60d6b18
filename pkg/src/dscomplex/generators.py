"""Named fixtures and seeded random generators.

Randomness comes from numpy's Philox generator, a counter-based 64-bit
bit generator: ``numpy.random.Generator(numpy.random.Philox(seed))``. For a
given seed the draw sequence is fixed across platforms.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .complex import (
    Graph, SimplicialComplex, edge_refine, from_facets, graph_disjoint_union, graph_join,
)
from .errors import InvalidInputError

ICOSAHEDRON_FACETS = [
    (1, 2, 5), (1, 2, 6), (1, 3, 4), (1, 3, 5), (1, 4, 6), (2, 5, 9), (2, 6, 10),
    (2, 9, 10), (3, 4, 8), (3, 5, 11), (3, 8, 11), (4, 6, 12), (4, 8, 12), (5, 9, 11),
    (6, 10, 12), (7, 8, 11), (7, 8, 12), (7, 9, 10), (7, 9, 11), (7, 10, 12),
]

MOEBIUS_FACETS = [
    (1, 2, 5), (1, 5, 8), (2, 3, 6), (2, 5, 6), (3, 4, 7), (3, 6, 7), (4, 5, 8), (4, 7, 8),
]

# f-vectors of complexes that are only used through their counts
CUBE_CW_F = (8, 12, 6)
DODECAHEDRON_CW_F = (20, 30, 12)
POINCARE_SPHERE_F = (16, 106, 180, 90)
BARNETTE_SPHERE_F = (8, 27, 38, 19)
TWO_PROJECTIVE_PLANES_F = (30, 84, 56)
DS_NON_FLAT_F = (9, 21, 14)


def rng_for(seed: int, stream: int = 0) -> np.random.Generator:
    """Philox generator keyed by ``seed``; ``stream`` selects an independent counter block."""
    bit = np.random.Philox(key=int(seed) & (2**64 - 1))
    if stream:
        bit = bit.jumped(stream)
    return np.random.Generator(bit)


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidInputError("cycle needs n >= 3")
    return Graph(range(n), ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    return Graph(range(n), ((i, i + 1) for i in range(n - 1)))


def complete(n: int) -> Graph:
    if n < 0:
        raise InvalidInputError("complete graph needs n >= 0")
    return Graph(range(n), combinations(range(n), 2))


def star(n: int) -> Graph:
    """n vertices: hub 0 joined to n-1 leaves."""
    if n < 1:
        raise InvalidInputError("star needs n >= 1")
    return Graph(range(n), ((0, i) for i in range(1, n)))


def wheel(n: int) -> Graph:
    """n vertices: hub 0 joined to every vertex of a rim cycle on n-1 vertices."""
    if n < 4:
        raise InvalidInputError("wheel needs n >= 4")
    rim = n - 1
    edges = [(0, i) for i in range(1, n)]
    edges += [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    return Graph(range(n), edges)


def cross_polytope(d: int) -> Graph:
    """(d+1)-fold join of the two-point graph: 2d+2 vertices, antipodes 2i and 2i+1."""
    if d < -1:
        raise InvalidInputError("cross polytope needs d >= -1")
    n = 2 * (d + 1)
    return Graph(range(n), ((a, b) for a, b in combinations(range(n), 2) if a // 2 != b // 2))


def icosahedron_complex() -> SimplicialComplex:
    return from_facets(ICOSAHEDRON_FACETS)


def icosahedron() -> Graph:
    return icosahedron_complex().skeleton_graph()


def moebius_complex() -> SimplicialComplex:
    return from_facets(MOEBIUS_FACETS)


def moebius() -> Graph:
    return moebius_complex().skeleton_graph()


def sun(cycle_length: int, hairs: int) -> Graph:
    """Cycle with one pendant vertex attached to each of the first ``hairs`` cycle vertices."""
    if hairs > cycle_length:
        raise InvalidInputError("at most one hair per cycle vertex")
    base = cycle(cycle_length)
    edges = list(base.edges) + [(i, cycle_length + i) for i in range(hairs)]
    return Graph(range(cycle_length + hairs), edges)


def hair_sphere(hairs: int = 8) -> Graph:
    """Icosahedron with pendant edges at ``hairs`` distinct vertices."""
    g = icosahedron()
    top = g.vertices[-1]
    edges = list(g.edges) + [(v, top + 1 + i) for i, v in enumerate(g.vertices[:hairs])]
    return Graph(list(g.vertices) + [top + 1 + i for i in range(hairs)], edges)


def wedge(a: Graph, b: Graph, va: int | None = None, vb: int | None = None) -> Graph:
    """Glue ``a`` and ``b`` at one vertex (the first of each by default)."""
    va = a.vertices[0] if va is None else va
    vb = b.vertices[0] if vb is None else vb
    u = graph_disjoint_union(a, b)
    off = a.vertices[-1] + 1
    merged = vb + off
    mapping = {v: (va if v == merged else v) for v in u.vertices}
    return Graph({mapping[v] for v in u.vertices}, ((mapping[x], mapping[y]) for x, y in u.edges))


def connected_sum_octahedron_four_sphere() -> Graph:
    """Octahedron and the 4-sphere C4 + octahedron sharing a single vertex."""
    octahedron = cross_polytope(2)
    four = graph_join(cycle(4), octahedron)
    return wedge(octahedron, four)


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    """G(n, p): pair (i, j), i < j in lexicographic order, kept when its uniform draw is < p."""
    if n < 0 or not 0.0 <= p <= 1.0:
        raise InvalidInputError("erdos_renyi needs n >= 0 and 0 <= p <= 1")
    pairs = list(combinations(range(n), 2))
    draws = rng_for(seed).random(len(pairs))
    return Graph(range(n), (e for e, u in zip(pairs, draws) if u < p))


def ds_non_flat() -> Graph:
    """A Dehn-Sommerville graph with f = (9, 21, 14) that is not Dehn-Sommerville flat.

    Found by scanning seeded G(9, 0.58) samples for that f-vector.
    """
    return erdos_renyi(9, 0.58, 22)


def random_sphere(d: int, steps: int, seed: int) -> Graph:
    """Apply ``steps`` uniformly chosen edge refinements to the d-cross-polytope."""
    if d < 1 or steps < 0:
        raise InvalidInputError("random_sphere needs d >= 1 and steps >= 0")
    g = cross_polytope(d)
    rng = rng_for(seed)
    for _ in range(steps):
        edges = g.sorted_edges()
        g = edge_refine(g, edges[int(rng.integers(len(edges)))])
    return g


KINDS = {
    "cross_polytope": (cross_polytope, ["d"]),
    "cycle": (cycle, ["n"]),
    "complete": (complete, ["n"]),
    "icosahedron": (icosahedron, []),
    "moebius": (moebius_complex, []),
    "star": (star, ["n"]),
    "wheel": (wheel, ["n"]),
    "erdos_renyi": (erdos_renyi, ["n", "p", "seed"]),
    "random_sphere": (random_sphere, ["d", "steps", "seed"]),
    "sun": (sun, ["cycle_length", "hairs"]),
    "hair_sphere": (hair_sphere, []),
    "connected_sum": (connected_sum_octahedron_four_sphere, []),
    "ds_non_flat": (ds_non_flat, []),
}


def generate(kind: str, params=(), seed: int | None = None):
    """Dispatch by name; ``params`` are positional, ``seed`` fills a trailing seed slot."""
    try:
        fn, names = KINDS[kind]
    except KeyError:
        raise InvalidInputError(f"unknown kind {kind!r}; choose from {sorted(KINDS)}") from None
    args = list(params)
    if "seed" in names and len(args) == len(names) - 1:
        args.append(0 if seed is None else seed)
    if len(args) != len(names):
        raise InvalidInputError(f"{kind} expects parameters {names}, got {list(params)}")
    converted = []
    for name, value in zip(names, args):
        try:
            converted.append(float(value) if name == "p" else int(value))
        except (TypeError, ValueError):
            raise InvalidInputError(f"bad value for {name}: {value!r}") from None
    return fn(*converted)
