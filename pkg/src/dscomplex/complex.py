"""Finite abstract simplicial complexes, simple graphs, and the constructions
that connect them (Whitney complexes, unit spheres, joins, refinements).

Simplices are tuples of strictly increasing non-negative integers. Every
constructor canonicalizes its input, so two complexes holding the same sets
compare equal and serialize identically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .config import DEFAULT_BARYCENTRIC_CAP, simplex_cap
from .errors import CapExceededError, InvalidInputError

Simplex = tuple[int, ...]


def _label(v) -> int:
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise InvalidInputError(f"vertex labels must be non-negative integers, got {v!r}")
    return v


def _canon(vertices: Iterable) -> Simplex:
    return tuple(sorted({_label(v) for v in vertices}))


def _order_key(s: Simplex):
    return (len(s), s)


class SimplicialComplex:
    """A finite set of non-empty vertex sets closed under non-empty subsets.

    Simplices are kept sorted by (dimension, lexicographic vertices); that
    order is the canonical indexing used by matrices built over the complex.
    """

    def __init__(self, simplices: Iterable[Iterable[int]] = (), *, check: bool = True):
        canon = {_canon(s) for s in simplices}
        if () in canon:
            raise InvalidInputError("simplices must be non-empty")
        ordered = tuple(sorted(canon, key=_order_key))
        self._simplices = ordered
        self._index = {s: i for i, s in enumerate(ordered)}
        if check:
            self._validate()

    def _validate(self) -> None:
        for s in self._simplices:
            if len(s) > 1:
                for i in range(len(s)):
                    face = s[:i] + s[i + 1:]
                    if face not in self._index:
                        raise InvalidInputError(
                            f"not closed under subsets: {s} is present but {face} is not"
                        )

    @property
    def simplices(self) -> tuple[Simplex, ...]:
        return self._simplices

    def __len__(self) -> int:
        return len(self._simplices)

    def __iter__(self) -> Iterator[Simplex]:
        return iter(self._simplices)

    def __contains__(self, s) -> bool:
        return tuple(s) in self._index

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._simplices == other._simplices

    def __hash__(self) -> int:
        return hash(self._simplices)

    def __repr__(self) -> str:
        return f"SimplicialComplex(f={self.f_vector}, dim={self.dimension})"

    def index(self, s: Simplex) -> int:
        return self._index[tuple(s)]

    @property
    def dimension(self) -> int:
        return len(self._simplices[-1]) - 1 if self._simplices else -1

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * (self.dimension + 1)
        for s in self._simplices:
            counts[len(s) - 1] += 1
        return tuple(counts)

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(s[0] for s in self._simplices if len(s) == 1)

    def facets(self) -> list[Simplex]:
        """Maximal simplices, in canonical order."""
        covered = set()
        for s in self._simplices:
            if len(s) > 1:
                for i in range(len(s)):
                    covered.add(s[:i] + s[i + 1:])
        return [s for s in self._simplices if s not in covered]

    def relabel(self, mapping) -> "SimplicialComplex":
        return SimplicialComplex(
            (tuple(mapping[v] for v in s) for s in self._simplices), check=False
        )

    def skeleton_graph(self) -> "Graph":
        return Graph(self.vertices, (s for s in self._simplices if len(s) == 2))


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on non-negative integer labels."""

    vertices: tuple[int, ...] = ()
    edges: frozenset = field(default_factory=frozenset)

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Sequence[int]] = ()):
        vs = {_label(v) for v in vertices}
        es = set()
        for e in edges:
            e = tuple(e)
            if len(e) != 2:
                raise InvalidInputError(f"edge must have two endpoints, got {e!r}")
            a, b = _label(e[0]), _label(e[1])
            if a == b:
                raise InvalidInputError(f"loop at vertex {a} not allowed")
            vs.update((a, b))
            es.add((a, b) if a < b else (b, a))
        object.__setattr__(self, "vertices", tuple(sorted(vs)))
        object.__setattr__(self, "edges", frozenset(es))

    @cached_property
    def adjacency(self) -> dict[int, frozenset]:
        adj: dict[int, set] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return {v: frozenset(n) for v, n in adj.items()}

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"Graph(n={len(self.vertices)}, m={len(self.edges)})"

    def neighbors(self, v: int) -> frozenset:
        try:
            return self.adjacency[v]
        except KeyError:
            raise InvalidInputError(f"unknown vertex {v!r}") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, a: int, b: int) -> bool:
        return ((a, b) if a < b else (b, a)) in self.edges

    def induced(self, vertices: Iterable[int]) -> "Graph":
        keep = set(vertices)
        return Graph(keep, (e for e in self.edges if e[0] in keep and e[1] in keep))

    def remove_vertex(self, v: int) -> "Graph":
        self.neighbors(v)
        return self.induced(u for u in self.vertices if u != v)

    def relabel(self, mapping) -> "Graph":
        return Graph((mapping[v] for v in self.vertices),
                     ((mapping[a], mapping[b]) for a, b in self.edges))

    def normalized(self) -> "Graph":
        """Same graph relabeled to 0..n-1 preserving vertex order."""
        return self.relabel({v: i for i, v in enumerate(self.vertices)})

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    @classmethod
    def from_networkx(cls, g) -> "Graph":
        return cls(g.nodes, g.edges)


def from_facets(facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Downward closure of ``facets``. An empty facet is rejected."""
    simplices = set()
    for facet in facets:
        s = _canon(facet)
        if not s:
            raise InvalidInputError("facets must be non-empty")
        if s in simplices:
            continue
        for k in range(1, len(s) + 1):
            simplices.update(combinations(s, k))
    return SimplicialComplex(simplices, check=False)


def _cliques(g: Graph) -> Iterator[Simplex]:
    adj = g.adjacency
    up = {v: frozenset(u for u in adj[v] if u > v) for v in g.vertices}

    def extend(clique, candidates):
        for v in sorted(candidates):
            grown = clique + (v,)
            yield grown
            yield from extend(grown, candidates & up[v])

    for v in g.vertices:
        yield (v,)
        yield from extend((v,), up[v])


def whitney(g: Graph) -> SimplicialComplex:
    """Complex of all vertex sets of complete subgraphs of ``g``."""
    return SimplicialComplex(_cliques(g), check=False)


def clique_f_vector(g: Graph) -> tuple[int, ...]:
    """f-vector of ``whitney(g)`` without materializing the complex."""
    counts: list[int] = []
    for c in _cliques(g):
        k = len(c) - 1
        if k == len(counts):
            counts.append(0)
        counts[k] += 1
    return tuple(counts)


def unit_sphere(g: Graph, v: int) -> Graph:
    """Subgraph induced on the neighbors of ``v``; ``v`` itself is excluded."""
    return g.induced(g.neighbors(v))


def euler_characteristic(c) -> int:
    f = c.f_vector if isinstance(c, SimplicialComplex) else c
    return sum(-n if k % 2 else n for k, n in enumerate(f))


def graph_euler_characteristic(g: Graph) -> int:
    return euler_characteristic(clique_f_vector(g))


def _offset(a: SimplicialComplex | Graph) -> int:
    vs = a.vertices
    return vs[-1] + 1 if vs else 0


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Join a + b; vertices of ``b`` are shifted past the largest label of ``a``."""
    off = _offset(a)
    shifted = [tuple(v + off for v in y) for y in b]
    simplices = list(a.simplices) + shifted
    simplices.extend(x + y for x in a for y in shifted)
    return SimplicialComplex(simplices, check=False)


def disjoint_union(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    off = _offset(a)
    return SimplicialComplex(
        list(a.simplices) + [tuple(v + off for v in y) for y in b], check=False
    )


def graph_join(a: Graph, b: Graph) -> Graph:
    off = _offset(a)
    bv = [v + off for v in b.vertices]
    edges = list(a.edges) + [(x + off, y + off) for x, y in b.edges]
    edges.extend((x, y) for x in a.vertices for y in bv)
    return Graph(list(a.vertices) + bv, edges)


def graph_disjoint_union(a: Graph, b: Graph) -> Graph:
    off = _offset(a)
    return Graph(
        list(a.vertices) + [v + off for v in b.vertices],
        list(a.edges) + [(x + off, y + off) for x, y in b.edges],
    )


def comparability_graph(c: SimplicialComplex) -> Graph:
    """Graph on simplex indices with edges between comparable simplices."""
    edges = []
    for i, x in enumerate(c.simplices):
        for k in range(1, len(x)):
            for face in combinations(x, k):
                edges.append((c.index(face), i))
    return Graph(range(len(c)), edges)


def _fubini(n: int, _memo={0: 1}) -> int:
    # ordered set partitions of an n-set = chains of faces topped by an n-simplex
    if n not in _memo:
        from math import comb

        _memo[n] = sum(comb(n, k) * _fubini(n - k) for k in range(1, n + 1))
    return _memo[n]


def chain_count(c: SimplicialComplex) -> int:
    """Number of simplices of the Barycentric refinement, computed without building it."""
    return sum(n * _fubini(k + 1) for k, n in enumerate(c.f_vector))


def barycentric(c: SimplicialComplex, cap: int | None = None) -> SimplicialComplex:
    """Order complex of the face poset; vertex i of the result is ``c.simplices[i]``."""
    cap = simplex_cap(DEFAULT_BARYCENTRIC_CAP) if cap is None else cap
    required = chain_count(c)
    if required > cap:
        raise CapExceededError(
            f"Barycentric refinement needs {required} simplices (cap {cap})",
            required=required, cap=cap,
        )
    index = c.index
    down: dict[Simplex, list[tuple[int, ...]]] = {}
    for x in c.simplices:
        top = index(x)
        chains = [(top,)]
        for k in range(1, len(x)):
            for face in combinations(x, k):
                chains.extend(ch + (top,) for ch in down[face])
        down[x] = chains
    return SimplicialComplex(
        (tuple(sorted(ch)) for chains in down.values() for ch in chains), check=False
    )


def edge_refine(g: Graph, e: Sequence[int], new_vertex: int | None = None) -> Graph:
    """Subdivide edge (a, b) by a fresh vertex joined to a, b and S(a) & S(b)."""
    a, b = e
    if not g.has_edge(a, b):
        raise InvalidInputError(f"({a}, {b}) is not an edge")
    c = _offset(g) if new_vertex is None else _label(new_vertex)
    if c in g.adjacency:
        raise InvalidInputError(f"vertex {c} already exists")
    common = g.neighbors(a) & g.neighbors(b)
    key = (a, b) if a < b else (b, a)
    edges = [x for x in g.edges if x != key]
    edges += [(a, c), (b, c)] + [(z, c) for z in common]
    return Graph(list(g.vertices) + [c], edges)
