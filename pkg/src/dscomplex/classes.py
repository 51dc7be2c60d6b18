"""Inductive graph classes: X_d, contractible graphs, spheres, manifolds, varieties.

All recursions descend through unit spheres and are memoized on isomorphism
classes. Lookups hash with Weisfeiler-Lehman colour refinement and confirm
with an exact isomorphism test, so the cache never conflates two graphs.

Reading choices:
  * the empty graph is the only member of each class in dimension -1, and
    members in dimension d >= 0 are non-empty;
  * "removing one vertex renders the complex contractible" is existential.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

import networkx as nx

from .complex import Graph, graph_euler_characteristic, unit_sphere
from .config import DEFAULT_CONTRACTIBLE_VERTEX_CAP, DEFAULT_RECURSION_BUDGET
from .errors import CapExceededError, ResourceError


class IsoCache:
    """Maps isomorphism classes of graphs (plus a key) to values."""

    def __init__(self):
        self._buckets: dict = {}
        self._lock = threading.Lock()

    @staticmethod
    def _hash(g: Graph, key) -> tuple:
        nxg = g.to_networkx()
        return (key, len(g.vertices), len(g.edges), nx.weisfeiler_lehman_graph_hash(nxg)), nxg

    def get(self, g: Graph, key):
        h, nxg = self._hash(g, key)
        for other, value in self._buckets.get(h, ()):
            if nx.is_isomorphic(nxg, other):
                return True, value
        return False, None

    def put(self, g: Graph, key, value) -> None:
        h, nxg = self._hash(g, key)
        with self._lock:
            self._buckets.setdefault(h, []).append((nxg, value))

    def __len__(self) -> int:
        return sum(len(b) for b in self._buckets.values())


_CACHE = IsoCache()


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise ResourceError(
                f"recursion budget of {self.limit} calls exhausted", required=self.used, cap=self.limit
            )


@dataclass(frozen=True)
class ClassWitness:
    verdict: bool
    chain: tuple = ()
    reason: str = ""

    def __bool__(self) -> bool:
        return self.verdict

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "chain": list(self.chain), "reason": self.reason}


def _memo(name, g, d, compute, cache):
    key = (name, d)
    hit, value = cache.get(g, key)
    if hit:
        return value
    value = compute()
    cache.put(g, key, value)
    return value


def _xd(g: Graph, d: int, budget: _Budget, cache: IsoCache) -> bool:
    budget.tick()
    if d < -1:
        return False
    if d == -1:
        return len(g.vertices) == 0
    if not g.vertices:
        return False

    def compute():
        if graph_euler_characteristic(g) != 1 + (-1) ** d:
            return False
        return all(_xd(unit_sphere(g, v), d - 1, budget, cache) for v in g.vertices)

    return _memo("xd", g, d, compute, cache)


def _xd_failure(g: Graph, d: int, budget, cache) -> tuple[tuple, str]:
    chain: list[int] = []
    while True:
        if d == -1:
            return tuple(chain), "expected the empty graph in dimension -1"
        if d < -1:
            return tuple(chain), "dimension below -1"
        if not g.vertices:
            return tuple(chain), f"empty graph cannot lie in X_{d}"
        chi = graph_euler_characteristic(g)
        if chi != 1 + (-1) ** d:
            return tuple(chain), f"Euler characteristic {chi} != {1 + (-1) ** d}"
        for v in g.vertices:
            s = unit_sphere(g, v)
            if not _xd(s, d - 1, budget, cache):
                chain.append(v)
                g, d = s, d - 1
                break
        else:  # pragma: no cover - only reached if the memo is inconsistent
            return tuple(chain), "inconsistent"


def in_class_xd(g: Graph, d: int, *, budget: int = DEFAULT_RECURSION_BUDGET,
                cache: IsoCache | None = None) -> ClassWitness:
    """Membership in X_d: chi = 1 + (-1)^d and every unit sphere in X_(d-1)."""
    cache = _CACHE if cache is None else cache
    b = _Budget(budget)
    if _xd(g, d, b, cache):
        return ClassWitness(True)
    chain, reason = _xd_failure(g, d, b, cache)
    return ClassWitness(False, chain, reason)


def _check_cap(g: Graph, cap: int) -> None:
    if len(g.vertices) > cap:
        raise CapExceededError(
            f"graph has {len(g.vertices)} vertices, contractibility cap is {cap}",
            required=len(g.vertices), cap=cap,
        )


def _contractible(g: Graph, budget: _Budget, cache: IsoCache) -> bool:
    budget.tick()
    n = len(g.vertices)
    if n == 0:
        return False
    if n == 1:
        return True

    def compute():
        # contractible graphs have chi = 1, which prunes most dead branches
        if graph_euler_characteristic(g) != 1:
            return False
        order = sorted(g.vertices, key=lambda v: len(g.neighbors(v)))
        for v in order:
            if _contractible(unit_sphere(g, v), budget, cache) and _contractible(
                g.remove_vertex(v), budget, cache
            ):
                return True
        return False

    return _memo("contractible", g, None, compute, cache)


def is_contractible(g: Graph, *, cap: int = DEFAULT_CONTRACTIBLE_VERTEX_CAP,
                    budget: int = DEFAULT_RECURSION_BUDGET, cache: IsoCache | None = None) -> bool:
    _check_cap(g, cap)
    return _contractible(g, _Budget(budget), _CACHE if cache is None else cache)


def _sphere(g: Graph, d: int, budget: _Budget, cache: IsoCache) -> bool:
    budget.tick()
    if d < -1:
        return False
    if d == -1:
        return len(g.vertices) == 0
    if not g.vertices:
        return False

    def compute():
        if graph_euler_characteristic(g) != 1 + (-1) ** d:
            return False
        if not all(_sphere(unit_sphere(g, v), d - 1, budget, cache) for v in g.vertices):
            return False
        return any(_contractible(g.remove_vertex(v), budget, cache) for v in g.vertices)

    return _memo("sphere", g, d, compute, cache)


def is_sphere(g: Graph, d: int, *, cap: int = DEFAULT_CONTRACTIBLE_VERTEX_CAP,
              budget: int = DEFAULT_RECURSION_BUDGET, cache: IsoCache | None = None) -> bool:
    """Every unit sphere is a (d-1)-sphere and some vertex deletion is contractible."""
    _check_cap(g, cap)
    return _sphere(g, d, _Budget(budget), _CACHE if cache is None else cache)


def is_manifold(g: Graph, d: int, *, cap: int = DEFAULT_CONTRACTIBLE_VERTEX_CAP,
                budget: int = DEFAULT_RECURSION_BUDGET, cache: IsoCache | None = None) -> bool:
    """Every unit sphere is a (d-1)-sphere."""
    if d == -1:
        return not g.vertices
    if d < -1 or not g.vertices:
        return False
    cache = _CACHE if cache is None else cache
    b = _Budget(budget)
    for v in g.vertices:
        s = unit_sphere(g, v)
        _check_cap(s, cap)
        if not _sphere(s, d - 1, b, cache):
            return False
    return True


def _variety(g: Graph, d: int, budget: _Budget, cache: IsoCache) -> bool:
    budget.tick()
    if d < -1:
        return False
    if d == -1:
        return len(g.vertices) == 0
    if not g.vertices:
        return False
    return _memo(
        "variety", g, d,
        lambda: all(_variety(unit_sphere(g, v), d - 1, budget, cache) for v in g.vertices),
        cache,
    )


def is_variety(g: Graph, d: int, *, budget: int = DEFAULT_RECURSION_BUDGET,
               cache: IsoCache | None = None) -> bool:
    """Every unit sphere is a (d-1)-variety; the empty graph is the (-1)-variety."""
    return _variety(g, d, _Budget(budget), _CACHE if cache is None else cache)


def clear_cache() -> None:
    global _CACHE
    _CACHE = IsoCache()
