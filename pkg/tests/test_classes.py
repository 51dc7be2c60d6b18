import pytest

from conftest import er_corpus
from dscomplex.classes import (
    IsoCache, in_class_xd, is_contractible, is_manifold, is_sphere, is_variety,
)
from dscomplex.complex import Graph, edge_refine, whitney
from dscomplex.errors import CapExceededError, ResourceError
from dscomplex.generators import (
    complete, cross_polytope, cycle, hair_sphere, icosahedron, moebius, path, random_sphere,
    rng_for, star, sun, wheel,
)
from dscomplex.poly import ds_symmetric, f_function


class TestClassXd:
    def test_empty(self):
        assert in_class_xd(Graph(), -1)
        assert not in_class_xd(Graph([0]), -1)
        assert not in_class_xd(Graph(), 0)

    def test_c4(self):
        assert in_class_xd(cycle(4), 1)

    def test_octahedron(self):
        assert in_class_xd(cross_polytope(2), 2)

    def test_sun_rejected_with_chain(self):
        w = in_class_xd(sun(15, 14), 1)
        assert not w
        assert len(w.chain) == 1 and "Euler" in w.reason
        assert ds_symmetric(f_function(whitney(sun(15, 14))), 1)

    def test_witness_json(self):
        assert in_class_xd(cycle(4), 1).to_json() == {"verdict": True, "chain": [], "reason": ""}

    def test_budget(self):
        with pytest.raises(ResourceError):
            in_class_xd(cross_polytope(3), 3, budget=3, cache=IsoCache())

    @pytest.mark.parametrize("d", range(1, 4))
    def test_edge_refinement_preserves(self, d):
        g = cross_polytope(d)
        rng = rng_for(d)
        for _ in range(20 if d < 3 else 8):
            edges = g.sorted_edges()
            g = edge_refine(g, edges[int(rng.integers(len(edges)))])
            assert in_class_xd(g, d)

    def test_members_are_symmetric(self, graphs):
        corpus = list(graphs.values()) + er_corpus(40, 9, p=0.5)
        for g in corpus:
            d = whitney(g).dimension
            if in_class_xd(g, d):
                assert ds_symmetric(f_function(whitney(g)), d)


class TestContractible:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_complete(self, n):
        assert is_contractible(complete(n))

    def test_wheel(self):
        assert is_contractible(wheel(6))

    def test_trees(self):
        assert is_contractible(star(6)) and is_contractible(path(5))

    def test_cycle(self):
        assert not is_contractible(cycle(4))

    def test_empty(self):
        assert not is_contractible(Graph())

    def test_cap(self):
        with pytest.raises(CapExceededError):
            is_contractible(cycle(20))


class TestSpheres:
    def test_octahedron(self):
        assert is_sphere(cross_polytope(2), 2)

    def test_icosahedron(self):
        assert is_sphere(icosahedron(), 2)

    def test_k4(self):
        assert not is_sphere(complete(4), 2)

    def test_s0_and_empty(self):
        assert is_sphere(cross_polytope(0), 0)
        assert is_sphere(Graph(), -1)

    def test_random_spheres(self):
        for seed in range(3):
            g = random_sphere(2, 4, seed)
            assert is_sphere(g, 2) and in_class_xd(g, 2)

    def test_hierarchy(self, graphs):
        for name, g in graphs.items():
            if len(g.vertices) > 13:
                continue
            d = whitney(g).dimension
            if is_sphere(g, d):
                assert is_manifold(g, d), name
                assert in_class_xd(g, d), name
            if is_manifold(g, d):
                assert is_variety(g, d), name


class TestManifoldsAndVarieties:
    @pytest.mark.parametrize("n", [4, 5, 8])
    def test_cycles(self, n):
        assert is_manifold(cycle(n), 1)
        assert is_variety(cycle(n), 1)

    def test_triangle_is_not_a_manifold(self):
        assert not is_manifold(complete(3), 1)

    def test_icosahedron(self):
        assert is_manifold(icosahedron(), 2)

    def test_moebius(self):
        assert not is_manifold(moebius(), 2)

    def test_sun_is_variety(self):
        assert is_variety(sun(15, 14), 1)

    def test_hair_sphere(self):
        assert not is_variety(hair_sphere(), 2)


class TestCache:
    def test_isomorphic_lookup(self):
        cache = IsoCache()
        cache.put(cycle(5), "k", 7)
        relabeled = cycle(5).relabel({i: 10 + (3 * i) % 5 for i in range(5)})
        assert cache.get(relabeled, "k") == (True, 7)
        assert cache.get(path(5), "k") == (False, None)
        assert len(cache) == 1
