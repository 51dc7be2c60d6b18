from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import brute_cliques, brute_f_vector, er_corpus, random_complex
from dscomplex.complex import (
    Graph, SimplicialComplex, barycentric, chain_count, clique_f_vector, comparability_graph,
    disjoint_union, edge_refine, euler_characteristic, from_facets, graph_join, join,
    unit_sphere, whitney,
)
from dscomplex.errors import CapExceededError, InvalidInputError
from dscomplex.generators import complete, cross_polytope, cycle, erdos_renyi, icosahedron
from dscomplex.poly import FPolynomial, f_function


def brute_chains(c: SimplicialComplex) -> list[tuple]:
    """All non-empty chains of the face poset by direct subset search."""
    simplices = c.simplices
    out = []
    for k in range(1, c.dimension + 2):
        for combo in combinations(simplices, k):
            sets = sorted((set(s) for s in combo), key=len)
            if all(a < b for a, b in zip(sets, sets[1:])):
                out.append(combo)
    return out


graphs_st = st.builds(
    lambda n, bits: Graph(range(n), [e for e, b in zip(combinations(range(n), 2), bits) if b]),
    st.integers(0, 8),
    st.lists(st.booleans(), min_size=28, max_size=28),
)


class TestSimplicialComplex:
    def test_triangle_boundary(self):
        assert from_facets([[1, 2], [2, 3], [3, 1]]).f_vector == (3, 3)

    def test_empty(self):
        c = from_facets([])
        assert c.dimension == -1
        assert c.f_vector == ()
        assert euler_characteristic(c) == 0

    def test_empty_facet_rejected(self):
        with pytest.raises(InvalidInputError):
            from_facets([[1], []])

    def test_closure_validated(self):
        with pytest.raises(InvalidInputError):
            SimplicialComplex([(1, 2)])

    def test_canonical_order(self):
        c = from_facets([[3, 1, 2]])
        assert c.simplices == ((1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3))

    def test_facets(self):
        c = from_facets([[1, 2, 3], [3, 4]])
        assert c.facets() == [(3, 4), (1, 2, 3)]

    def test_euler_characteristic(self):
        assert euler_characteristic(whitney(cross_polytope(2))) == 2
        assert euler_characteristic(whitney(cross_polytope(3))) == 0


class TestWhitney:
    def test_complete(self):
        assert whitney(complete(4)).f_vector == (4, 6, 4, 1)

    def test_cycle(self):
        assert whitney(cycle(4)).f_vector == (4, 4)

    def test_icosahedron(self):
        assert whitney(icosahedron()).f_vector == (12, 30, 20)

    def test_empty_graph(self):
        assert whitney(Graph()).dimension == -1

    @settings(max_examples=60, deadline=None)
    @given(graphs_st)
    def test_matches_brute_force(self, g):
        assert sorted(whitney(g).simplices) == sorted(brute_cliques(g))
        assert clique_f_vector(g) == brute_f_vector(g)


class TestUnitSphere:
    def test_icosahedron_is_c5(self):
        g = icosahedron()
        for v in g.vertices:
            s = unit_sphere(g, v)
            assert clique_f_vector(s) == (5, 5)
            assert all(s.degree(w) == 2 for w in s.vertices)

    def test_c4(self):
        s = unit_sphere(cycle(4), 0)
        assert s.vertices == (1, 3) and not s.edges

    def test_isolated(self):
        assert unit_sphere(Graph([0]), 0).vertices == ()

    def test_unknown_vertex(self):
        with pytest.raises(InvalidInputError):
            unit_sphere(cycle(4), 9)


class TestJoinUnion:
    def test_s0_join(self):
        s0 = from_facets([[0], [1]])
        assert join(s0, s0).f_vector == (4, 4)

    def test_join_identity(self):
        c = whitney(cycle(5))
        assert join(from_facets([]), c).f_vector == c.f_vector

    def test_iterated_join_is_cross_polytope(self):
        s0 = from_facets([[0], [1]])
        c = s0
        for _ in range(3):
            c = join(c, s0)
        assert f_function(c) == FPolynomial([1, 2]) ** 4

    @settings(max_examples=30, deadline=None)
    @given(graphs_st, graphs_st)
    def test_join_multiplicative(self, a, b):
        ca, cb = whitney(a), whitney(b)
        assert f_function(join(ca, cb)) == f_function(ca) * f_function(cb)
        assert whitney(graph_join(a, b)) == join(ca, cb)

    def test_disjoint_union(self):
        c = whitney(cycle(4))
        u = disjoint_union(c, c)
        assert u.f_vector == (8, 8) and euler_characteristic(u) == 0
        assert disjoint_union(c, from_facets([])) == c

    def test_two_copies_of_projective_plane_counts(self):
        f = FPolynomial.from_f_vector((30, 84, 56))
        assert f == FPolynomial([1, 2]) * FPolynomial([1, 28, 28])

    @settings(max_examples=30, deadline=None)
    @given(graphs_st, graphs_st)
    def test_chi_additive(self, a, b):
        ca, cb = whitney(a), whitney(b)
        u = disjoint_union(ca, cb)
        assert euler_characteristic(u) == euler_characteristic(ca) + euler_characteristic(cb)
        assert f_function(u) == f_function(ca) + f_function(cb) - 1


class TestBarycentric:
    def test_icosahedron(self):
        assert barycentric(whitney(icosahedron())).f_vector == (62, 180, 120)

    def test_edge(self):
        assert barycentric(from_facets([[1, 2]])).f_vector == (3, 2)

    @pytest.mark.parametrize("seed", range(8))
    def test_chains_brute_force(self, seed):
        c = random_complex(seed, max_simplices=40, vertices=6)
        b = barycentric(c)
        expected = sorted(tuple(sorted(c.index(s) for s in ch)) for ch in brute_chains(c))
        assert sorted(b.simplices) == expected
        assert chain_count(c) == len(b)

    @pytest.mark.parametrize("seed", range(10))
    def test_whitney_of_comparability_graph(self, seed):
        c = random_complex(seed, max_simplices=80)
        assert whitney(comparability_graph(c)) == barycentric(c)

    def test_cap(self):
        c = whitney(icosahedron())
        with pytest.raises(CapExceededError) as info:
            barycentric(c, cap=100)
        assert info.value.required == 362

    def test_cap_from_environment(self, monkeypatch):
        monkeypatch.setenv("DSC_CAP_SIMPLICES", "10")
        with pytest.raises(CapExceededError):
            barycentric(whitney(cycle(5)))


class TestEdgeRefine:
    def test_c4_to_c5(self):
        g = edge_refine(cycle(4), (0, 1))
        assert clique_f_vector(g) == (5, 5)
        assert all(g.degree(v) == 2 for v in g.vertices)

    def test_octahedron(self):
        assert clique_f_vector(edge_refine(cross_polytope(2), (0, 2))) == (7, 15, 10)

    def test_triangle(self):
        assert clique_f_vector(edge_refine(complete(3), (0, 1))) == (4, 5, 2)

    def test_not_an_edge(self):
        with pytest.raises(InvalidInputError):
            edge_refine(cross_polytope(2), (0, 1))

    def test_difference_formula_on_random_graphs(self):
        """f_new - f_old = (t + t^2) f_{S(a) & S(b)}, checked by brute-force counting."""
        checked = 0
        for i, g in enumerate(er_corpus(60, 9, seed0=500, p=0.6)):
            if not g.edges:
                continue
            a, b = g.sorted_edges()[i % len(g.edges)]
            before = FPolynomial.from_f_vector(brute_f_vector(g))
            after = FPolynomial.from_f_vector(brute_f_vector(edge_refine(g, (a, b))))
            common = g.induced(g.neighbors(a) & g.neighbors(b))
            inter = FPolynomial.from_f_vector(brute_f_vector(common))
            assert after - before == FPolynomial([0, 1, 1]) * inter
            checked += 1
        assert checked >= 50


class TestGraph:
    def test_loops_rejected(self):
        with pytest.raises(InvalidInputError):
            Graph([0], [(0, 0)])

    def test_negative_label_rejected(self):
        with pytest.raises(InvalidInputError):
            Graph([-1])

    def test_networkx_roundtrip(self):
        g = erdos_renyi(9, 0.5, 3)
        assert Graph.from_networkx(g.to_networkx()) == g
