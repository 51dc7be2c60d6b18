from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import er_corpus, random_complex
from dscomplex.complex import from_facets, whitney
from dscomplex.errors import CapExceededError, InvalidInputError
from dscomplex.generators import (
    complete, cross_polytope, cycle, icosahedron, moebius_complex, path, star,
)
from dscomplex.wu import (
    BiPolynomial, bivariate_curvature, bivariate_f, f_matrix, literal_bivariate_gauss_bonnet_check,
    wu_characteristic, wu_curvature, wu_ds_check, wu_from_generating_function,
    wu_gauss_bonnet_check,
)

EDGE = from_facets([[1, 2]])


def brute_f_matrix(c):
    n = c.dimension + 1
    m = [[0] * n for _ in range(n)]
    for x in c.simplices:
        for y in c.simplices:
            if set(x) & set(y):
                m[len(x) - 1][len(y) - 1] += 1
    return m


def brute_wu(c):
    return sum((-1) ** (len(x) + len(y)) for x in c.simplices for y in c.simplices
               if set(x) & set(y))


class TestFMatrix:
    def test_point(self):
        assert f_matrix(from_facets([[0]])).entries == ((1,),)

    def test_edge(self):
        assert f_matrix(EDGE).entries == ((2, 2), (2, 1))

    def test_c4(self):
        assert f_matrix(whitney(cycle(4))).entries == ((4, 8), (8, 12))

    @pytest.mark.parametrize("seed", range(10))
    def test_brute_force(self, seed):
        c = random_complex(seed, max_simplices=80)
        fm = f_matrix(c)
        assert [list(r) for r in fm.entries] == brute_f_matrix(c)
        n = fm.size
        assert all(fm[k, l] == fm[l, k] for k in range(n) for l in range(n))
        assert all(fm[k, k] >= c.f_vector[k] for k in range(n))

    def test_cap(self):
        with pytest.raises(CapExceededError):
            f_matrix(whitney(icosahedron()), cap=100)

    def test_csv(self):
        assert f_matrix(EDGE).to_csv() == "k,l=0,l=1\n0,2,2\n1,2,1\n"


class TestWuCharacteristic:
    def test_point(self):
        assert wu_characteristic(from_facets([[0]])) == 1

    def test_edge(self):
        assert wu_characteristic(EDGE) == -1
        assert wu_from_generating_function(bivariate_f(EDGE)) == -1

    def test_octahedron(self):
        c = whitney(cross_polytope(2))
        assert wu_characteristic(c) == brute_wu(c) == 2

    @pytest.mark.parametrize("seed", range(10))
    def test_generating_function(self, seed):
        c = random_complex(seed, max_simplices=80)
        assert wu_characteristic(c) == brute_wu(c)
        assert wu_from_generating_function(bivariate_f(c)) == wu_characteristic(c)


class TestBiPolynomial:
    def test_symmetric_generating_function(self):
        f = bivariate_f(moebius_complex())
        assert f.swap() == f

    def test_reflection_pointwise(self):
        f = bivariate_f(EDGE)
        r = f.substitute_reflection(0)
        for t in (Fraction(1, 3), Fraction(-2)):
            for s in (Fraction(0), Fraction(5, 7)):
                assert r(t, s) == f(-1 - t, s)

    def test_json(self):
        f = bivariate_f(EDGE)
        assert BiPolynomial.from_json(f.to_json()) == f

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            BiPolynomial({(0, 0): 0.5})

    @settings(max_examples=40)
    @given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-9, 9)),
           st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-9, 9)))
    def test_ring(self, a, b):
        p, q = BiPolynomial(a), BiPolynomial(b)
        t, s = Fraction(2, 3), Fraction(-1, 5)
        assert (p * q)(t, s) == p(t, s) * q(t, s)
        assert (p + q)(t, s) == p(t, s) + q(t, s)


class TestBivariateGaussBonnet:
    def test_isolated_vertex(self):
        assert bivariate_curvature(complete(1), 0) == BiPolynomial({(1, 0): 1})

    def test_c4_literal_curvature(self):
        # the unit sphere is two points with f(t, s) = 1 + 2ts
        assert bivariate_curvature(cycle(4), 0) == BiPolynomial({(1, 0): 1, (2, 1): 1})

    def test_icosahedron_literal_curvature(self):
        c5 = bivariate_f(whitney(cycle(5)))
        g = icosahedron()
        assert bivariate_curvature(g, g.vertices[0]) == c5.integrate_t()

    def test_unknown_vertex(self):
        with pytest.raises(InvalidInputError):
            bivariate_curvature(cycle(4), 99)

    def test_point(self):
        assert wu_curvature(complete(1), 0) == BiPolynomial({(1, 1): 1})
        assert wu_gauss_bonnet_check(complete(1))

    def test_small_graphs(self):
        for g in (complete(2), path(3), path(4), cycle(4), star(5), icosahedron(),
                  cross_polytope(3)):
            assert wu_gauss_bonnet_check(g)

    def test_random(self):
        for g in er_corpus(20, 9, seed0=300):
            assert wu_gauss_bonnet_check(g)

    def test_literal_form_fails(self):
        # integrating only the first variable misses pairs with a common vertex
        assert not literal_bivariate_gauss_bonnet_check(complete(1))
        assert not literal_bivariate_gauss_bonnet_check(cycle(4))

    def test_wu_curvature_sum(self):
        g = icosahedron()
        total = sum((wu_curvature(g, v)(-1, -1) for v in g.vertices), Fraction(0))
        assert total == wu_characteristic(whitney(g))


class TestWuSymmetry:
    def test_moebius(self):
        assert not wu_ds_check(moebius_complex(), 2)

    def test_octahedron(self):
        # at s = 0 the generating function is 1, and 1 + 1 != 0
        assert not wu_ds_check(whitney(cross_polytope(2)), 2)

    def test_c4(self):
        assert not wu_ds_check(whitney(cycle(4)), 1)
