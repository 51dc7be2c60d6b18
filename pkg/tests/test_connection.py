import json
from fractions import Fraction

import pytest

from conftest import fraction_inverse, random_complex
from dscomplex.complex import euler_characteristic, from_facets, whitney
from dscomplex.connection import (
    connection_matrix, energy_check, green, green_diagonal_check, hydrogen_report,
    log_derivative_report, super_trace_check,
)
from dscomplex.errors import CapExceededError
from dscomplex.generators import cross_polytope, cycle, icosahedron_complex, moebius_complex

EDGE = from_facets([[1, 2]])
POINT = from_facets([[1]])


class TestConnectionMatrix:
    def test_point(self):
        assert connection_matrix(POINT).entries.tolist() == [[1]]

    def test_edge(self):
        assert connection_matrix(EDGE).entries.tolist() == [[1, 0, 1], [0, 1, 1], [1, 1, 1]]

    def test_c4_row_sums(self):
        m = connection_matrix(whitney(cycle(4))).entries
        assert m.shape == (8, 8)
        # a vertex meets itself and two edges; an edge meets itself, two vertices, two edges
        assert [int(x) for x in m.sum(axis=1)] == [3] * 4 + [5] * 4

    def test_brute_force(self):
        c = random_complex(3, max_simplices=60)
        m = connection_matrix(c).entries
        for i, x in enumerate(c.simplices):
            for j, y in enumerate(c.simplices):
                assert m[i, j] == int(bool(set(x) & set(y)))

    def test_symmetric_unit_diagonal(self):
        m = connection_matrix(moebius_complex()).entries
        assert (m == m.T).all()
        assert all(m[i, i] == 1 for i in range(len(m)))

    def test_cap(self):
        with pytest.raises(CapExceededError):
            connection_matrix(icosahedron_complex(), cap=10)

    def test_exports(self):
        lm = connection_matrix(EDGE)
        assert lm.to_text() == "1 0 1\n0 1 1\n1 1 1\n"
        assert json.loads(json.dumps(lm.to_json()))["ordering"] == [[1], [2], [1, 2]]


class TestGreen:
    def test_edge(self):
        assert green(EDGE).entries.tolist() == [[0, -1, 1], [-1, 0, 1], [1, 1, -1]]

    def test_point(self):
        assert green(POINT).entries.tolist() == [[1]]

    def test_read_only(self):
        with pytest.raises(ValueError):
            green(EDGE).entries[0, 0] = 5

    @pytest.mark.parametrize("seed", range(50))
    def test_unimodular_random(self, seed):
        c = random_complex(seed, max_simplices=60, vertices=7)
        g = green(c)
        assert g.determinant in (1, -1)
        assert (g.entries == g.entries.T).all()

    @pytest.mark.parametrize("seed", range(6))
    def test_matches_rational_inverse(self, seed):
        c = random_complex(seed, max_simplices=40, vertices=6)
        inv = fraction_inverse(connection_matrix(c).entries.tolist())
        assert [[Fraction(int(x)) for x in row] for row in green(c).entries] == inv

    def test_empty(self):
        g = green(from_facets([]))
        assert g.total == 0 and g.trace == 0


class TestIdentities:
    @pytest.mark.parametrize("name", ["edge", "point", "C4", "octahedron", "moebius", "cross3"])
    def test_fixtures(self, name):
        c = {
            "edge": EDGE, "point": POINT, "C4": whitney(cycle(4)),
            "octahedron": whitney(cross_polytope(2)), "moebius": moebius_complex(),
            "cross3": whitney(cross_polytope(3)),
        }[name]
        assert energy_check(c)
        assert green_diagonal_check(c)
        assert super_trace_check(c)
        r = hydrogen_report(c)
        assert r.refined_derivative == r.trace_g == r.sphere_sum

    def test_octahedron_energy(self):
        assert green(whitney(cross_polytope(2))).total == 2

    def test_edge_diagonal(self):
        assert green(EDGE).entries[2, 2] == -1

    def test_edge_hydrogen(self):
        r = hydrogen_report(EDGE)
        assert (r.trace_g, r.trace_l, r.refined_derivative) == (-1, 3, -1)
        assert r.trace_l_minus_g == 4

    def test_log_derivative_edge_flagged(self):
        r = log_derivative_report(EDGE)
        assert r.log_derivative is None
        assert "f_G1(-1) = 0" in r.flags

    def test_log_derivative_c4(self):
        r = log_derivative_report(whitney(cycle(4)))
        assert (r.refined_value, r.refined_derivative) == (1, -8)
        assert r.log_derivative == -8
        assert r.trace_over_energy is None  # chi = 0

    def test_log_derivative_octahedron(self):
        c = whitney(cross_polytope(2))
        r = log_derivative_report(c)
        assert r.log_derivative == r.trace_over_one_minus_chi
        assert r.log_derivative != r.trace_over_energy
        assert json.dumps(r.to_json())

    @pytest.mark.parametrize("seed", range(10))
    def test_log_derivative_one_minus_chi(self, seed):
        c = random_complex(seed, max_simplices=80)
        r = log_derivative_report(c)
        if 1 - euler_characteristic(c) != 0:
            assert r.log_derivative == r.trace_over_one_minus_chi
