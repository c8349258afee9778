# Copyright (c) 2026 The tropsing Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
import os

import pytest
import sympy

from tropsing.disc_newton import (
    LatticePolytope,
    SparseIntegerPolynomial,
    compare_newton,
    cube_face_counts,
    determinant,
    discriminant_polytope,
    expected_face_counts,
    generic_discriminant,
    newton_polytope,
    polytope_faces,
    resultant_generic_pair,
    support_mod_p,
    sylvester_matrix,
    vertex_normal,
)
from tropsing.errors import InexactDivisionError, SizeLimitError

CUBIC_SUPPORT = {(0, 2, 2, 0), (1, 0, 3, 0), (0, 3, 0, 1), (1, 1, 1, 1), (2, 0, 0, 2)}


def sympy_terms(expr, symbols):
    return {exp: int(coeff) for exp, coeff in sympy.Poly(expr, *symbols).as_dict().items()}


def sympy_discriminant(n):
    a = sympy.symbols(f"a0:{n + 1}")
    x = sympy.Symbol("x")
    return sympy_terms(sympy.discriminant(sum(a[i] * x**i for i in range(n + 1)), x), a)


class TestSparseIntegerPolynomial:
    def setup_method(self):
        self.x = SparseIntegerPolynomial.variable(2, 0)
        self.y = SparseIntegerPolynomial.variable(2, 1)

    def test_arithmetic(self):
        x, y = self.x, self.y
        assert (x + y) * (x - y) == x * x - y * y
        assert 2 * x + 1 == x + x + SparseIntegerPolynomial.constant(2, 1)
        assert 1 - x == -(x - 1)
        assert x - x == 0
        assert not (x - x)

    def test_terms(self):
        f = self.x * self.x - 4 * self.y
        assert dict(f) == {(2, 0): 1, (0, 1): -4}
        assert str(f) == "a0^2 - 4*a1"
        assert f.format(["b", "c"]) == "b^2 - 4*c"
        assert f.degrees() == {2, 1}
        assert f.leading_term() == ((2, 0), 1)
        assert str(SparseIntegerPolynomial(2)) == "0"

    def test_zero_coefficients_dropped(self):
        f = SparseIntegerPolynomial(1, {(0,): 0, (1,): 3})
        assert len(f) == 1

    def test_invalid_terms(self):
        with pytest.raises(ValueError):
            SparseIntegerPolynomial(2, {(1,): 1})
        with pytest.raises(ValueError):
            SparseIntegerPolynomial(1, [((1,), 1), ((1,), 2)])
        with pytest.raises(ValueError):
            self.x + SparseIntegerPolynomial.variable(3, 0)

    def test_exact_divide(self):
        x, y = self.x, self.y
        assert (x * x - y * y).exact_divide(x - y) == x + y
        assert (6 * x * y).exact_divide(3 * y) == 2 * x

    def test_inexact_divide(self):
        with pytest.raises(InexactDivisionError):
            (self.x * self.x + self.y).exact_divide(self.x)
        with pytest.raises(InexactDivisionError):
            (3 * self.x).exact_divide(2)
        with pytest.raises(ZeroDivisionError):
            self.x.exact_divide(SparseIntegerPolynomial(2))

    def test_hash(self):
        assert len({self.x + self.y, self.y + self.x}) == 1


class TestDeterminants:
    def test_sylvester_matrix(self):
        assert sylvester_matrix([1, 2], [3, 4, 5], 0) == [[1, 2, 0], [0, 1, 2], [3, 4, 5]]

    @pytest.mark.parametrize("method", ["bareiss", "cofactor"])
    def test_determinant(self, method):
        x = SparseIntegerPolynomial.variable(1, 0)
        one = SparseIntegerPolynomial.constant(1, 1)
        matrix = [[x, one, 0 * x], [one, x, one], [0 * x, one, x]]
        assert determinant(matrix, 1, method) == x * x * x - 2 * x

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            determinant([[SparseIntegerPolynomial(1)]], 1, "laplace")


class TestDiscriminant:
    def test_quadratic(self):
        disc = generic_discriminant(2)
        assert dict(disc) == {(0, 2, 0): 1, (1, 0, 1): -4}

    def test_cubic_support(self):
        disc = generic_discriminant(3)
        assert set(disc) == CUBIC_SUPPORT
        assert disc[(1, 1, 1, 1)] == 18
        assert disc[(2, 0, 0, 2)] == -27

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_against_sympy(self, n):
        assert dict(generic_discriminant(n)) == sympy_discriminant(n)

    def test_methods_agree(self):
        assert generic_discriminant(4, method="cofactor") == generic_discriminant(4)

    def test_homogeneity(self):
        n = 5
        disc = generic_discriminant(n)
        assert disc.degrees() == {2 * n - 2}
        assert disc.degrees(list(range(n + 1))) == {n * (n - 1)}

    def test_limits(self):
        with pytest.raises(SizeLimitError):
            generic_discriminant(4, max_degree=3)
        with pytest.raises(ValueError):
            generic_discriminant(1)

    def test_cache(self, tmp_path):
        cache_dir = str(tmp_path / "cache")
        disc = generic_discriminant(3, cache_dir=cache_dir)
        assert os.path.exists(os.path.join(cache_dir, "disc-3.json"))
        assert generic_discriminant(3, cache_dir=cache_dir) == disc


class TestResultant:
    def test_linear(self):
        res = resultant_generic_pair(1, 1)
        assert dict(res) == {(0, 1, 1, 0): 1, (1, 0, 0, 1): -1}

    @pytest.mark.parametrize("m, k", [(2, 1), (2, 2), (3, 2)])
    def test_against_sympy(self, m, k):
        b = sympy.symbols(f"b0:{m + 1}")
        c = sympy.symbols(f"c0:{k + 1}")
        x = sympy.Symbol("x")
        f = sum(b[i] * x**i for i in range(m + 1))
        g = sum(c[j] * x**j for j in range(k + 1))
        expected = sympy_terms(sympy.resultant(f, g, x), b + c)
        assert dict(resultant_generic_pair(m, k)) == expected

    def test_limit(self):
        with pytest.raises(SizeLimitError):
            resultant_generic_pair(3, 3, max_degree=2)
        with pytest.raises(ValueError):
            resultant_generic_pair(0, 2)


class TestSupport:
    def test_mod_p(self):
        disc = generic_discriminant(3)
        assert support_mod_p(disc, 0) == CUBIC_SUPPORT
        assert support_mod_p(disc, 3) == {(0, 2, 2, 0), (1, 0, 3, 0), (0, 3, 0, 1)}
        assert support_mod_p(disc, 2) == {(0, 2, 2, 0), (2, 0, 0, 2)}


class TestLatticePolytope:
    def test_projection(self):
        polytope = discriminant_polytope(CUBIC_SUPPORT, 3)
        assert polytope.dim == 2
        assert polytope.nvars == 4
        assert len(polytope) == 5
        assert len(polytope.projected[0]) == 2

    def test_invalid(self):
        with pytest.raises(ValueError):
            LatticePolytope([(0, 1), (0, 1)])
        with pytest.raises(ValueError):
            discriminant_polytope({(0, 2, 0), (1, 1, 1)}, 2)

    def test_limits(self):
        points = [(0, 0), (1, 0), (0, 1)]
        with pytest.raises(SizeLimitError):
            LatticePolytope(points, max_points=2)
        with pytest.raises(SizeLimitError):
            LatticePolytope(points, max_dim=1)


class TestFaces:
    def test_square(self):
        census = polytope_faces(LatticePolytope([(0, 0), (2, 0), (0, 2), (2, 2), (1, 1)]))
        assert census.as_tuple() == (4, 4, 1, 0)
        assert (1, 1) not in census.vertices

    def test_triangle(self):
        census = polytope_faces(newton_polytope(3, 3))
        assert census.as_tuple() == (3, 3, 0, 1) == expected_face_counts(3)

    def test_segment(self):
        census = polytope_faces(newton_polytope(3, 2))
        assert census.as_tuple() == (2, 1, 0, 0)

    @pytest.mark.parametrize("n", [3, 4])
    def test_char_zero_cubes(self, n):
        census = polytope_faces(newton_polytope(n, 0))
        assert census.as_tuple() == cube_face_counts(n)

    def test_vertices_only(self):
        census = polytope_faces(newton_polytope(3, 0), max_face_dim=0)
        assert len(census.vertices) == 4
        assert census.edges == []

    def test_expected_counts(self):
        assert expected_face_counts(5) == (15, 34, 18, 10)
        assert cube_face_counts(4) == (8, 12, 6, 0)

    def test_to_json(self):
        doc = polytope_faces(newton_polytope(3, 3)).to_json()
        assert doc["counts"] == {"vertices": 3, "edges": 3, "quadrangles": 0, "triangles": 1}
        assert doc["face_census"] == {"3": 1}


class TestVertexNormal:
    def test_vertices(self):
        polytope = newton_polytope(3, 0)
        for vertex in polytope_faces(polytope, max_face_dim=0).vertices:
            weights = vertex_normal(polytope, vertex)
            assert weights is not None
            for point in polytope.points:
                if point != vertex:
                    assert sum(w * (a - b) for w, a, b in zip(weights, point, vertex)) >= 1

    def test_interior_point(self):
        assert vertex_normal(newton_polytope(3, 0), (1, 1, 1, 1)) is None


class TestCompare:
    def test_char_three(self):
        comparison = compare_newton(3, 0, 3)
        assert comparison.only_p == [(2, 0, 0, 2)]
        assert comparison.only_q == []
        doc = comparison.to_json()
        assert doc["vertex_counts"] == [4, 3]
        assert doc["only_0"] == [[2, 0, 0, 2]]

    @pytest.mark.parametrize("p", [5, 7])
    def test_large_primes_agree(self, p):
        comparison = compare_newton(3, 0, p)
        assert comparison.only_p == comparison.only_q == []
