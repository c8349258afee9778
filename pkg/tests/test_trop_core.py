# Copyright (c) 2026 The tropsing Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
import itertools
import json
import random
from fractions import Fraction

import pytest

from tropsing.errors import DimensionMismatchError, EmptyPolynomialError, ParseError
from tropsing.trop_core import (
    Point,
    RegimeKind,
    TropicalPolynomial,
    ValuationRegime,
    argmin_support,
    common_roots,
    evaluate,
    is_tropical_root,
    load_polynomial,
    normalize,
    polynomial_from_json,
    polynomial_to_json,
    scale,
    shift,
    term_values,
    univariate_roots,
)


def poly(*coefficients):
    return TropicalPolynomial.from_coefficients(coefficients)


def random_rational(rng, bound=8):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, 4))


def random_polynomial(rng, dim=1):
    exponents = list(itertools.product(range(4), repeat=dim))
    support = rng.sample(exponents, rng.randint(2, min(6, len(exponents))))
    return TropicalPolynomial(dim, {exp: random_rational(rng) for exp in support})


class TestValuationRegime:
    def test_parse(self):
        assert ValuationRegime.parse("char:0") == ValuationRegime.char_zero()
        assert ValuationRegime.parse("char:3") == ValuationRegime.char_p(3)
        assert ValuationRegime.parse(" padic:2 ") == ValuationRegime.padic(2)
        assert ValuationRegime.parse("padic:5").kind == RegimeKind.padic
        assert ValuationRegime.parse("char:0").p is None

    def test_str_round_trip(self):
        for spec in ("char:0", "char:7", "padic:3"):
            assert str(ValuationRegime.parse(spec)) == spec

    @pytest.mark.parametrize("spec", ["char:4", "padic:0", "char", "char:x", "mod:3"])
    def test_parse_invalid(self, spec):
        with pytest.raises(ParseError):
            ValuationRegime.parse(spec)

    def test_invalid_prime(self):
        with pytest.raises(ValueError):
            ValuationRegime.char_p(9)
        with pytest.raises(ValueError):
            ValuationRegime(RegimeKind.char_zero, 3)

    def test_hashable(self):
        regimes = {ValuationRegime.char_p(2), ValuationRegime.parse("char:2")}
        assert len(regimes) == 1


class TestTropicalPolynomial:
    def test_mapping(self):
        f = TropicalPolynomial(2, {(1, 0): 2, (0, 0): "1/2"})
        assert f.dim == 2
        assert len(f) == 2
        assert list(f) == [(0, 0), (1, 0)]
        assert f[(0, 0)] == Fraction(1, 2)
        assert f.support == ((0, 0), (1, 0))

    def test_univariate_int_exponents(self):
        f = TropicalPolynomial(1, {0: 1, 2: 3})
        assert f[2] == 3
        assert f == poly(1, None, 3)
        assert f.coefficient_list(3) == [1, None, 3, None]

    def test_invalid(self):
        with pytest.raises(DimensionMismatchError):
            TropicalPolynomial(2, {(1,): 0})
        with pytest.raises(ValueError):
            TropicalPolynomial(1, [((1,), 0), ((1,), 2)])
        with pytest.raises(ValueError):
            TropicalPolynomial(0)

    def test_str(self):
        assert str(poly(0, 1, 0)) == "0⊕1x⊕0x^2"
        assert str(TropicalPolynomial(2, {(1, 1): -1})) == "-1xy"
        assert str(TropicalPolynomial(1)) == "∞"

    def test_equality_and_hash(self):
        assert poly(0, 0) == TropicalPolynomial(1, {0: 0, 1: 0})
        assert poly(0, 0) != poly(0, 1)
        assert len({poly(0, 0), poly(0, 0)}) == 1

    def test_point(self):
        assert Point(0) == Point([0])
        assert Point(["1/2", 1]).dim == 2


class TestEvaluation:
    def test_evaluate(self):
        f = poly(0, 1, 0)
        assert evaluate(f, [0]) == 0
        assert evaluate(f, [-1]) == -2
        assert term_values(f, [1]) == {(0,): 0, (1,): 2, (2,): 2}

    def test_argmin(self):
        f = TropicalPolynomial(2, {(0, 0): 0, (1, 0): 0, (0, 1): 0})
        assert argmin_support(f, [0, 0]) == {(0, 0), (1, 0), (0, 1)}
        assert argmin_support(f, [1, 1]) == {(0, 0)}
        assert is_tropical_root(f, [0, 0])
        assert is_tropical_root(f, [0, 5])
        assert not is_tropical_root(f, [1, 1])

    def test_single_term_has_no_roots(self):
        f = poly(3)
        assert not is_tropical_root(f, [0])
        assert univariate_roots(f) == []

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            evaluate(poly(0, 0), [0, 0])
        with pytest.raises(DimensionMismatchError):
            is_tropical_root(poly(0), [0, 1])

    def test_empty(self):
        with pytest.raises(EmptyPolynomialError):
            evaluate(TropicalPolynomial(1), [0])
        with pytest.raises(EmptyPolynomialError):
            is_tropical_root(TropicalPolynomial(1), [0])
        with pytest.raises(EmptyPolynomialError):
            common_roots(poly(0, 0), TropicalPolynomial(1))
        assert univariate_roots(TropicalPolynomial(1)) == []


class TestRoots:
    def test_triple_root(self):
        assert univariate_roots(poly(0, 0, 0)) == [(0, frozenset({(0,), (1,), (2,)}))]

    def test_upper_middle_term(self):
        assert univariate_roots(poly(0, 1, 0)) == [(0, frozenset({(0,), (2,)}))]

    def test_sorted_increasing(self):
        roots = univariate_roots(poly(0, -1, 0))
        assert [root for root, _ in roots] == [-1, 1]
        assert roots[0][1] == {(1,), (2,)}
        assert roots[1][1] == {(0,), (1,)}

    def test_rational_roots(self):
        roots = univariate_roots(poly(0, None, 1))
        assert roots == [(Fraction(-1, 2), frozenset({(0,), (2,)}))]

    def test_roots_are_roots(self):
        f = poly(3, 0, 2, -1, 5)
        for root, argmin in univariate_roots(f):
            assert is_tropical_root(f, [root])
            assert argmin == argmin_support(f, [root])

    def test_multivariate_rejected(self):
        with pytest.raises(DimensionMismatchError):
            univariate_roots(TropicalPolynomial(2, {(0, 0): 0}))

    def test_common_roots(self):
        assert common_roots(poly(0, -1, 0), poly(0, 1)) == [-1]
        assert common_roots(poly(0, 0, 0), poly(0, 1)) == []

    def test_matches_tie_point_scan(self):
        rng = random.Random(7)
        for _ in range(50):
            f = random_polynomial(rng)
            ties = {
                (a - c) / (j[0] - i[0])
                for (i, a), (j, c) in itertools.combinations(f.items(), 2)
            }
            ties = sorted(ties)
            expected = [b for b in ties if len(argmin_support(f, [b])) >= 2]
            assert [root for root, _ in univariate_roots(f)] == expected
            between = [ties[0] - 1, ties[-1] + 1]
            between += [(x + y) / 2 for x, y in zip(ties, ties[1:])]
            for b in between:
                assert len(argmin_support(f, [b])) == 1


class TestTransforms:
    def test_normalize(self):
        assert normalize(poly(2, 3, 5)) == poly(0, 1, 3)
        with pytest.raises(EmptyPolynomialError):
            normalize(TropicalPolynomial(1))

    def test_shift(self):
        f = poly(0, -1, 0)
        g = shift(f, [-1])
        assert g == poly(0, -2, -2)
        assert argmin_support(g, [0]) == argmin_support(f, [-1])

    def test_scale(self):
        assert scale(poly(0, 2), "1/4") == poly(0, Fraction(1, 2))

    @pytest.mark.parametrize("dim", [1, 2])
    def test_argmin_invariance(self, dim):
        rng = random.Random(dim)
        for _ in range(50):
            f = random_polynomial(rng, dim)
            b = [random_rational(rng) for _ in range(dim)]
            c = [random_rational(rng) for _ in range(dim)]
            expected = argmin_support(f, b)
            assert argmin_support(normalize(f), b) == expected
            assert evaluate(normalize(f), b) == evaluate(f, b) - min(f.values())
            constant = random_rational(rng)
            raised = TropicalPolynomial(dim, {exp: a + constant for exp, a in f.items()})
            assert argmin_support(raised, b) == expected
            moved = [x - y for x, y in zip(b, c)]
            assert argmin_support(shift(f, c), moved) == expected


class TestJSON:
    def test_round_trip(self):
        f = TropicalPolynomial(2, {(0, 0): Fraction(1, 3), (2, 1): -4})
        doc = polynomial_to_json(f)
        assert doc == {
            "dim": 2,
            "terms": [
                {"exp": [0, 0], "coeff": "1/3"},
                {"exp": [2, 1], "coeff": "-4"},
            ],
        }
        assert polynomial_from_json(doc) == f
        assert polynomial_from_json(json.dumps(doc)) == f

    def test_unicode_minus(self):
        doc = {"dim": 1, "terms": [{"exp": [0], "coeff": "−1/2"}, {"exp": [1], "coeff": 0}]}
        assert polynomial_from_json(doc) == poly(Fraction(-1, 2), 0)

    @pytest.mark.parametrize(
        "doc",
        [
            {"dim": 1},
            {"dim": 0, "terms": []},
            {"dim": 1, "terms": [{"exp": [0], "coeff": 1.5}]},
            {"dim": 1, "terms": [{"exp": [0], "coeff": "a"}]},
            {"dim": 1, "terms": [{"exp": [0], "coeff": "1/0"}]},
            {"dim": 1, "terms": [{"exp": [0], "coeff": 0}, {"exp": [0], "coeff": 1}]},
            {"dim": 2, "terms": [{"exp": [0], "coeff": 0}]},
        ],
    )
    def test_invalid(self, doc):
        with pytest.raises(ParseError):
            polynomial_from_json(doc)

    def test_load(self, tmp_path):
        fn = tmp_path / "f.json"
        fn.write_text(json.dumps(polynomial_to_json(poly(0, 1, 0))))
        assert load_polynomial(str(fn)) == poly(0, 1, 0)
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        with pytest.raises(ParseError):
            load_polynomial(str(bad))
