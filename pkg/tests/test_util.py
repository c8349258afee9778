# Copyright (c) 2026 The tropsing Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
import argparse
import json
import os
from fractions import Fraction

import pytest

from tropsing.disc_newton import SparseIntegerPolynomial
from tropsing.errors import ConfigKeyError, ParseError
from tropsing.render import render, render_csv, template_environment
from tropsing.trop_core import ValuationRegime
from tropsing.util.cache import CACHE_VERSION, PolynomialCache
from tropsing.util.config import RunConfig, get_config_value, load_config, require_config_value
from tropsing.util.linalg import (
    affine_rank,
    bareiss_determinant,
    cofactor_determinant,
    nullspace,
    primitive,
    rank,
    row_echelon,
    solve,
)
from tropsing.util.misc import (
    _format_rational,
    _get_parallel_executor,
    _positive_int,
    _prime_or_zero,
    _rational,
    _rational_tuple,
)
from tropsing.util.simplex import hull_contains, phase_one


@pytest.fixture
def clean_environment(monkeypatch):
    for name in list(os.environ):
        if name.startswith("TROPSING_"):
            monkeypatch.delenv(name)
    return monkeypatch


class TestConfig:
    def test_defaults(self, clean_environment):
        assert require_config_value("threads") == 1
        assert require_config_value("probe_samples") == 360
        assert get_config_value("no_such_key") is None
        assert get_config_value("no_such_key", 5) == 5
        with pytest.raises(ConfigKeyError):
            require_config_value("no_such_key")

    def test_environment(self, clean_environment):
        clean_environment.setenv("TROPSING_MAX_DEGREE", "5")
        clean_environment.setenv("TROPSING_CACHE", "/tmp/tropsing")
        assert require_config_value("max_degree") == 5
        assert require_config_value("cache_dir") == "/tmp/tropsing"

    def test_alias_takes_precedence(self, clean_environment):
        clean_environment.setenv("TROPSING_THREADS", "2")
        clean_environment.setenv("TROPSING_CACHE_DIR", "/tmp/long")
        clean_environment.setenv("TROPSING_CACHE", "/tmp/short")
        assert require_config_value("threads") == 2
        assert require_config_value("cache_dir") == "/tmp/short"

    def test_invalid_integer(self, clean_environment):
        clean_environment.setenv("TROPSING_THREADS", "many")
        with pytest.raises(ConfigKeyError):
            require_config_value("threads")

    def test_load_config_overrides(self, clean_environment):
        config = load_config(threads=4, output_format=None)
        assert config["threads"] == 4
        assert config["output_format"] == "json"

    def test_run_config(self, clean_environment):
        config = RunConfig("char:3", ["f.json"], threads=2, output_format="text")
        assert config.regime == ValuationRegime.char_p(3)
        assert config.inputs == ["f.json"]
        assert config.parallelization == "process"
        assert config.max_workers == 2
        assert config.output_format == "text"
        assert config.limits["max_degree"] == 7
        assert RunConfig().parallelization == "none"
        assert RunConfig().max_workers is None

    def test_run_config_invalid(self, clean_environment):
        with pytest.raises(ParseError):
            RunConfig(output_format="yaml")
        with pytest.raises(ParseError):
            RunConfig(threads=0)
        with pytest.raises(ParseError):
            RunConfig("char:4")


class TestArgumentTypes:
    def test_positive_int(self):
        assert _positive_int("3") == 3
        for value in ("0", "-1", "x"):
            with pytest.raises(argparse.ArgumentTypeError):
                _positive_int(value)

    def test_prime_or_zero(self):
        assert _prime_or_zero("0") == 0
        assert _prime_or_zero("7") == 7
        for value in ("1", "9", "two"):
            with pytest.raises(argparse.ArgumentTypeError):
                _prime_or_zero(value)

    def test_rationals(self):
        assert _rational("−1/2") == Fraction(-1, 2)
        assert _rational_tuple("0, 1/3") == (0, Fraction(1, 3))
        with pytest.raises(argparse.ArgumentTypeError):
            _rational("1/0")

    def test_format_rational(self):
        assert _format_rational(Fraction(4, 2)) == "2"
        assert _format_rational(Fraction(-3, 6)) == "-1/2"


class TestExecutor:
    def test_order(self):
        executor = _get_parallel_executor("none")
        assert executor(lambda x: x * x, list(range(5)), disable=True, chunksize=2) == [
            0,
            1,
            4,
            9,
            16,
        ]

    def test_process(self):
        offset = 3
        executor = _get_parallel_executor("process", max_workers=2)
        assert executor(lambda x: x + offset, [1, 2], disable=True) == [4, 5]


class TestLinalg:
    def test_row_echelon(self):
        echelon, pivots = row_echelon([[2, 4], [1, 2], [0, 1]])
        assert pivots == [0, 1]
        assert echelon == [[1, 0], [0, 1]]
        assert row_echelon([]) == ([], [])

    def test_rank(self):
        assert rank([[1, 2, 3], [2, 4, 6]]) == 1
        assert rank([[1, 0], [0, 1]]) == 2

    def test_primitive(self):
        assert primitive([Fraction(1, 2), Fraction(-1, 3)]) == (3, -2)
        assert primitive([0, 0]) == (0, 0)

    def test_nullspace(self):
        assert nullspace([[1, -1, 0]]) == [(1, 1, 0), (0, 0, 1)]
        assert nullspace([], 2) == [(1, 0), (0, 1)]

    def test_solve(self):
        assert solve([[1, 1], [1, -1]], [2, 0]) == (1, 1)
        assert solve([[1, 1], [2, 2]], [1, 2]) is None

    def test_affine_rank(self):
        assert affine_rank([(0, 0)]) == 0
        assert affine_rank([(0, 0), (1, 1), (2, 2)]) == 1
        assert affine_rank([(1, 0, 0), (0, 1, 0), (0, 0, 1)]) == 2

    @pytest.mark.parametrize(
        "matrix, expected",
        [
            ([[2]], 2),
            ([[1, 2], [3, 4]], -2),
            ([[0, 1], [1, 0]], -1),
            ([[1, 2], [2, 4]], 0),
            ([[2, 0, 1], [1, 3, 2], [1, 1, 2]], 6),
        ],
    )
    def test_determinants(self, matrix, expected):
        assert bareiss_determinant(matrix, lambda a, b: a // b) == expected
        assert cofactor_determinant(matrix) == expected

    def test_empty_determinant(self):
        with pytest.raises(ValueError):
            bareiss_determinant([], lambda a, b: a // b)
        with pytest.raises(ValueError):
            cofactor_determinant([])


class TestSimplex:
    def test_phase_one(self):
        solution = phase_one([[1, 1]], [2])
        assert solution is not None
        assert sum(solution) == 2
        assert min(solution) >= 0
        assert phase_one([[1, 1]], [-1]) is None

    def test_hull_contains(self):
        square = [(0, 0), (2, 0), (0, 2), (2, 2)]
        assert hull_contains((1, 1), square)
        assert hull_contains((2, 0), square)
        assert not hull_contains((3, 1), square)
        assert not hull_contains((0, 0), [])

    def test_hull_with_directions(self):
        assert hull_contains((5, 0), [(0, 0)], [(1, 0)])
        assert hull_contains((-5, 0), [(0, 0)], [(1, 0)])
        assert not hull_contains((0, 1), [(0, 0)], [(1, 0)])


class TestCache:
    def test_round_trip(self, tmp_path):
        cache = PolynomialCache(str(tmp_path / "cache"))
        poly = SparseIntegerPolynomial(2, {(2, 0): 1, (1, 1): -40000000000000000000})
        assert cache.load("disc", (2,)) is None
        cache.store("disc", (2,), poly)
        assert cache.load("disc", (2,)) == poly

    def test_disabled(self):
        cache = PolynomialCache(None)
        cache.store("disc", (2,), SparseIntegerPolynomial(1, {(1,): 1}))
        assert cache.load("disc", (2,)) is None

    def test_corrupt_and_stale(self, tmp_path):
        cache = PolynomialCache(str(tmp_path))
        (tmp_path / "disc-4.json").write_text("{broken")
        assert cache.load("disc", (4,)) is None
        (tmp_path / "res-1-1.json").write_text(
            json.dumps({"version": CACHE_VERSION + 1, "nvars": 1, "terms": []})
        )
        assert cache.load("res", (1, 1)) is None


class TestRender:
    def test_json(self):
        assert json.loads(render({"a": [1, "2"]}, "json", "counts.txt")) == {"a": [1, "2"]}

    def test_csv(self):
        assert render_csv(["x", "y"], [[1, 2]]) == "x,y\n1,2\n"
        text = render({"a": 1, "b": [1, 2]}, "csv", "counts.txt")
        assert text.splitlines() == ["key,value", "a,1", 'b,"[1, 2]"']

    def test_text(self):
        assert render({"I": 8, "II": 12}, "text", "counts.txt") == "I: 8\nII: 12\n"

    def test_filters(self):
        environment = template_environment()
        template = environment.from_string("{{ x|rational }} {{ e|monomials }} {{ l|join_items }}")
        assert template.render(x=Fraction(1, 2), e=[[0], [2]], l=[1, 2]) == "1/2 {0, 2} 1, 2"

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            render({}, "xml", "counts.txt")
