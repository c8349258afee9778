# Copyright (c) 2026 The tropsing Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
import random

import pytest
from sympy import nextprime

from tropsing.errors import SizeLimitError, WitnessMismatchError
from tropsing.hpn import in_H
from tropsing.trop_core import TropicalPolynomial
from tropsing.universal import (
    UnivCellWitness,
    active_equality_rank,
    codim3_cell_test,
    construct_deep_cell,
    enumerate_witnesses,
    is_universally_singular,
    rad,
    scan_universal,
    universal_primes,
)


def poly(*coefficients):
    return TropicalPolynomial.from_coefficients(coefficients)


@pytest.fixture
def alternating():
    return poly(0, 1, 0, 1, 0)


class TestArithmetic:
    @pytest.mark.parametrize("m, expected", [(1, 1), (8, 2), (12, 6), (30, 30), (9, 3)])
    def test_rad(self, m, expected):
        assert rad(m) == expected

    def test_rad_positive_only(self):
        with pytest.raises(ValueError):
            rad(0)

    def test_universal_primes(self):
        assert universal_primes(4) == [2, 3, 5]
        assert universal_primes(6) == [2, 3, 5, 7]


class TestUniversalVerdict:
    def test_universal(self, alternating):
        verdict = is_universally_singular(alternating, 4)
        assert verdict
        assert verdict.failing_prime is None
        assert verdict.primes == [2, 3, 5]
        assert active_equality_rank(alternating, 4) == 3

    def test_fails_in_char_two(self):
        verdict = is_universally_singular(poly(0, 0, 0), 2)
        assert not verdict
        assert verdict.failing_prime == 2
        assert verdict.breakdown == {0: True, 2: False, 3: True}

    def test_fails_in_char_zero(self):
        verdict = is_universally_singular(poly(0, 1, 1, 0), 3)
        assert verdict.failing_prime == 0

    def test_primes_past_the_degree_match_char_zero(self):
        rng = random.Random(13)
        outcomes = set()
        for n in range(2, 9):
            for _ in range(25):
                f = poly(*[rng.choice((0, 1, 2)) for _ in range(n + 1)])
                expected = in_H(f, 0)
                outcomes.add(expected)
                p = n + 1
                for _ in range(5):
                    p = int(nextprime(p))
                    assert in_H(f, p) == expected, (f, p)
        assert outcomes == {True, False}

    def test_to_json(self, alternating):
        doc = is_universally_singular(alternating, 4).to_json()
        assert doc == {
            "degree": 4,
            "universally_singular": True,
            "breakdown": {"0": True, "2": True, "3": True, "5": True},
            "failing_prime": None,
        }


class TestWitness:
    def test_from_polynomial(self, alternating):
        witness = UnivCellWitness.from_polynomial(alternating)
        assert (witness.i, witness.j, witness.k) == (0, 2, 4)
        assert (witness.r, witness.s) == (1, 3)
        assert witness.d == 2
        assert witness.unit_flags == [(1, True), (1, True)]
        assert witness.units_ok
        assert witness.representative(4) == poly(0, 1, 0, 1, 0)

    def test_radicals_differ(self):
        with pytest.raises(WitnessMismatchError):
            UnivCellWitness((0, 1, 2), (3, 4))

    def test_not_distinct(self):
        with pytest.raises(WitnessMismatchError):
            UnivCellWitness((0, 2, 4), (1, 1))

    def test_pair_meets_triple(self):
        with pytest.raises(WitnessMismatchError):
            UnivCellWitness((0, 2, 4), (2, 3))
        with pytest.raises(ValueError):
            UnivCellWitness((0, 2, 4), (4, 5))

    def test_minimum_not_a_triple(self):
        with pytest.raises(WitnessMismatchError):
            UnivCellWitness.from_polynomial(poly(0, 1, 0))

    def test_non_unit_pair(self):
        witness = UnivCellWitness((0, 6, 12), (2, 3))
        assert witness.d == 6
        assert witness.unit_flags == [(2, False), (3, False)]
        assert not witness.units_ok

    def test_enumerate(self):
        assert list(enumerate_witnesses(4)) == [UnivCellWitness((0, 2, 4), (1, 3))]

    @pytest.mark.parametrize("n", [4, 6, 8])
    def test_enumerated_witnesses_are_codimension_three(self, n):
        for witness in enumerate_witnesses(n):
            f = witness.representative(n)
            assert codim3_cell_test(witness, f)
            assert is_universally_singular(f, n)
            assert active_equality_rank(f, n) == 3

    def test_cell_test_pattern_mismatch(self):
        witness = UnivCellWitness((0, 2, 4), (1, 3))
        with pytest.raises(WitnessMismatchError):
            codim3_cell_test(witness, poly(0, 1, 0, 2, 0))


class TestDeepCell:
    def test_k_one(self):
        cell = construct_deep_cell(1)
        assert (cell.n, cell.d) == (8, 2)
        assert cell.polynomial == poly(0, 1, 0, 1, 0, 2, 2, 2, 2)
        assert cell.rank == cell.claimed_codimension == 3
        assert is_universally_singular(cell.polynomial, cell.n)
        doc = cell.to_json()
        assert doc["universally_singular"] is True
        assert doc["degree"] == 8

    def test_k_two(self):
        cell = construct_deep_cell(2)
        assert (cell.n, cell.d) == (32, 6)
        assert cell.rank == 4
        assert is_universally_singular(cell.polynomial, cell.n)

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            construct_deep_cell(2, max_degree=16)

    def test_invalid_k(self):
        with pytest.raises(ValueError):
            construct_deep_cell(0)


class TestScan:
    def test_degree_two_has_none(self):
        assert scan_universal(2) == []

    def test_degree_four(self):
        entries = scan_universal(4)
        assert (0, 1, 0, 1, 0) in [entry.coefficients for entry in entries]
        assert all(entry.rank >= 3 for entry in entries)
        for entry in entries:
            if entry.rank == 3 and entry.minimum_ties == 3:
                assert entry.witness_ok
