# Copyright (c) 2026 The tropsing Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
import pytest

from tropsing import verify
from tropsing.errors import VerificationMismatch
from tropsing.hpn import adjacency_probe
from tropsing.verify import (
    CHECKS,
    INCIDENCE_CASES,
    CheckResult,
    incidence_configurations,
    run_checks,
)


class TestCheckResult:
    def test_expect(self):
        result = CheckResult("demo")
        assert result.expect(True, "holds")
        assert result.passed
        assert not result.expect(False, "broken")
        assert not result.passed
        result.note("info")
        assert result.to_json() == {
            "name": "demo",
            "passed": False,
            "failures": ["broken"],
            "details": ["holds", "info"],
        }


class TestRunChecks:
    def test_cone_counts(self):
        lines = []
        (result,) = run_checks(["cone-counts"], printer=lines.append)
        assert result.passed
        assert lines[0] == "PASS cone-counts"

    def test_worked_examples(self):
        (result,) = run_checks(["worked-examples"], printer=None)
        assert result.passed, result.failures

    def test_unknown_check(self):
        with pytest.raises(KeyError):
            run_checks(["no-such-check"], printer=None)

    def test_failure(self, monkeypatch):
        def failing(result, skip_slow=False, parallelization="none", max_workers=None):
            result.expect(False, "always fails")

        monkeypatch.setitem(CHECKS, "failing", failing)
        lines = []
        with pytest.raises(VerificationMismatch):
            run_checks(["failing"], printer=lines.append)
        assert lines == ["FAIL failing", "  mismatch: always fails"]
        (result,) = run_checks(["failing"], printer=None, raise_on_failure=False)
        assert not result.passed

    def test_executor_options_forwarded(self, monkeypatch):
        seen = []

        def recording(result, skip_slow=False, parallelization="none", max_workers=None):
            seen.append((skip_slow, parallelization, max_workers))

        monkeypatch.setitem(CHECKS, "recording", recording)
        run_checks(
            ["recording"], skip_slow=True, parallelization="process", max_workers=3, printer=None
        )
        assert seen == [(True, "process", 3)]

    def test_registry(self):
        assert set(CHECKS) == {
            "worked-examples",
            "cone-counts",
            "cross-validation",
            "newton-faces",
            "newton-compare",
            "char2-resultant",
            "incidence",
            "universal",
            "padic-interpolation",
        }
        assert len(verify.REFERENCE_ONLY_CHAR_THREE[1]) == 7


class TestIncidence:
    @pytest.mark.parametrize("case", sorted(INCIDENCE_CASES))
    def test_first_configurations(self, case):
        p, expected = INCIDENCE_CASES[case]
        configurations = list(incidence_configurations(case, max_degree=10, limit=1))
        assert configurations
        for f in configurations:
            assert adjacency_probe(f, p).count == expected

    def test_two_root_cases_cover_mixed_types(self):
        assert {case for case in INCIDENCE_CASES if case.startswith("two roots")} == {
            "two roots I-I",
            "two roots I-II",
            "two roots II-II",
            "two roots II-III",
        }
