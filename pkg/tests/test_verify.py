"""Tests for the verification sweeps."""

from __future__ import annotations

import pytest

from sylowscope.exceptions import PreconditionError
from sylowscope.models import CheckResult
from sylowscope.verify import (
    SUITES,
    check_alternating,
    check_cyclotomic,
    check_example312,
    check_exceptions,
    check_orders,
    check_sporadic,
    check_table3,
    check_valuation,
    run_suite,
)


def _all_passed(results: list[CheckResult]) -> bool:
    return all(result.passed for result in results)


def _findings(results: list[CheckResult]) -> list[str]:
    return [finding for result in results for finding in result.findings]


class TestCheckResult:
    def test_passed(self):
        assert CheckResult("x", checked=3).passed
        assert not CheckResult("x", checked=3, failures=("boom",)).passed

    def test_findings_do_not_fail(self):
        assert CheckResult("x", checked=1, findings=("noted",)).passed


class TestIdentities:
    def test_cyclotomic(self):
        results = check_cyclotomic(q_max=20, m_max=30)
        assert _all_passed(results)
        assert results[0].checked == 19 * 30

    def test_valuation_reports_m_two(self):
        results = check_valuation()
        assert _all_passed(results)
        (finding,) = _findings(results)
        assert "m = 2" in finding


class TestOrders:
    def test_reduced_sweep(self):
        results = check_orders(max_rank=4, qs=(2, 3, 4, 5, 7, 8, 9), r_max=13)
        assert _all_passed(results)
        assert results[0].checked > 100

    @pytest.mark.slow
    def test_full_sweep(self):
        assert _all_passed(check_orders())


class TestPublishedTables:
    def test_table3(self):
        results = check_table3()
        assert _all_passed(results)
        (finding,) = _findings(results)
        assert finding.startswith("G2, r = 3, m = 2")

    def test_example312(self):
        results = check_example312()
        assert _all_passed(results)
        findings = _findings(results)
        assert any(f.startswith("POmega-(8,2): v_5 = 1") for f in findings)
        assert any(f.startswith("POmega-(12,2): v_5 = 3") for f in findings)
        assert any(f.startswith("PSU(5,31)") for f in findings)
        assert any(f.startswith("PSp(4,4)") for f in findings)
        assert sum(f.startswith("q = ") for f in findings) == 3

    def test_sporadic(self):
        results = check_sporadic()
        assert _all_passed(results)
        findings = _findings(results)
        assert "M11: marked abelian at 7, but 7 does not divide the order" in findings
        assert "Ru: marked abelian at 11, but 11 does not divide the order" in findings
        assert any(f.startswith("Suz: blank at 5") for f in findings)
        assert any(f.startswith("Fi22: blank at 13") for f in findings)


class TestFamilies:
    def test_alternating(self):
        assert _all_passed(check_alternating(n_max=60))

    @pytest.mark.slow
    def test_alternating_full(self):
        assert _all_passed(check_alternating())

    def test_exceptions(self):
        results = check_exceptions()
        assert _all_passed(results)
        assert all(result.checked > 0 for result in results)


class TestRunSuite:
    def test_named_suite(self):
        results = run_suite("table3")
        assert [r.name for r in results] == ["tilde-e-table"]

    def test_unknown(self):
        with pytest.raises(PreconditionError):
            run_suite("nope")

    def test_registry(self):
        assert set(SUITES) == {
            "cyclotomic", "valuation", "orders", "table3", "example312",
            "sporadic", "alternating", "exceptions",
        }  # fmt: skip
