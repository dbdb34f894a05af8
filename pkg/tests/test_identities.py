"""
Tests for the executable identities and sweeps (identities.py).

Covers:
- Boolean identity checks at their documented examples
- Float root checks and the precision ceiling
- Sweep bookkeeping: failures, caught errors, report lines
- run_suite ranges, ordering and parallel execution
"""
from __future__ import annotations

import logging
import math

import pytest

from chebpsi.exceptions import InvalidInputError, NotDivisibleError, PrecisionExceededError
from chebpsi.identities import (
    _sweep_c_splitting,
    _sweep_pq_reflection,
    FLOAT_ROOT_CEILING,
    ROOT_TOLERANCE,
    SUITE,
    Sweep,
    check_c_splitting,
    check_divisibility,
    check_factor_t_even,
    check_factor_t_odd,
    check_pq_reflection,
    check_prod_c,
    check_roots_float,
    family_roots,
    root_residual,
    run_suite,
    run_sweeps,
)
from chebpsi.poly import IntPoly, X, is_divisible
from chebpsi.sequences import Family, p_plus, t


# ============================================================================
# Boolean checks
# ============================================================================

class TestChecks:
    @pytest.mark.parametrize("m,n", [(0, 0), (1, 1), (5, 13), (20, 3)])
    def test_prod_c(self, m, n):
        assert check_prod_c(m, n)

    @pytest.mark.parametrize("s", [0, 1, 2, 100])
    def test_factor_t_odd(self, s):
        assert check_factor_t_odd(s)

    @pytest.mark.parametrize("s", [1, 2, 150])
    def test_factor_t_even(self, s):
        assert check_factor_t_even(s)

    @pytest.mark.parametrize("s", [0, 1, 2, 101])
    def test_pq_reflection(self, s):
        assert check_pq_reflection(s)

    @pytest.mark.parametrize("s", [1, 2, 3, 200])
    def test_c_splitting(self, s):
        assert check_c_splitting(s)

    def test_divisibility_p(self):
        assert check_divisibility(1, 4)
        assert is_divisible(p_plus(4), p_plus(1))

    def test_divisibility_t(self):
        assert check_divisibility(2, 6)
        assert is_divisible(t(6), t(2))

    def test_divisibility_t_even_quotient(self):
        # criterion says "no" and the division leaves a remainder: still consistent
        assert check_divisibility(2, 4)
        assert not is_divisible(t(4), t(2))

    def test_validation(self):
        with pytest.raises(InvalidInputError):
            check_prod_c(-1, 2)
        with pytest.raises(InvalidInputError):
            check_factor_t_even(0)
        with pytest.raises(InvalidInputError):
            check_divisibility(0, 3)


# ============================================================================
# Float root checks
# ============================================================================

class TestRootChecks:
    def test_p_minus_1(self):
        assert family_roots(Family.P_MINUS, 1) == pytest.approx([1.0])

    def test_q_minus_2(self):
        roots = family_roots(Family.Q_MINUS, 2)
        assert sorted(roots) == pytest.approx([-math.sqrt(2), math.sqrt(2)])
        assert check_roots_float("q-", 2)

    def test_p_plus_2(self):
        roots = family_roots(Family.P_PLUS, 2)
        expected = [2 * math.cos(2 * math.pi / 5), 2 * math.cos(4 * math.pi / 5)]
        assert roots == pytest.approx(expected)
        assert check_roots_float(Family.P_PLUS, 2)

    def test_q_plus_has_zero_root(self):
        roots = family_roots(Family.Q_PLUS, 3)
        assert roots[0] == 0.0
        assert len(roots) == 3

    @pytest.mark.parametrize("family", list(Family))
    def test_all_families_up_to_ceiling(self, family):
        for s in range(1, FLOAT_ROOT_CEILING + 1):
            assert len(family_roots(family, s)) == s
            assert check_roots_float(family, s)

    def test_above_ceiling(self):
        with pytest.raises(PrecisionExceededError):
            check_roots_float(Family.C, FLOAT_ROOT_CEILING + 1)

    def test_fixed_tolerance_at_ceiling(self):
        worst = max(root_residual(family, FLOAT_ROOT_CEILING) for family in Family)
        assert worst <= ROOT_TOLERANCE


# ============================================================================
# Sweep bookkeeping
# ============================================================================

class TestSweep:
    def test_pass(self):
        sweep = Sweep("demo", "1<=n<=2")
        sweep.run({"n": 1}, lambda: [("lhs", X, X)])
        report = sweep.done()
        assert report.passed
        assert report.cases == 1
        assert report.line() == "PASS demo range=1<=n<=2"

    def test_failure_carries_polynomials(self):
        sweep = Sweep("demo", "n=3")
        sweep.run({"n": 3}, lambda: [("lhs", X + 1, X - 1)])
        report = sweep.done()
        assert not report.passed
        failure = report.failures[0]
        assert failure.expected == "x + 1"
        assert failure.actual == "x - 1"
        assert report.line() == "FAIL demo at n=3"

    def test_side_label_added_for_multiple_pairs(self):
        sweep = Sweep("demo", "n=3")
        sweep.run({"n": 3}, lambda: [("a", 1, 1), ("b", 1, 2)])
        report = sweep.done()
        assert report.cases == 2
        assert report.failures[0].params == {"n": 3, "side": "b"}

    def test_error_becomes_failure(self):
        def sides():
            raise NotDivisibleError("remainder x + 1")

        sweep = Sweep("demo", "n=1")
        sweep.run({"n": 1}, sides)
        report = sweep.done()
        assert report.cases == 1
        assert "NotDivisibleError" in report.failures[0].actual

    def test_more_failures_summarized(self):
        sweep = Sweep("demo", "n<=3")
        for n in range(3):
            sweep.compare({"n": n}, True, False)
        assert sweep.done().line() == "FAIL demo at n=0 (+2 more)"

    def test_done_logs_summary(self, caplog):
        with caplog.at_level(logging.INFO, logger="chebpsi.identities"):
            Sweep("logged", "n=1").done()
        assert "logged: 0 cases, 0 failures" in caplog.text


# ============================================================================
# Suite
# ============================================================================

class TestRunSuite:
    def test_empty_range(self):
        assert run_suite(0) == []

    def test_small_suite_passes(self):
        reports = run_suite(10)
        assert [r.name for r in reports] == [name for name, _ in SUITE]
        for report in reports:
            assert report.passed, report.line()
            assert report.cases > 0

    def test_parallel_keeps_order(self):
        serial = run_suite(8)
        parallel = run_suite(8, jobs=4)
        assert [r.model_dump() for r in parallel] == [r.model_dump() for r in serial]

    def test_roots_clipped_with_warning(self, caplog):
        with caplog.at_level(logging.WARNING, logger="chebpsi.identities"):
            reports = run_suite(20)
        roots = next(r for r in reports if r.name == "roots_float")
        assert roots.range == f"1<=s<={FLOAT_ROOT_CEILING}"
        assert "clipped" in caplog.text

    def test_failing_sweep_reported(self):
        def broken(max_n):
            sweep = Sweep("broken", f"n<={max_n}")
            sweep.compare({"n": max_n}, IntPoly.one(), X)
            return sweep.done()

        reports = run_sweeps([("broken", broken)], 5)
        assert reports[0].line() == "FAIL broken at n=5"

    def test_rejects_non_int(self):
        with pytest.raises(InvalidInputError):
            run_suite("10")


@pytest.mark.sweep
class TestSuiteAcceptance:
    def test_suite_300(self):
        for report in run_suite(300, jobs=4):
            assert report.passed, report.line()

    def test_reflection_and_splitting_500(self):
        for report in (_sweep_pq_reflection(500), _sweep_c_splitting(500)):
            assert report.passed, report.line()
            assert report.range.endswith("500")
