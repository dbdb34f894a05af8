"""
Tests for the minimal polynomials ψ_n (minpoly.py).

Covers:
- Closed Π-level expressions and the table's golden rows
- psi / psi_fraction values and validation
- Alternative methods: quotient, wz, barnes, numeric
- Cyclotomic polynomials and the Lehmer lift
- Method registry, expression text, concurrency
"""
from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor

import pytest

from chebpsi import minpoly
from chebpsi.exceptions import (
    InvalidInputError,
    NotIrreducibleError,
    OutOfRangeError,
    PolynomialParseError,
    PrecisionExceededError,
)
from chebpsi.minpoly import (
    DEFAULT_PRECISION_BUDGET,
    FractionCase,
    FractionTarget,
    Method,
    ProductExpr,
    PsiExpr,
    barnes_expr,
    barnes_index_count,
    cyclotomic,
    expression_text,
    numeric_agrees,
    numeric_certified,
    product_of,
    psi,
    psi_barnes,
    psi_expr,
    psi_expr_fraction,
    psi_fraction,
    psi_numeric,
    psi_quotient,
    psi_target,
    psi_wz,
    required_digits,
    rounding_error_bound,
    sign_normalized,
    wz_expr_text,
    wz_numerator,
)
from chebpsi.numtheory import divisors, euler_phi
from chebpsi.poly import IntPoly, X, laurent_lift, substitute_neg
from chebpsi.sequences import Family, SeqTerm


def P(text: str) -> IntPoly:
    return IntPoly.parse(text)


PSI_60 = "x^8 - 7*x^6 + 14*x^4 - 8*x^2 + 1"

GOLDEN_ROWS = {
    3: "p+_1",
    4: "q-_1",
    9: "p+_4/p+_1",
    12: "q-_3/q-_1",
    14: "p-_3",
    15: "p+_7/(p+_2 p+_1)",
    18: "p-_4/p-_1",
    30: "p-_7/(p-_2 p-_1)",
    45: "p+_22 p+_1/(p+_7 p+_4)",
    60: "q-_15 q-_1/(q-_5 q-_3)",
    75: "p+_37 p+_2/(p+_12 p+_7)",
    105: "p+_52 p+_3 p+_2 p+_1/(p+_17 p+_10 p+_7)",
    120: "q-_30 q-_2/(q-_10 q-_6)",
}


@pytest.fixture
def cold_caches():
    minpoly.clear_caches()
    yield
    minpoly.clear_caches()


# ============================================================================
# Expressions
# ============================================================================

class TestPsiExpr:
    """Closed Π-level expressions for ψ_n."""

    @pytest.mark.parametrize("n,expected", sorted(GOLDEN_ROWS.items()))
    def test_golden_rows(self, n, expected):
        assert str(psi_expr(n)) == expected

    def test_fraction_1_30(self):
        expr = psi_expr_fraction(FractionTarget(1, 30))
        assert expr.num_strings() == ["q-_15", "q-_1"]
        assert expr.den_strings() == ["q-_5", "q-_3"]

    def test_fraction_2_105(self):
        expr = psi_expr_fraction(FractionTarget(2, 105))
        assert expr.num_strings() == ["p+_52", "p+_3", "p+_2", "p+_1"]
        assert expr.den_strings() == ["p+_17", "p+_10", "p+_7"]

    def test_fraction_1_9(self):
        expr = psi_expr_fraction(FractionTarget(1, 9))
        assert expr.num_strings() == ["p-_4"]
        assert expr.den_strings() == ["p-_1"]

    @pytest.mark.parametrize("n", list(GOLDEN_ROWS))
    def test_parse_roundtrip(self, n):
        text = str(psi_expr(n))
        assert PsiExpr.parse(text) == psi_expr(n)

    def test_sorted_descending(self):
        expr = PsiExpr(
            (SeqTerm(Family.Q_MINUS, 1), SeqTerm(Family.Q_MINUS, 15)),
            (SeqTerm(Family.Q_MINUS, 3), SeqTerm(Family.Q_MINUS, 5)),
        )
        assert str(expr) == GOLDEN_ROWS[60]

    def test_mixed_families_rejected(self):
        with pytest.raises(InvalidInputError):
            ProductExpr.parse("p+_2/p-_1")

    def test_psi_expr_rejects_c(self):
        with pytest.raises(InvalidInputError):
            PsiExpr.parse("c_3/c_1")
        assert ProductExpr.parse("c_3/c_1").family is Family.C

    @pytest.mark.parametrize(
        "bad",
        ["p+_4/", "p+_4/(p+_1", "", "p+_4 x", "p+_4/((p+_1))", "p+_4/(p+_1))", "(p+_4)/p+_1"],
    )
    def test_parse_errors(self, bad):
        with pytest.raises(PolynomialParseError):
            ProductExpr.parse(bad)

    def test_unit_numerator(self):
        expr = ProductExpr.parse("1/p+_2")
        assert expr.numerator == ()
        assert str(expr) == "1/p+_2"

    def test_term_count(self):
        assert psi_expr(105).term_count == 7
        assert psi_expr(4).term_count == 1


class TestFractionTarget:
    def test_cases(self):
        assert FractionTarget(1, 9).case is FractionCase.ODD_ODD
        assert FractionTarget(2, 9).case is FractionCase.ODD_EVEN
        assert FractionTarget(1, 30).case is FractionCase.EVEN_ODD

    def test_case_families(self):
        assert FractionCase.ODD_ODD.family is Family.P_MINUS
        assert FractionCase.ODD_EVEN.family is Family.P_PLUS
        assert FractionCase.EVEN_ODD.family is Family.Q_MINUS

    def test_psi_index(self):
        assert FractionTarget(1, 9).psi_index == 18
        assert FractionTarget(2, 9).psi_index == 9
        assert FractionTarget(3, 10).psi_index == 20

    def test_not_irreducible(self):
        with pytest.raises(NotIrreducibleError):
            FractionTarget(2, 4)

    @pytest.mark.parametrize("m,n", [(0, 5), (3, 3), (5, 3), (-1, 4)])
    def test_out_of_range(self, m, n):
        with pytest.raises(OutOfRangeError):
            FractionTarget(m, n)

    def test_reduction(self):
        assert psi_target(60) == FractionTarget(1, 30)
        assert psi_target(45) == FractionTarget(2, 45)
        assert psi_target(14) == FractionTarget(1, 7)

    def test_reduction_needs_n_above_two(self):
        with pytest.raises(OutOfRangeError):
            psi_target(2)


# ============================================================================
# Main method
# ============================================================================

class TestPsi:
    def test_small(self):
        assert psi(1) == P("x - 2")
        assert psi(2) == P("x + 2")
        assert psi(3) == P("x + 1")
        assert psi(4) == X
        assert psi(6) == P("x - 1")

    def test_psi_60(self):
        assert str(psi(60)) == PSI_60

    def test_psi_12(self):
        assert psi(12) == P("x^2 - 3")

    @pytest.mark.parametrize("bad", [0, -3, True, 2.5])
    def test_invalid(self, bad):
        with pytest.raises(InvalidInputError):
            psi(bad)

    def test_degree_law(self):
        for n in range(3, 400):
            assert psi(n).degree == euler_phi(n) // 2
            assert psi(n).is_monic

    def test_memoized(self):
        assert psi(97) is psi(97)


class TestPsiFraction:
    def test_one_third(self):
        assert psi_fraction(1, 3) == P("x - 1")

    def test_three_tenths(self):
        assert psi_fraction(3, 10) == P("x^4 - 5*x^2 + 5")
        assert psi_fraction(3, 10) == psi(20)

    def test_one_half(self):
        assert psi_fraction(1, 2) == X

    def test_independent_of_m(self):
        for m in (1, 7, 11, 13, 29):
            assert psi_fraction(m, 30) == psi(60)

    def test_not_irreducible(self):
        with pytest.raises(NotIrreducibleError):
            psi_fraction(3, 9)


# ============================================================================
# Alternative methods
# ============================================================================

class TestQuotientMethod:
    def test_values(self):
        assert str(psi_quotient(60)) == PSI_60
        assert psi_quotient(1) == P("x - 2")
        assert psi_quotient(2) == P("x + 2")

    def test_expression_text(self):
        assert expression_text(15, Method.QUOTIENT) == "p+_7/(psi_5 psi_3)"
        assert expression_text(12, Method.QUOTIENT) == "q-_3/(psi_4)"
        assert expression_text(5, Method.QUOTIENT) == "p+_2"


class TestWZMethod:
    def test_psi_1(self):
        assert psi_wz(1) == P("x - 2")

    def test_psi_4(self):
        assert wz_numerator(4) == P("x^3 - 4*x")
        assert psi_wz(4) == X

    def test_psi_60(self):
        assert psi_wz(60) == psi(60)

    def test_expr_text(self):
        assert wz_expr_text(4) == "(t_3 - t_1)/(psi_1 psi_2)"
        assert wz_expr_text(1) == "t_1 - t_0"
        assert wz_expr_text(7) == "(t_4 - t_3)/(psi_1)"

    def test_divisor_product(self):
        for n in (1, 2, 12, 36, 45, 64):
            assert product_of(divisors(n)) == wz_numerator(n)


class TestBarnesMethod:
    def test_odd(self):
        assert str(barnes_expr(9)) == "p+_4/p+_1"

    def test_twice_odd(self):
        assert str(barnes_expr(14)) == "p-_3"

    def test_multiple_of_four(self):
        assert str(barnes_expr(60)) == "c_29 c_4 c_2 c_1/(c_14 c_9 c_5)"
        assert barnes_expr(60).family is Family.C

    def test_zero_exponents_dropped(self):
        assert str(barnes_expr(24)) == "c_11 c_1/(c_5 c_3)"
        assert barnes_index_count(24) == 5
        assert barnes_expr(24).term_count == 4

    def test_index_count(self):
        # n = 2^j p1^l1 ... : j(l1+1)...(li+1) - 1
        assert barnes_index_count(60) == 7
        assert barnes_index_count(16) == 3

    def test_values(self):
        assert str(psi_barnes(60)) == PSI_60
        assert psi_barnes(9) == psi(9)

    def test_needs_three(self):
        with pytest.raises(OutOfRangeError):
            barnes_expr(2)


class TestNumericMethod:
    def test_values(self):
        assert psi_numeric(5) == P("x^2 + x - 1")
        assert psi_numeric(12) == P("x^2 - 3")
        assert psi_numeric(1) == P("x - 2")
        assert psi_numeric(2) == P("x + 2")
        assert str(psi_numeric(60)) == PSI_60

    def test_above_ceiling(self):
        with pytest.raises(PrecisionExceededError, match="n <= 200"):
            psi_numeric(201)

    def test_custom_ceiling(self):
        with pytest.raises(PrecisionExceededError):
            psi_numeric(20, ceiling=10)

    @pytest.mark.parametrize("n", [89, 97, 199])
    def test_multiprecision_fallback(self, n):
        # double rounding is not certified here, mpmath digits are
        assert rounding_error_bound(n) >= 0.5
        assert 15 < required_digits(n) <= DEFAULT_PRECISION_BUDGET
        assert numeric_certified(n)
        assert psi_numeric(n) == psi(n)

    def test_budget_too_small(self):
        assert not numeric_certified(199, precision_budget=15)
        with pytest.raises(PrecisionExceededError, match="precision budget is 15"):
            psi_numeric(199, precision_budget=15)

    def test_budget_unused_in_double(self):
        assert rounding_error_bound(60) < 0.5
        assert psi_numeric(60, precision_budget=1) == psi(60)

    def test_invalid_budget(self):
        with pytest.raises(InvalidInputError):
            psi_numeric(5, precision_budget=0)

    def test_certified_range(self):
        assert numeric_certified(60)
        assert numeric_certified(199)
        assert not numeric_certified(201)

    def test_agrees_within_tolerance(self):
        assert numeric_agrees(199, psi(199))
        assert numeric_agrees(60, psi(60))

    def test_disagrees(self):
        assert not numeric_agrees(5, P("x^2 - x - 1"))
        assert not numeric_agrees(12, psi(13))

    def test_exact_below_100(self):
        for n in range(1, 100):
            assert psi_numeric(n) == psi(n), n

    def test_is_arithmetic_error(self):
        with pytest.raises(ArithmeticError):
            psi_numeric(500)


# ============================================================================
# Cyclotomic / Lehmer
# ============================================================================

class TestCyclotomic:
    def test_small(self):
        assert cyclotomic(1) == P("x - 1")
        assert cyclotomic(3) == P("x^2 + x + 1")
        assert cyclotomic(6) == P("x^2 - x + 1")
        assert cyclotomic(12) == P("x^4 - x^2 + 1")

    def test_degree(self):
        for n in (30, 97, 105, 128):
            assert cyclotomic(n).degree == euler_phi(n)

    def test_lehmer(self):
        for n in range(3, 80):
            assert laurent_lift(psi(n)) == cyclotomic(n)


# ============================================================================
# Registry and helpers
# ============================================================================

class TestRegistry:
    def test_all_methods_agree(self):
        for n in range(3, 40):
            values = {m: minpoly.compute(n, m) for m in Method}
            assert len(set(values.values())) == 1, n

    def test_compute_accepts_strings(self):
        assert minpoly.compute(60, "barnes") == psi(60)

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            minpoly.compute(5, "guess")

    def test_supports(self):
        assert not minpoly.supports(Method.BARNES, 2)
        assert minpoly.supports(Method.BARNES, 3)
        assert minpoly.supports(Method.NUMERIC, 60)
        assert not minpoly.supports(Method.NUMERIC, 199)
        assert minpoly.supports(Method.WZ, 10**4)

    def test_expression_text(self):
        assert expression_text(60) == GOLDEN_ROWS[60]
        assert expression_text(60, "barnes") == "c_29 c_4 c_2 c_1/(c_14 c_9 c_5)"
        assert expression_text(2) is None
        assert expression_text(60, Method.NUMERIC) is None

    def test_sign_normalized(self):
        assert sign_normalized(P("-x + 1")) == P("x - 1")
        assert sign_normalized(P("x + 1")) == P("x + 1")

    def test_sign_relation(self):
        for n in range(3, 60, 2):
            assert psi(2 * n) == sign_normalized(substitute_neg(psi(n)))

    def test_product_of(self):
        assert product_of([1, 2]) == P("x^2 - 4")
        assert product_of([]) == IntPoly.one()


class TestConcurrency:
    """Concurrent psi calls match sequential results."""

    def test_parallel_psi(self, cold_caches):
        ns = list(range(1, 160))
        random.Random(3).shuffle(ns)
        with ThreadPoolExecutor(max_workers=8) as pool:
            parallel = dict(zip(ns, pool.map(psi, ns)))
        minpoly.clear_caches()
        for n in ns:
            assert parallel[n] == psi_wz(n)

    def test_parallel_wz(self, cold_caches):
        ns = list(range(1, 120))
        with ThreadPoolExecutor(max_workers=6) as pool:
            parallel = list(pool.map(psi_wz, reversed(ns)))
        assert parallel[::-1] == [psi(n) for n in ns]


# ============================================================================
# Acceptance sweeps (long)
# ============================================================================

@pytest.mark.sweep
class TestAcceptance:
    def test_triple_agreement_500(self):
        for n in range(3, 501):
            main = psi(n)
            assert psi_wz(n) == main, n
            assert psi_barnes(n) == main, n
            assert psi_quotient(n) == main, n

    def test_degree_law_2000(self):
        for n in range(3, 2001):
            assert psi(n).degree == euler_phi(n) // 2, n

    def test_numeric_200(self):
        for n in range(1, 201):
            main = psi(n)
            assert numeric_agrees(n, main), n
            assert psi_numeric(n) == main, n

    def test_lehmer_300(self):
        for n in range(3, 301):
            assert laurent_lift(psi(n)) == cyclotomic(n), n
