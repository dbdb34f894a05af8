"""
Tests for the Chebyshev T/V/W factorization (cheb_factor.py).
"""
from __future__ import annotations

import pytest

from chebpsi import cheb_factor
from chebpsi.cheb_factor import (
    ChebKind,
    PsiFactorList,
    factor,
    factor_t,
    factor_v,
    factor_w,
    is_irreducible_t,
    is_irreducible_vw,
)
from chebpsi.exceptions import IdentityViolationError, InvalidInputError
from chebpsi.numtheory import is_power_of_two, is_prime
from chebpsi.sequences import p_minus, p_plus, t


# ============================================================================
# Factor lists
# ============================================================================

class TestFactorLists:
    def test_v7(self):
        assert factor_v(7).factors == (6, 10, 30)

    def test_w7(self):
        assert factor_w(7).factors == (3, 5, 15)

    def test_t15(self):
        assert factor_t(15).factors == (4, 12, 20, 60)

    def test_t4(self):
        assert factor_t(4).factors == (16,)

    def test_t1(self):
        assert factor_t(1).factors == (4,)

    def test_v_prime(self):
        assert factor_v(3).factors == (14,)
        assert factor_w(3).factors == (7,)

    def test_ascending(self):
        for n in range(1, 60):
            for kind in ChebKind:
                fl = factor(kind, n, check=False)
                assert list(fl.factors) == sorted(fl.factors)

    def test_kind_from_string(self):
        assert factor("W", 7).kind is ChebKind.W
        with pytest.raises(ValueError):
            factor("U", 7)

    def test_invalid_n(self):
        with pytest.raises(InvalidInputError):
            factor_t(0)


class TestProducts:
    """Multiplying the ψ's back out gives the target."""

    def test_targets(self):
        assert factor_t(15).target() == t(15)
        assert factor_v(7).target() == p_minus(7)
        assert factor_w(7).target() == p_plus(7)

    @pytest.mark.parametrize("n", [1, 2, 6, 12, 15, 30, 45, 64])
    def test_product_matches(self, n):
        for kind in ChebKind:
            fl = factor(kind, n, check=False)
            assert fl.product() == fl.target()

    def test_check_passes(self):
        factor_t(36, check=True).verify()

    def test_bad_list_detected(self):
        bad = PsiFactorList(ChebKind.W, 7, (3, 15))
        with pytest.raises(IdentityViolationError):
            bad.verify()

    def test_violation_is_assertion_error(self):
        with pytest.raises(AssertionError):
            PsiFactorList(ChebKind.T, 3, (4,)).verify()

    def test_check_flag_calls_verify(self, monkeypatch):
        calls = []
        monkeypatch.setattr(PsiFactorList, "verify", lambda self: calls.append(self.index))
        cheb_factor.factor_v(5, check=True)
        cheb_factor.factor_v(5, check=False)
        assert calls == [5]


# ============================================================================
# Irreducibility
# ============================================================================

class TestIrreducibility:
    def test_t_powers_of_two(self):
        assert [n for n in range(1, 130) if is_irreducible_t(n)] == [1, 2, 4, 8, 16, 32, 64, 128]

    def test_vw_primes(self):
        assert is_irreducible_vw(3)       # 7 prime
        assert not is_irreducible_vw(7)   # 15 = 3 * 5

    def test_criteria(self):
        for n in range(1, 150):
            assert is_irreducible_t(n) == is_power_of_two(n)
            assert is_irreducible_vw(n) == is_prime(2 * n + 1)

    def test_list_property(self):
        assert factor_t(8).is_irreducible
        assert not factor_t(6).is_irreducible
