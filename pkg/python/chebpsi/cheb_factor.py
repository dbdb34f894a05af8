"""
Factor the rescaled Chebyshev polynomials into ψ's.

    t_n   = 2T_n(x/2) = ∏ ψ_{4d}  over d | n with n/d odd
    p⁻_n  = V_n(x/2)  = ∏ ψ_{2d}  over d | 2n+1, d > 1
    p⁺_n  = W_n(x/2)  = ∏ ψ_d     over d | 2n+1, d > 1

Each list is checked against the target polynomial by multiplying the ψ's
back out, unless the caller opts out.  Irreducibility of T/V/W is just "the
list has one entry".
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

from chebpsi import sequences
from chebpsi.exceptions import IdentityViolationError
from chebpsi.minpoly import product_of
from chebpsi.numtheory import divisors, require_int
from chebpsi.poly import IntPoly

logger = logging.getLogger(__name__)


class ChebKind(str, Enum):
    """Chebyshev kinds: first (T), third (V), fourth (W)."""

    T = "T"
    V = "V"
    W = "W"


@dataclass(frozen=True)
class PsiFactorList:
    kind: ChebKind
    index: int
    factors: tuple[int, ...]

    def target(self) -> IntPoly:
        """The polynomial being factored: t_n, p⁻_n or p⁺_n."""
        if self.kind is ChebKind.T:
            return sequences.t(self.index)
        if self.kind is ChebKind.V:
            return sequences.p_minus(self.index)
        return sequences.p_plus(self.index)

    def product(self) -> IntPoly:
        return product_of(self.factors)

    def verify(self) -> None:
        """Raise :class:`IdentityViolationError` unless the product matches."""
        if self.product() != self.target():
            raise IdentityViolationError(
                f"{self.kind.value}_{self.index}: ψ product over {list(self.factors)} "
                "does not reproduce the target"
            )

    @property
    def is_irreducible(self) -> bool:
        return len(self.factors) == 1


def _build(kind: ChebKind, n: int, factors: list[int], check: bool) -> PsiFactorList:
    result = PsiFactorList(kind, n, tuple(sorted(factors)))
    if check:
        result.verify()
    logger.debug("%s_%d = psi over %s", kind.value, n, list(result.factors))
    return result


def factor_v(n: int, check: bool = True) -> PsiFactorList:
    """p⁻_n = ∏ ψ_{2d}, d | 2n+1, d > 1."""
    n = require_int(n, minimum=1)
    return _build(ChebKind.V, n, [2 * d for d in divisors(2 * n + 1)[1:]], check)


def factor_w(n: int, check: bool = True) -> PsiFactorList:
    """p⁺_n = ∏ ψ_d, d | 2n+1, d > 1."""
    n = require_int(n, minimum=1)
    return _build(ChebKind.W, n, divisors(2 * n + 1)[1:], check)


def factor_t(n: int, check: bool = True) -> PsiFactorList:
    """t_n = ∏ ψ_{4d}, d | n, n/d odd."""
    n = require_int(n, minimum=1)
    return _build(ChebKind.T, n, [4 * d for d in divisors(n) if (n // d) % 2], check)


_FACTORERS = {ChebKind.T: factor_t, ChebKind.V: factor_v, ChebKind.W: factor_w}


def factor(kind: ChebKind | str, n: int, check: bool = True) -> PsiFactorList:
    return _FACTORERS[ChebKind(kind)](n, check=check)


def is_irreducible_t(n: int) -> bool:
    """True when t_n is a single ψ (n a power of two)."""
    return factor_t(n, check=False).is_irreducible


def is_irreducible_vw(n: int) -> bool:
    """True when p±_n is a single ψ (2n+1 prime)."""
    return factor_w(n, check=False).is_irreducible
