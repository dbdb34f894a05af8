"""
Chebyshev-type sequences c_n, t_n = q⁻_n, p±_n and q⁺_n.

All families obey ``f_n = x·f_(n-1) - f_(n-2)`` and differ only in their
two seed terms:

=========  =================  ==================
family     seeds              relation to c
=========  =================  ==================
c          c₋₂ = -1, c₋₁ = 0
q⁻ (= t)   t₀ = 2, t₁ = x     c_n - c_(n-2)
p⁺         1, x + 1           c_n + c_(n-1)
p⁻         1, x - 1           c_n - c_(n-1)
q⁺         0, x               c_n + c_(n-2) = x·c_(n-1)
=========  =================  ==================

Each family keeps a prefix cache of computed terms behind a lock.  The
closed forms :func:`c_expanded` and :func:`t_expanded` build the same
polynomials from binomial sums, for cross-checking.
"""

from __future__ import annotations

import logging
import re
import threading
from dataclasses import dataclass
from enum import Enum
from math import comb

from chebpsi.exceptions import IndexOutOfRangeError, InvalidInputError, PolynomialParseError
from chebpsi.poly import IntPoly, X

logger = logging.getLogger(__name__)

#: Terms kept per family; indices past this are walked from the cached tail.
DEFAULT_CACHE_LIMIT = 1024


class Family(str, Enum):
    """Sequence families, valued by their display prefix."""

    C = "c"
    P_PLUS = "p+"
    P_MINUS = "p-"
    Q_PLUS = "q+"
    Q_MINUS = "q-"

    @property
    def min_index(self) -> int:
        return -2 if self is Family.C else 0


# ============================================================================
# Term references
# ============================================================================

_TERM_RE = re.compile(r"^(c|p\+|p-|q\+|q-|t)_(-?\d+)$")


@dataclass(frozen=True)
class SeqTerm:
    """A reference such as ``p+_12`` into one of the families."""

    family: Family
    index: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", Family(self.family))
        _check_index(self.index, self.family)

    @classmethod
    def parse(cls, text: str) -> SeqTerm:
        m = _TERM_RE.match(text.strip())
        if m is None:
            raise PolynomialParseError(f"not a sequence term: {text!r}")
        prefix = "q-" if m.group(1) == "t" else m.group(1)
        return cls(Family(prefix), int(m.group(2)))

    def evaluate(self) -> IntPoly:
        return term(self)

    def __str__(self) -> str:
        return f"{self.family.value}_{self.index}"


def _check_index(n: object, family: Family) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise InvalidInputError(f"index must be an integer, got {type(n).__name__}")
    if n < family.min_index:
        raise IndexOutOfRangeError(
            f"{family.value}_{n}: index must be >= {family.min_index}"
        )
    return n


# ============================================================================
# Recurrence caches
# ============================================================================

class _Recurrence:
    """Prefix cache for one family of ``f_n = x·f_(n-1) - f_(n-2)``."""

    def __init__(
        self,
        family: Family,
        first: IntPoly,
        second: IntPoly,
        limit: int = DEFAULT_CACHE_LIMIT,
    ) -> None:
        self.family = family
        self._offset = family.min_index
        self._seeds = (first, second)
        self._terms: list[IntPoly] = [first, second]
        self._limit = limit
        self._lock = threading.Lock()

    def get(self, n: int) -> IntPoly:
        i = n - self._offset
        with self._lock:
            terms = self._terms
            if i < len(terms):
                return terms[i]
            while len(terms) <= min(i, self._limit):
                terms.append(X * terms[-1] - terms[-2])
            if i < len(terms):
                return terms[i]
            prev, cur = terms[-2], terms[-1]
            start = len(terms)
        # past the cache limit: walk without storing
        for _ in range(start, i + 1):
            prev, cur = cur, X * cur - prev
        return cur

    def clear(self) -> None:
        with self._lock:
            self._terms = list(self._seeds)

    def __len__(self) -> int:
        with self._lock:
            return len(self._terms)


_ONE = IntPoly.one()

_RECURRENCES: dict[Family, _Recurrence] = {
    Family.C: _Recurrence(Family.C, IntPoly.constant(-1), IntPoly.zero()),
    Family.Q_MINUS: _Recurrence(Family.Q_MINUS, IntPoly.constant(2), X),
    Family.P_PLUS: _Recurrence(Family.P_PLUS, _ONE, X + 1),
    Family.P_MINUS: _Recurrence(Family.P_MINUS, _ONE, X - 1),
    Family.Q_PLUS: _Recurrence(Family.Q_PLUS, IntPoly.zero(), X),
}


def clear_caches() -> None:
    """Drop every cached term (seeds are kept)."""
    for rec in _RECURRENCES.values():
        rec.clear()
    logger.debug("sequence caches cleared")


# ============================================================================
# Generators
# ============================================================================

def c(n: int) -> IntPoly:
    """c_n for n >= -2: c₋₂ = -1, c₋₁ = 0, c₀ = 1, c₁ = x, ..."""
    return _RECURRENCES[Family.C].get(_check_index(n, Family.C))


def t(n: int) -> IntPoly:
    """t_n for n >= 0: t₀ = 2, t₁ = x; ``t_n(2cos θ) = 2cos(nθ)``."""
    return _RECURRENCES[Family.Q_MINUS].get(_check_index(n, Family.Q_MINUS))


q_minus = t


def p_plus(n: int) -> IntPoly:
    return _RECURRENCES[Family.P_PLUS].get(_check_index(n, Family.P_PLUS))


def p_minus(n: int) -> IntPoly:
    return _RECURRENCES[Family.P_MINUS].get(_check_index(n, Family.P_MINUS))


def q_plus(n: int) -> IntPoly:
    return _RECURRENCES[Family.Q_PLUS].get(_check_index(n, Family.Q_PLUS))


_GENERATORS = {
    Family.C: c,
    Family.P_PLUS: p_plus,
    Family.P_MINUS: p_minus,
    Family.Q_PLUS: q_plus,
    Family.Q_MINUS: q_minus,
}


def term(ref: SeqTerm) -> IntPoly:
    """Evaluate a :class:`SeqTerm`."""
    return _GENERATORS[ref.family](ref.index)


def generator(family: Family):
    """The generator function of a family."""
    return _GENERATORS[Family(family)]


# ============================================================================
# Closed forms
# ============================================================================

def c_expanded(n: int) -> IntPoly:
    """``sum_k (-1)^k C(n-k, k) x^(n-2k)``, no recursion."""
    n = _check_index(n, Family.C)
    if n < 0:
        raise IndexOutOfRangeError(f"c_expanded needs n >= 0, got {n}")
    coeffs = [0] * (n + 1)
    for k in range(n // 2 + 1):
        coeffs[n - 2 * k] = (-1) ** k * comb(n - k, k)
    return IntPoly(tuple(coeffs))


def t_expanded(n: int) -> IntPoly:
    """``sum_k (-1)^k n(n-k-1)! / (k!(n-2k)!) x^(n-2k)`` for n >= 1."""
    n = _check_index(n, Family.Q_MINUS)
    if n < 1:
        raise IndexOutOfRangeError(f"t_expanded needs n >= 1, got {n}")
    coeffs = [0] * (n + 1)
    for k in range(n // 2 + 1):
        # n(n-k-1)!/(k!(n-2k)!) == n·C(n-k, k)/(n-k)
        coeffs[n - 2 * k] = (-1) ** k * (n * comb(n - k, k) // (n - k))
    return IntPoly(tuple(coeffs))
