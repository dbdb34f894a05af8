"""
Integer helpers: factorization, divisors, Euler φ, Möbius μ and the
Π-level sets of odd-prime products.

Factorization is plain trial division up to √n, which is fine for the
n ≤ 10⁶ range the library is used at.  Results are cached.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import prod

from chebpsi.exceptions import InvalidInputError

logger = logging.getLogger(__name__)


def require_int(value: object, name: str = "n", minimum: int | None = None) -> int:
    """Validate an integer argument at a module boundary."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInputError(f"{name} must be an integer, got {type(value).__name__}")
    if minimum is not None and value < minimum:
        raise InvalidInputError(f"{name} must be >= {minimum}, got {value}")
    return value


# ============================================================================
# Factorization
# ============================================================================

@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ``((p, e), ...)`` with increasing primes."""

    entries: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        return prod(p ** e for p, e in self.entries)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.entries)

    @property
    def odd_primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.entries if p != 2)

    def exponent(self, p: int) -> int:
        for q, e in self.entries:
            if q == p:
                return e
        return 0

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


@lru_cache(maxsize=8192)
def _factorize(n: int) -> Factorization:
    entries: list[tuple[int, int]] = []
    e = (n & -n).bit_length() - 1
    if e:
        entries.append((2, e))
        n >>= e
    p = 3
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            entries.append((p, e))
        p += 2
    if n > 1:
        entries.append((n, 1))
    return Factorization(tuple(entries))


def factorize(n: int) -> Factorization:
    """Canonical factorization of ``n >= 1``; ``factorize(1)`` is empty."""
    return _factorize(require_int(n, minimum=1))


def is_prime(n: int) -> bool:
    n = require_int(n)
    if n < 2:
        return False
    f = _factorize(n)
    return len(f.entries) == 1 and f.entries[0][1] == 1


def is_power_of_two(n: int) -> bool:
    n = require_int(n)
    return n > 0 and n & (n - 1) == 0


def two_adic(n: int) -> tuple[int, int]:
    """Split ``n = 2^j * m`` with m odd; returns ``(j, m)``."""
    n = require_int(n, minimum=1)
    j = (n & -n).bit_length() - 1
    return j, n >> j


# ============================================================================
# Divisors, totient, Möbius
# ============================================================================

@lru_cache(maxsize=8192)
def _divisors(n: int) -> tuple[int, ...]:
    divs = [1]
    for p, e in _factorize(n):
        divs = [d * p ** k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def divisors(n: int) -> list[int]:
    """All positive divisors of n, increasing."""
    return list(_divisors(require_int(n, minimum=1)))


def euler_phi(n: int) -> int:
    """Euler's totient, computed from the factorization."""
    result = 1
    for p, e in factorize(n):
        result *= p ** (e - 1) * (p - 1)
    return result


def moebius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


# ============================================================================
# Π-level sets
# ============================================================================

@dataclass(frozen=True)
class PiSets:
    """Level i holds the products of i distinct odd primes of n that are < n.

    ``levels[0]`` is level 1.  Levels past the number of odd prime divisors
    are empty; :meth:`level` answers for any i >= 1.
    """

    n: int
    levels: tuple[tuple[int, ...], ...]

    def level(self, i: int) -> tuple[int, ...]:
        if i < 1:
            raise InvalidInputError(f"Π levels start at 1, got {i}")
        if i > len(self.levels):
            return ()
        return self.levels[i - 1]

    @property
    def depth(self) -> int:
        """Number of odd prime divisors (materialized levels)."""
        return len(self.levels)

    def items(self):
        """Yield ``(i, d)`` over every level and element."""
        for i, level in enumerate(self.levels, start=1):
            for d in level:
                yield i, d


@lru_cache(maxsize=4096)
def _pi_sets(n: int) -> PiSets:
    odd = _factorize(n).odd_primes
    levels = tuple(
        tuple(sorted(d for d in (prod(c) for c in combinations(odd, i)) if d < n))
        for i in range(1, len(odd) + 1)
    )
    return PiSets(n=n, levels=levels)


def pi_sets(n: int) -> PiSets:
    """Π-levels of ``n >= 1``."""
    return _pi_sets(require_int(n, minimum=1))
