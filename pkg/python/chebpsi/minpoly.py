"""
Minimal polynomials ψ_n of 2cos(2π/n) and ψ_{m/n} of 2cos(mπ/n).

Five independent routes produce the same polynomial:

``main``
    The closed product over Π-levels: a head term of one family times
    alternating Π_i(n) products, evaluated with one exact division.
``quotient``
    The same head term divided by the ψ's of the complementary divisors.
``wz``
    The divisor-product recursion ∏_{d|n} ψ_d = t-difference.
``barnes``
    Möbius-exponent products of p⁺, p⁻ or c terms.
``numeric``
    Root product with rounding, in double precision or mpmath digits
    as the rounding error bound demands, n <= 200.

ψ_N for N > 2 reduces to a fraction m/n: N odd gives 2/N (p⁺ family),
N ≡ 2 mod 4 gives 1/(N/2) (p⁻ family) and N ≡ 0 mod 4 gives 1/(N/2)
(q⁻ family).  ψ₁ = x - 2 and ψ₂ = x + 2.
"""

from __future__ import annotations

import logging
import threading
from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Callable, Iterable, Sequence

import mpmath
import numpy as np

from chebpsi import sequences
from chebpsi.exceptions import (
    InvalidInputError,
    NotIrreducibleError,
    OutOfRangeError,
    PolynomialParseError,
    PrecisionExceededError,
)
from chebpsi.memo import SynchronizedMemo
from chebpsi.numtheory import divisors, moebius, pi_sets, require_int, two_adic
from chebpsi.poly import IntPoly, div_exact, mul
from chebpsi.sequences import Family, SeqTerm

logger = logging.getLogger(__name__)

DEFAULT_NUMERIC_TOLERANCE = 1e-6
DEFAULT_NUMERIC_CEILING = 200
#: Decimal digits the multiprecision root product may use.
DEFAULT_PRECISION_BUDGET = 100
_GUARD_DIGITS = 4

# mpmath precision is process-global
_MP_LOCK = threading.Lock()

PSI_FAMILIES = frozenset({Family.P_PLUS, Family.P_MINUS, Family.Q_MINUS})


# ============================================================================
# Symbolic products
# ============================================================================

def _product(polys: Iterable[IntPoly]) -> IntPoly:
    acc = IntPoly.one()
    for p in polys:
        acc = mul(acc, p)
    return acc


def _sorted_terms(terms: Iterable[SeqTerm]) -> tuple[SeqTerm, ...]:
    return tuple(sorted(terms, key=lambda ref: ref.index, reverse=True))


@dataclass(frozen=True)
class ProductExpr:
    """Quotient of sequence-term products, all from one family.

    Renders and parses as ``q-_15 q-_1/(q-_5 q-_3)``.
    """

    numerator: tuple[SeqTerm, ...]
    denominator: tuple[SeqTerm, ...] = ()

    def __post_init__(self) -> None:
        num = _sorted_terms(self.numerator)
        den = _sorted_terms(self.denominator)
        families = {ref.family for ref in num + den}
        if len(families) > 1:
            raise InvalidInputError(
                "expression mixes families: " + ", ".join(sorted(f.value for f in families))
            )
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    @property
    def family(self) -> Family | None:
        terms = self.numerator + self.denominator
        return terms[0].family if terms else None

    @property
    def term_count(self) -> int:
        return len(self.numerator) + len(self.denominator)

    def evaluate(self) -> IntPoly:
        """Multiply out both sides, then divide once (exactly)."""
        num = _product(sequences.term(ref) for ref in self.numerator)
        den = _product(sequences.term(ref) for ref in self.denominator)
        return div_exact(num, den)

    def num_strings(self) -> list[str]:
        return [str(ref) for ref in self.numerator]

    def den_strings(self) -> list[str]:
        return [str(ref) for ref in self.denominator]

    def __str__(self) -> str:
        num = " ".join(self.num_strings()) or "1"
        if not self.denominator:
            return num
        den = " ".join(self.den_strings())
        if len(self.denominator) > 1:
            den = f"({den})"
        return f"{num}/{den}"

    @classmethod
    def parse(cls, text: str):
        """Inverse of ``str()``."""
        head, sep, tail = text.strip().partition("/")
        if sep and not tail.strip():
            raise PolynomialParseError(f"empty denominator in {text!r}")
        tail = tail.strip()
        if tail.startswith("(") and tail.endswith(")"):
            tail = tail[1:-1]
        if "(" in head + tail or ")" in head + tail:
            raise PolynomialParseError(f"unbalanced parentheses in {text!r}")
        num = [] if head.strip() == "1" else [SeqTerm.parse(tok) for tok in head.split()]
        den = [SeqTerm.parse(tok) for tok in tail.split()]
        if not num and not den:
            raise PolynomialParseError(f"empty expression {text!r}")
        return cls(tuple(num), tuple(den))


@dataclass(frozen=True)
class PsiExpr(ProductExpr):
    """A :class:`ProductExpr` in the p⁺, p⁻ or q⁻ family."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.family is not None and self.family not in PSI_FAMILIES:
            raise InvalidInputError(f"ψ expressions use p+, p- or q-, not {self.family.value}")


# ============================================================================
# Fractions
# ============================================================================

class FractionCase(str, Enum):
    """Parity cases of an irreducible fraction m/n."""

    ODD_ODD = "i"       # n, m odd -> p⁻
    ODD_EVEN = "ii"     # n odd, m even -> p⁺
    EVEN_ODD = "iii"    # n even, m odd -> q⁻

    @property
    def family(self) -> Family:
        return {
            FractionCase.ODD_ODD: Family.P_MINUS,
            FractionCase.ODD_EVEN: Family.P_PLUS,
            FractionCase.EVEN_ODD: Family.Q_MINUS,
        }[self]


@dataclass(frozen=True)
class FractionTarget:
    """Irreducible m/n in (0, 1); stands for 2cos(mπ/n)."""

    m: int
    n: int

    def __post_init__(self) -> None:
        require_int(self.m, "m")
        require_int(self.n, "n")
        if not 0 < self.m < self.n:
            raise OutOfRangeError(f"need 0 < m < n, got {self.m}/{self.n}")
        if gcd(self.m, self.n) != 1:
            raise NotIrreducibleError(f"{self.m}/{self.n} is not in lowest terms")

    @property
    def case(self) -> FractionCase:
        if self.n % 2 == 0:
            return FractionCase.EVEN_ODD
        return FractionCase.ODD_EVEN if self.m % 2 == 0 else FractionCase.ODD_ODD

    @property
    def psi_index(self) -> int:
        """N with ψ_{m/n} = ψ_N."""
        return self.n if self.case is FractionCase.ODD_EVEN else 2 * self.n

    def __str__(self) -> str:
        return f"{self.m}/{self.n}"


def psi_target(n: int) -> FractionTarget:
    """Reduce 2/n (n > 2) to the fraction whose expression gives ψ_n."""
    n = require_int(n, minimum=1)
    if n <= 2:
        raise OutOfRangeError(f"ψ_{n} has no fraction form; n must be > 2")
    g = gcd(2, n)
    return FractionTarget(2 // g, n // g)


def psi_expr_fraction(target: FractionTarget) -> PsiExpr:
    """Closed Π-level expression for ψ_{m/n}.

    Head term index is ⌊n/2⌋ (n/2 for q⁻); each d in Π_i(n) contributes
    index ⌊n/2d⌋, in the numerator for even i and the denominator for odd i.
    """
    n = target.n
    family = target.case.family
    num = [SeqTerm(family, n // 2)]
    den: list[SeqTerm] = []
    for level, d in pi_sets(n).items():
        ref = SeqTerm(family, n // (2 * d))
        (num if level % 2 == 0 else den).append(ref)
    return PsiExpr(tuple(num), tuple(den))


def psi_expr(n: int) -> PsiExpr:
    """Closed expression for ψ_n, n > 2 (the table row)."""
    return psi_expr_fraction(psi_target(n))


# ============================================================================
# Memo tables
# ============================================================================

_PSI: SynchronizedMemo[int, IntPoly] = SynchronizedMemo("psi")
_WZ: SynchronizedMemo[int, IntPoly] = SynchronizedMemo("psi_wz")
_QUOTIENT: SynchronizedMemo[int, IntPoly] = SynchronizedMemo("psi_quotient")
_CYCLOTOMIC: SynchronizedMemo[int, IntPoly] = SynchronizedMemo("cyclotomic")


def clear_caches() -> None:
    """Empty every ψ/Φ memo and the sequence caches."""
    for memo in (_PSI, _WZ, _QUOTIENT, _CYCLOTOMIC):
        memo.clear()
    sequences.clear_caches()


_PSI_1 = IntPoly((-2, 1))
_PSI_2 = IntPoly((2, 1))


def _small(n: int) -> IntPoly | None:
    if n == 1:
        return _PSI_1
    if n == 2:
        return _PSI_2
    return None


# ============================================================================
# Main method
# ============================================================================

def psi(n: int) -> IntPoly:
    """ψ_n via the closed Π-level expression."""
    n = require_int(n, minimum=1)
    small = _small(n)
    if small is not None:
        return small

    def compute() -> IntPoly:
        expr = psi_expr(n)
        result = expr.evaluate()
        logger.debug("psi(%d) = %s, degree %d", n, expr, result.degree)
        return result

    return _PSI.get_or_compute(n, compute)


def psi_fraction(m: int, n: int) -> IntPoly:
    """ψ_{m/n}, the minimal polynomial of 2cos(mπ/n)."""
    return psi_expr_fraction(FractionTarget(m, n)).evaluate()


# ============================================================================
# Divisor-quotient form
# ============================================================================

def _quotient_divisors(target: FractionTarget) -> list[int]:
    """ψ indices the head term is divided by."""
    n = target.n
    case = target.case
    if case is FractionCase.ODD_ODD:
        return [2 * n // d for d in divisors(n) if 1 < d < n]
    if case is FractionCase.ODD_EVEN:
        return [n // d for d in divisors(n) if 1 < d < n]
    _, odd = two_adic(n)
    return [2 * n // d for d in divisors(odd) if d > 1]


def psi_quotient(n: int) -> IntPoly:
    """ψ_n as head term / ∏ ψ over the complementary divisors."""
    n = require_int(n, minimum=1)
    small = _small(n)
    if small is not None:
        return small

    def compute() -> IntPoly:
        target = psi_target(n)
        head_index = target.n // 2
        head = sequences.generator(target.case.family)(head_index)
        rest = _product(psi_quotient(k) for k in _quotient_divisors(target))
        return div_exact(head, rest)

    return _QUOTIENT.get_or_compute(n, compute)


# ============================================================================
# Divisor-product recursion
# ============================================================================

def wz_numerator(n: int) -> IntPoly:
    """∏_{d|n} ψ_d: t_{s+1} - t_s for n = 2s+1, t_{s+1} - t_{s-1} for n = 2s."""
    n = require_int(n, minimum=1)
    s = n // 2
    if n % 2:
        return sequences.t(s + 1) - sequences.t(s)
    return sequences.t(s + 1) - sequences.t(s - 1)


def psi_wz(n: int) -> IntPoly:
    """ψ_n from the divisor-product recursion, memoized."""
    n = require_int(n, minimum=1)

    def compute() -> IntPoly:
        proper = _product(psi_wz(d) for d in divisors(n)[:-1])
        return div_exact(wz_numerator(n), proper)

    return _WZ.get_or_compute(n, compute)


def wz_expr_text(n: int) -> str:
    """Render the recursion for n, e.g. ``(t_3 - t_1)/(psi_1 psi_2)``."""
    n = require_int(n, minimum=1)
    s = n // 2
    diff = f"t_{s + 1} - t_{s}" if n % 2 else f"t_{s + 1} - t_{s - 1}"
    proper = divisors(n)[:-1]
    if not proper:
        return diff
    return f"({diff})/(" + " ".join(f"psi_{d}" for d in proper) + ")"


# ============================================================================
# Möbius products
# ============================================================================

def barnes_expr(n: int) -> ProductExpr:
    """Möbius-exponent product for ψ_n, n >= 3.

    n odd: p⁺_{⌊d/2⌋}^{μ(n/d)} over d > 1, d | n.
    n = 2k, k odd: p⁻_{⌊d/2⌋}^{μ(k/d)} over d > 1, d | k.
    n = 2k, k even: c_{d-1}^{μ(k/d)} over d > 1, d | k.
    Zero exponents drop out.
    """
    n = require_int(n, minimum=1)
    if n < 3:
        raise OutOfRangeError(f"Möbius products need n >= 3, got {n}")
    if n % 2:
        base, family, index = n, Family.P_PLUS, (lambda d: d // 2)
    else:
        base = n // 2
        if base % 2:
            family, index = Family.P_MINUS, (lambda d: d // 2)
        else:
            family, index = Family.C, (lambda d: d - 1)
    num: list[SeqTerm] = []
    den: list[SeqTerm] = []
    for d in divisors(base):
        if d == 1:
            continue
        mu = moebius(base // d)
        if mu == 1:
            num.append(SeqTerm(family, index(d)))
        elif mu == -1:
            den.append(SeqTerm(family, index(d)))
    return ProductExpr(tuple(num), tuple(den))


def barnes_index_count(n: int) -> int:
    """Size of the Möbius product's index set, zero exponents included."""
    n = require_int(n, minimum=3)
    base = n if n % 2 else n // 2
    return len(divisors(base)) - 1


def psi_barnes(n: int) -> IntPoly:
    """ψ_n by the Möbius product, n >= 3."""
    return barnes_expr(n).evaluate()


# ============================================================================
# Floating-point oracle
# ============================================================================

def _numeric_roots(n: int) -> np.ndarray:
    k = np.array([k for k in range(n // 2 + 1) if gcd(k, n) == 1], dtype=float)
    return 2.0 * np.cos(2.0 * np.pi * k / n)


def _mp_roots(n: int) -> list:
    return [2 * mpmath.cos(2 * mpmath.pi * k / n) for k in range(n // 2 + 1) if gcd(k, n) == 1]


def _mp_root_product(roots: list) -> list:
    """Ascending coefficients of ∏ (x - r) at the current mpmath precision."""
    coeffs = [mpmath.mpf(1)]
    for r in roots:
        shifted = [-r * coeffs[0]]
        shifted += [coeffs[k - 1] - r * coeffs[k] for k in range(1, len(coeffs))]
        shifted.append(coeffs[-1])
        coeffs = shifted
    return coeffs


def numeric_coefficients(n: int) -> np.ndarray:
    """Ascending float coefficients of ∏ (x - 2cos(2πk/n)), gcd(k, n) = 1, k <= n/2."""
    n = require_int(n, minimum=1)
    return np.polynomial.polynomial.polyfromroots(_numeric_roots(n))


def rounding_error_bound(n: int) -> float:
    """A priori bound on the absolute error of :func:`numeric_coefficients`.

    The root product is accurate to about degree·ε times the coefficients
    of ∏ (x + |r|); below 0.5 the rounded result is the exact ψ_n.
    """
    roots = _numeric_roots(require_int(n, minimum=1))
    envelope = np.polynomial.polynomial.polyfromroots(-np.abs(roots))
    return 4.0 * (len(roots) + 1) * float(np.finfo(float).eps) * float(np.max(envelope))


def required_digits(n: int) -> int:
    """Decimal digits at which the root-product error bound drops below 0.5."""
    n = require_int(n, minimum=1)
    with _MP_LOCK, mpmath.workdps(15):
        roots = _mp_roots(n)
        envelope = _mp_root_product([-abs(r) for r in roots])
        need = 8 * (len(roots) + 1) * max(envelope)
        return int(mpmath.ceil(mpmath.log10(need))) + _GUARD_DIGITS


def numeric_certified(
    n: int,
    ceiling: int = DEFAULT_NUMERIC_CEILING,
    precision_budget: int = DEFAULT_PRECISION_BUDGET,
) -> bool:
    """Whether :func:`psi_numeric` can round exactly at n within the budget."""
    if n > ceiling:
        return False
    return rounding_error_bound(n) < 0.5 or required_digits(n) <= precision_budget


def numeric_deviation(n: int) -> float:
    """Largest distance of a double root-product coefficient from an integer."""
    coeffs = numeric_coefficients(n)
    return float(np.max(np.abs(coeffs - np.rint(coeffs))))


def numeric_agrees(
    n: int,
    poly: IntPoly,
    tolerance: float = DEFAULT_NUMERIC_TOLERANCE,
) -> bool:
    """``poly`` matches the float root product within ``tolerance * max(1, max|c|)``."""
    coeffs = numeric_coefficients(n)
    if poly.degree != len(coeffs) - 1:
        return False
    exact = np.array([float(c) for c in poly.coeffs])
    scale = max(1.0, float(np.max(np.abs(coeffs))))
    return bool(np.max(np.abs(exact - coeffs)) <= tolerance * scale)


def _check_rounding(n: int, deviation: float, scale: float, tolerance: float) -> None:
    if deviation > tolerance * scale:
        raise PrecisionExceededError(
            f"psi_numeric({n}): coefficient off by {deviation:.3g}, "
            f"tolerance {tolerance * scale:.3g}"
        )


def _psi_multiprecision(n: int, digits: int, tolerance: float) -> IntPoly:
    with _MP_LOCK, mpmath.workdps(digits):
        roots = _mp_roots(n)
        values = _mp_root_product(roots)
        envelope = _mp_root_product([-abs(r) for r in roots])
        bound = float(4 * (len(roots) + 1) * mpmath.mp.eps * max(envelope))
        rounded = [int(mpmath.nint(v)) for v in values]
        deviation = float(max(abs(v - r) for v, r in zip(values, rounded)))
        scale = max(1.0, float(max(abs(v) for v in values)))
    if bound >= 0.5:
        raise PrecisionExceededError(
            f"psi_numeric({n}): rounding error bound {bound:.3g} at {digits} digits "
            "is not below 0.5"
        )
    _check_rounding(n, deviation, scale, tolerance)
    logger.debug("psi_numeric(%d): %d digits, deviation %.3g", n, digits, deviation)
    return IntPoly(tuple(rounded))


def psi_numeric(
    n: int,
    precision_budget: int = DEFAULT_PRECISION_BUDGET,
    tolerance: float = DEFAULT_NUMERIC_TOLERANCE,
    ceiling: int = DEFAULT_NUMERIC_CEILING,
) -> IntPoly:
    """ψ_n from the product of (x - 2cos(2πk/n)), rounded to integers.

    The product runs in double precision when its rounding error bound is
    below 0.5, otherwise in mpmath at :func:`required_digits` decimal digits.
    ``precision_budget`` caps those digits.

    Raises:
        PrecisionExceededError: n is above ``ceiling``, the digits needed
            exceed ``precision_budget``, or some coefficient is farther than
            ``tolerance * max(1, max|c|)`` from an integer.
    """
    n = require_int(n, minimum=1)
    precision_budget = require_int(precision_budget, "precision_budget", minimum=1)
    if n > ceiling:
        raise PrecisionExceededError(f"numeric oracle is limited to n <= {ceiling}, got {n}")
    bound = rounding_error_bound(n)
    if bound >= 0.5:
        digits = required_digits(n)
        if digits > precision_budget:
            raise PrecisionExceededError(
                f"psi_numeric({n}): needs {digits} digits, precision budget is "
                f"{precision_budget} (double rounding error bound {bound:.3g})"
            )
        return _psi_multiprecision(n, digits, tolerance)
    coeffs = numeric_coefficients(n)
    rounded = np.rint(coeffs)
    deviation = float(np.max(np.abs(coeffs - rounded)))
    _check_rounding(n, deviation, max(1.0, float(np.max(np.abs(coeffs)))), tolerance)
    logger.debug("psi_numeric(%d): double, deviation %.3g, bound %.3g", n, deviation, bound)
    return IntPoly(tuple(int(v) for v in rounded))


# ============================================================================
# Cyclotomic polynomials
# ============================================================================

def cyclotomic(n: int) -> IntPoly:
    """Φ_n = (x^n - 1) / ∏_{d|n, d<n} Φ_d, memoized."""
    n = require_int(n, minimum=1)

    def compute() -> IntPoly:
        proper = _product(cyclotomic(d) for d in divisors(n)[:-1])
        return div_exact(IntPoly.monomial(n) - 1, proper)

    return _CYCLOTOMIC.get_or_compute(n, compute)


# ============================================================================
# Method registry
# ============================================================================

class Method(str, Enum):
    MAIN = "main"
    QUOTIENT = "quotient"
    WZ = "wz"
    BARNES = "barnes"
    NUMERIC = "numeric"


METHODS: dict[Method, Callable[[int], IntPoly]] = {
    Method.MAIN: psi,
    Method.QUOTIENT: psi_quotient,
    Method.WZ: psi_wz,
    Method.BARNES: psi_barnes,
    Method.NUMERIC: psi_numeric,
}


def supports(method: Method, n: int) -> bool:
    """Whether ``method`` is defined at n (barnes needs n >= 3, numeric a certified rounding)."""
    method = Method(method)
    if method is Method.BARNES:
        return n >= 3
    if method is Method.NUMERIC:
        return numeric_certified(n)
    return True


def compute(n: int, method: Method | str = Method.MAIN) -> IntPoly:
    """ψ_n by the named method."""
    return METHODS[Method(method)](n)


def expression_text(n: int, method: Method | str = Method.MAIN) -> str | None:
    """Symbolic form of ψ_n for a method, or None when it has none."""
    method = Method(method)
    if n <= 2 or method is Method.NUMERIC:
        return None
    if method is Method.WZ:
        return wz_expr_text(n)
    if method is Method.BARNES:
        return str(barnes_expr(n))
    if method is Method.QUOTIENT:
        target = psi_target(n)
        head = SeqTerm(target.case.family, target.n // 2)
        rest = _quotient_divisors(target)
        if not rest:
            return str(head)
        return f"{head}/(" + " ".join(f"psi_{k}" for k in rest) + ")"
    return str(psi_expr(n))


def sign_normalized(p: IntPoly) -> IntPoly:
    """``p`` scaled by ±1 to be monic."""
    return -p if p.leading < 0 else p


def product_of(indices: Sequence[int]) -> IntPoly:
    """∏ ψ_k over the given indices."""
    return _product(psi(k) for k in indices)
