"""
Cross-method sweeps for ψ_n and the Chebyshev factor lists.

These complement :func:`chebpsi.identities.run_suite`: every method in
:mod:`chebpsi.minpoly` is compared against the others, and the structural
facts about the closed expression (degree, term counts, prime-power shape,
independence of m) are checked over ranges bounded by ``max_n``.
"""
from __future__ import annotations

import logging
from math import comb, gcd

from chebpsi import cheb_factor, minpoly, sequences
from chebpsi.identities import Sweep, run_suite, run_sweeps
from chebpsi.minpoly import FractionCase, FractionTarget
from chebpsi.models import CheckReport
from chebpsi.numtheory import (
    divisors,
    euler_phi,
    factorize,
    is_power_of_two,
    is_prime,
    moebius,
    pi_sets,
    require_int,
    two_adic,
)
from chebpsi.poly import X, laurent_lift, substitute_neg

logger = logging.getLogger(__name__)


# ============================================================================
# Expected shapes
# ============================================================================

def expected_term_count(n: int) -> int:
    """Number of terms in ψ_n's closed expression (n > 2).

    2^i - ν when n is odd or n ≡ 2 mod 4, and 2^i when 4 | n, where i
    counts odd primes and ν = 1 iff all their exponents are 1.
    """
    f = factorize(n)
    odd = [(p, e) for p, e in f if p != 2]
    i = len(odd)
    if n % 4 == 0:
        return 2 ** i
    nu = 1 if all(e == 1 for _, e in odd) else 0
    return 2 ** i - nu


def expected_barnes_index_count(n: int) -> int:
    """j(ℓ₁+1)⋯(ℓ_i+1) - 1 for n = 2^j p₁^ℓ₁⋯p_i^ℓ_i with 4 | n."""
    j, odd = two_adic(n)
    count = j
    for _, e in factorize(odd):
        count *= e + 1
    return count - 1


def expected_prime_power_shape(target: FractionTarget) -> tuple[list[int], list[int]] | None:
    """Term indices for prime-power fractions, else None.

    Odd n = p^ℓ: [⌊n/2⌋] alone when ℓ = 1, over [⌊n/2p⌋] when ℓ > 1.
    Even n = 2^j p^ℓ: [n/2] alone when ℓ = 0, over [n/2p] when ℓ > 0.
    """
    n = target.n
    _, odd = two_adic(n)
    primes = factorize(odd).primes
    if len(primes) > 1:
        return None
    if not primes:
        return [n // 2], []
    p = primes[0]
    if target.case is FractionCase.EVEN_ODD or odd != p:
        return [n // 2], [n // (2 * p)]
    return [n // 2], []


# ============================================================================
# Sweeps
# ============================================================================

def _sweep_triple_agreement(max_n: int) -> CheckReport:
    top = min(max_n, 500)
    sweep = Sweep("triple_agreement", f"3<=n<={top}", note="main, quotient, wz, barnes")
    for n in range(3, top + 1):
        def sides(n=n):
            main = minpoly.psi(n)
            return [
                ("wz", main, minpoly.psi_wz(n)),
                ("barnes", main, minpoly.psi_barnes(n)),
                ("quotient", main, minpoly.psi_quotient(n)),
            ]
        sweep.run({"n": n}, sides)
    return sweep.done()


def _sweep_numeric_agreement(max_n: int) -> CheckReport:
    top = min(max_n, minpoly.DEFAULT_NUMERIC_CEILING)
    sweep = Sweep(
        "numeric_agreement",
        f"1<=n<={top}",
        note=(
            f"relative tolerance {minpoly.DEFAULT_NUMERIC_TOLERANCE:g}; "
            "exact in double or mpmath digits per the rounding bound"
        ),
    )
    for n in range(1, top + 1):
        def sides(n=n):
            main = minpoly.psi(n)
            return [
                ("tolerance", True, minpoly.numeric_agrees(n, main)),
                ("exact", main, minpoly.psi_numeric(n)),
            ]
        sweep.run({"n": n}, sides)
    return sweep.done()


def _sweep_degree_law(max_n: int) -> CheckReport:
    sweep = Sweep("degree_law", f"1<=n<={max_n}")
    for n in range(1, max_n + 1):
        want = 1 if n <= 2 else euler_phi(n) // 2
        sweep.run({"n": n}, lambda: [("degree", want, minpoly.psi(n).degree)])
    return sweep.done()


def _sweep_wz_product(max_n: int) -> CheckReport:
    top = min(max_n, 300)
    sweep = Sweep("wz_product", f"1<=n<={top}")
    for n in range(1, top + 1):
        sweep.run(
            {"n": n},
            lambda: [("prod psi_d", minpoly.wz_numerator(n), minpoly.product_of(divisors(n)))],
        )
    return sweep.done()


def _sweep_lehmer(max_n: int) -> CheckReport:
    top = min(max_n, 300)
    sweep = Sweep("lehmer", f"3<=n<={top}")
    for n in range(3, top + 1):
        sweep.run(
            {"n": n}, lambda: [("lift", minpoly.cyclotomic(n), laurent_lift(minpoly.psi(n)))]
        )
    return sweep.done()


def _sweep_sign_relation(max_n: int) -> CheckReport:
    top = min(max_n, 301)
    sweep = Sweep("sign_relation", f"odd 3<=n<={top}")
    for n in range(3, top + 1, 2):
        sweep.run(
            {"n": n},
            lambda: [
                (
                    "psi_2n",
                    minpoly.psi(2 * n),
                    minpoly.sign_normalized(substitute_neg(minpoly.psi(n))),
                )
            ],
        )
    return sweep.done()


def _sweep_term_counts(max_n: int) -> CheckReport:
    top = min(max_n, 500)
    sweep = Sweep("term_counts", f"3<=n<={top}")
    for n in range(3, top + 1):
        def sides(n=n):
            pairs = [("closed", expected_term_count(n), minpoly.psi_expr(n).term_count)]
            if n % 4 == 0:
                base = n // 2
                nonzero = sum(1 for d in divisors(base)[1:] if moebius(base // d))
                pairs.append((
                    "barnes index set",
                    expected_barnes_index_count(n),
                    minpoly.barnes_index_count(n),
                ))
                pairs.append(("barnes terms", nonzero, minpoly.barnes_expr(n).term_count))
            return pairs
        sweep.run({"n": n}, sides)
    return sweep.done()


def _sweep_prime_power_shape(max_n: int) -> CheckReport:
    sweep = Sweep("prime_power_shape", f"3<=n<={max_n}")
    for n in range(3, max_n + 1):
        target = minpoly.psi_target(n)
        shape = expected_prime_power_shape(target)
        if shape is None:
            continue
        expr = minpoly.psi_expr(n)
        actual = ([r.index for r in expr.numerator], [r.index for r in expr.denominator])
        sweep.compare({"n": n}, str(shape), str(actual))
    return sweep.done()


def _sweep_fraction_independence(max_n: int) -> CheckReport:
    top = min(max_n, 60)
    sweep = Sweep("fraction_independence", f"2<=n<={top}, 0<m<n")
    for n in range(2, top + 1):
        for m in range(1, n):
            if gcd(m, n) != 1:
                continue
            target = FractionTarget(m, n)
            rep = FractionTarget(2 if target.case is FractionCase.ODD_EVEN else 1, n)
            sweep.compare(
                {"m": m, "n": n},
                str(minpoly.psi_expr_fraction(rep)),
                str(minpoly.psi_expr_fraction(target)),
            )
            if m <= 3:
                sweep.run(
                    {"m": m, "n": n, "side": "psi"},
                    lambda: [("psi", minpoly.psi(target.psi_index), minpoly.psi_fraction(m, n))],
                )
    return sweep.done()


def _sweep_factor_lists(max_n: int) -> CheckReport:
    top = min(max_n, 300)
    sweep = Sweep("factor_lists", f"1<=n<={top}", note="T, V, W products and degree sums")
    for n in range(1, top + 1):
        for kind in cheb_factor.ChebKind:
            def sides(kind=kind, n=n):
                fl = cheb_factor.factor(kind, n, check=False)
                degree = sum(minpoly.psi(k).degree for k in fl.factors)
                return [("product", fl.target(), fl.product()), ("degree", n, degree)]
            sweep.run({"kind": kind.value, "n": n}, sides)
    return sweep.done()


def _sweep_irreducibility(max_n: int) -> CheckReport:
    top = min(max_n, 300)
    sweep = Sweep("irreducibility", f"1<=n<={top}")
    for n in range(1, top + 1):
        sweep.compare({"n": n, "kind": "T"}, is_power_of_two(n), cheb_factor.is_irreducible_t(n))
        sweep.compare({"n": n, "kind": "VW"}, is_prime(2 * n + 1), cheb_factor.is_irreducible_vw(n))
    return sweep.done()


def _sweep_sequences(max_n: int) -> CheckReport:
    top = min(max_n, 500)
    sweep = Sweep("sequences", f"0<=n<={top}", note="closed forms, seeds, shared recurrence")
    for n in range(top + 1):
        def sides(n=n):
            pairs = [("c closed form", sequences.c(n), sequences.c_expanded(n))]
            if n >= 1:
                pairs.append(("t closed form", sequences.t(n), sequences.t_expanded(n)))
            pairs += [
                ("p+ = c_n + c_(n-1)", sequences.c(n) + sequences.c(n - 1), sequences.p_plus(n)),
                ("p- = c_n - c_(n-1)", sequences.c(n) - sequences.c(n - 1), sequences.p_minus(n)),
                ("q- = c_n - c_(n-2)", sequences.c(n) - sequences.c(n - 2), sequences.q_minus(n)),
                ("q+ = c_n + c_(n-2)", sequences.c(n) + sequences.c(n - 2), sequences.q_plus(n)),
            ]
            if n >= 1:
                pairs.append(("q+ = x c_(n-1)", X * sequences.c(n - 1), sequences.q_plus(n)))
            if n >= 2:
                for family in (sequences.Family.P_PLUS, sequences.Family.P_MINUS,
                               sequences.Family.Q_PLUS, sequences.Family.Q_MINUS):
                    gen = sequences.generator(family)
                    pairs.append(
                        (f"{family.value} recurrence", X * gen(n - 1) - gen(n - 2), gen(n))
                    )
            return pairs
        sweep.run({"n": n}, sides)
    return sweep.done()


def _sweep_divisor_sums(max_n: int) -> CheckReport:
    sweep = Sweep("divisor_sums", f"1<=n<={max_n}")
    for n in range(1, max_n + 1):
        divs = divisors(n)
        sweep.compare({"n": n, "sum": "phi"}, n, sum(euler_phi(d) for d in divs))
        sweep.compare({"n": n, "sum": "mu"}, 1 if n == 1 else 0, sum(moebius(d) for d in divs))
    return sweep.done()


def _sweep_pi_level_sizes(max_n: int) -> CheckReport:
    sweep = Sweep("pi_level_sizes", f"odd squarefree 3<=n<={max_n}")
    for n in range(3, max_n + 1, 2):
        f = factorize(n)
        if any(e > 1 for _, e in f):
            continue
        i = len(f)
        levels = pi_sets(n)
        for j in range(1, i + 1):
            want = comb(i, j) if j < i else 0
            sweep.compare({"n": n, "level": j}, want, len(levels.level(j)))
    return sweep.done()


#: Cross-method sweeps in report order.
CROSS_CHECKS = [
    ("sequences", _sweep_sequences),
    ("divisor_sums", _sweep_divisor_sums),
    ("pi_level_sizes", _sweep_pi_level_sizes),
    ("triple_agreement", _sweep_triple_agreement),
    ("numeric_agreement", _sweep_numeric_agreement),
    ("degree_law", _sweep_degree_law),
    ("wz_product", _sweep_wz_product),
    ("lehmer", _sweep_lehmer),
    ("sign_relation", _sweep_sign_relation),
    ("term_counts", _sweep_term_counts),
    ("prime_power_shape", _sweep_prime_power_shape),
    ("fraction_independence", _sweep_fraction_independence),
    ("factor_lists", _sweep_factor_lists),
    ("irreducibility", _sweep_irreducibility),
]


def run_cross_checks(max_n: int, jobs: int = 1) -> list[CheckReport]:
    """Every cross-method sweep over ranges bounded by ``max_n``."""
    max_n = require_int(max_n, "max_n")
    return run_sweeps(CROSS_CHECKS, max_n, jobs)


def run_all(max_n: int, jobs: int = 1) -> list[CheckReport]:
    """Identity suite followed by the cross-method sweeps."""
    return run_suite(max_n, jobs) + run_cross_checks(max_n, jobs)

