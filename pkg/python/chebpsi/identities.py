"""
Executable identities among c, t, p± and q±.

Each ``check_*`` function returns a bool for one parameter choice.  The
sweeps behind :func:`run_suite` call the same ``_sides_*`` helpers and
record full polynomials for every mismatch, so a failing report can be
replayed by hand.

Only :func:`check_roots_float` touches floating point.  Horner evaluation
of these families loses about (1+√2)^s·ε, so root checks stop at
:data:`FLOAT_ROOT_CEILING`.
"""
from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Union

from chebpsi import sequences
from chebpsi.exceptions import ChebPsiError, PrecisionExceededError
from chebpsi.models import CheckFailure, CheckReport
from chebpsi.numtheory import require_int
from chebpsi.poly import IntPoly, X, div_exact, eval_float, is_divisible, substitute_neg
from chebpsi.sequences import Family

logger = logging.getLogger(__name__)

ROOT_TOLERANCE = 1e-9
FLOAT_ROOT_CEILING = 16

_X2_MINUS_4 = X * X - 4

Side = Union[IntPoly, bool, str]


# ============================================================================
# Identity sides
# ============================================================================

def _sides_prod_c(m: int, n: int) -> list[tuple[str, Side, Side]]:
    lhs = _X2_MINUS_4 * sequences.c(m) * sequences.c(n)
    rhs = sequences.t(m + n + 2) - sequences.t(abs(m - n))
    return [("(x^2-4) c_m c_n", lhs, rhs)]


def _sides_factor_t_odd(s: int) -> list[tuple[str, Side, Side]]:
    n = 2 * s + 1
    tn = sequences.t(n)
    pp, pm = sequences.p_plus(s), sequences.p_minus(s)
    return [
        ("t_n + 2", tn + 2, (X + 2) * pm * pm),
        ("t_n - 2", tn - 2, (X - 2) * pp * pp),
    ]


def _sides_factor_t_even(s: int) -> list[tuple[str, Side, Side]]:
    tn = sequences.t(2 * s)
    ts, cs = sequences.t(s), sequences.c(s - 1)
    return [
        ("t_n + 2", tn + 2, ts * ts),
        ("t_n - 2", tn - 2, _X2_MINUS_4 * cs * cs),
    ]


def _sides_pq_reflection(s: int) -> list[tuple[str, Side, Side]]:
    sign = -1 if s % 2 else 1
    return [("p+_s", sequences.p_plus(s), substitute_neg(sequences.p_minus(s)) * sign)]


def _sides_c_splitting(s: int) -> list[tuple[str, Side, Side]]:
    target = sequences.c(s - 1)
    half = s // 2
    if s % 2:
        split = sequences.p_minus(half) * sequences.p_plus(half)
    else:
        split = sequences.q_minus(half) * sequences.c(half - 1)
    return [
        ("q+_s / x", div_exact(sequences.q_plus(s), X), target),
        ("c_(s-1) splitting", split, target),
    ]


def _sides_divisibility(s: int, s2: int) -> list[tuple[str, Side, Side]]:
    odd_ok = (2 * s2 + 1) % (2 * s + 1) == 0
    t_ok = s2 % s == 0 and (s2 // s) % 2 == 1
    return [
        ("p+_s | p+_s2", odd_ok, is_divisible(sequences.p_plus(s2), sequences.p_plus(s))),
        ("p-_s | p-_s2", odd_ok, is_divisible(sequences.p_minus(s2), sequences.p_minus(s))),
        ("t_s | t_s2", t_ok, is_divisible(sequences.t(s2), sequences.t(s))),
    ]


# ============================================================================
# Boolean checks
# ============================================================================

def _holds(sides: list[tuple[str, Side, Side]]) -> bool:
    return all(lhs == rhs for _, lhs, rhs in sides)


def check_prod_c(m: int, n: int) -> bool:
    """(x²-4)·c_m·c_n = t_{m+n+2} - t_{|m-n|}."""
    return _holds(_sides_prod_c(require_int(m, "m", 0), require_int(n, "n", 0)))


def check_factor_t_odd(s: int) -> bool:
    """t_{2s+1} ± 2 = (x ± 2)·(p∓_s)²."""
    return _holds(_sides_factor_t_odd(require_int(s, "s", 0)))


def check_factor_t_even(s: int) -> bool:
    """t_{2s} + 2 = t_s² and t_{2s} - 2 = (x²-4)·c_{s-1}²."""
    return _holds(_sides_factor_t_even(require_int(s, "s", 1)))


def check_pq_reflection(s: int) -> bool:
    """p⁺_s(x) = (-1)^s·p⁻_s(-x)."""
    return _holds(_sides_pq_reflection(require_int(s, "s", 0)))


def check_c_splitting(s: int) -> bool:
    """q⁺_s/x = c_{s-1} = p⁻_{s'}p⁺_{s'} (s = 2s'+1) or q⁻_{s'}c_{s'-1} (s = 2s')."""
    return _holds(_sides_c_splitting(require_int(s, "s", 1)))


def check_divisibility(s: int, s2: int) -> bool:
    """Exact division matches the arithmetic criterion for p±, and for t."""
    return _holds(_sides_divisibility(require_int(s, "s", 1), require_int(s2, "s2", 1)))


# ============================================================================
# Float root checks
# ============================================================================

def family_roots(family: Family | str, s: int) -> list[float]:
    """Closed-form roots of the s-th term of a family."""
    family = Family(family)
    if family is Family.P_MINUS:
        return [2 * math.cos((2 * k - 1) * math.pi / (2 * s + 1)) for k in range(1, s + 1)]
    if family is Family.P_PLUS:
        return [2 * math.cos(2 * k * math.pi / (2 * s + 1)) for k in range(1, s + 1)]
    if family is Family.Q_MINUS:
        return [2 * math.cos((2 * k - 1) * math.pi / (2 * s)) for k in range(1, s + 1)]
    if family is Family.C:
        return [2 * math.cos(k * math.pi / (s + 1)) for k in range(1, s + 1)]
    return [0.0] + [2 * math.cos(k * math.pi / s) for k in range(1, s)]


def root_residual(family: Family | str, s: int) -> float:
    """Largest |f_s(r)| over the closed-form roots r."""
    poly = sequences.generator(Family(family))(s)
    return max(abs(eval_float(poly, r)) for r in family_roots(family, s))


def check_roots_float(family: Family | str, s: int) -> bool:
    """Every closed-form root evaluates to ~0 under :func:`eval_float`.

    Raises:
        PrecisionExceededError: s above :data:`FLOAT_ROOT_CEILING`.
    """
    s = require_int(s, "s", 1)
    if s > FLOAT_ROOT_CEILING:
        raise PrecisionExceededError(
            f"float root checks are limited to s <= {FLOAT_ROOT_CEILING}, got {s}"
        )
    return root_residual(family, s) <= ROOT_TOLERANCE


# ============================================================================
# Sweeps
# ============================================================================

class Sweep:
    """Accumulates cases and counterexamples into a :class:`CheckReport`."""

    def __init__(self, name: str, range_text: str, note: str = "") -> None:
        self.report = CheckReport(name=name, range=range_text, note=note)

    def run(self, params: dict, sides: Callable[[], Iterable[tuple[str, Side, Side]]]) -> None:
        try:
            pairs = list(sides())
        except ChebPsiError as exc:
            self.report.cases += 1
            self._fail(params, "no error", f"{type(exc).__name__}: {exc}")
            return
        for label, expected, actual in pairs:
            self.compare({**params, "side": label} if len(pairs) > 1 else params, expected, actual)

    def compare(self, params: dict, expected: Side, actual: Side) -> None:
        self.report.cases += 1
        if expected != actual:
            self._fail(params, str(expected), str(actual))

    def _fail(self, params: dict, expected: str, actual: str) -> None:
        self.report.failures.append(CheckFailure(params=params, expected=expected, actual=actual))

    def done(self) -> CheckReport:
        report = self.report
        logger.info("%s: %d cases, %d failures", report.name, report.cases, len(report.failures))
        return report


def _sweep_prod_c(max_n: int) -> CheckReport:
    top = min(max_n, 100)
    sweep = Sweep("prod_c", f"0<=m,n<={top}")
    for m in range(top + 1):
        for n in range(m, top + 1):
            sweep.run({"m": m, "n": n}, lambda: _sides_prod_c(m, n))
    return sweep.done()


def _sweep_factor_t_odd(max_n: int) -> CheckReport:
    sweep = Sweep("factor_t_odd", f"0<=s<={max_n}")
    for s in range(max_n + 1):
        sweep.run({"s": s}, lambda: _sides_factor_t_odd(s))
    return sweep.done()


def _sweep_factor_t_even(max_n: int) -> CheckReport:
    sweep = Sweep("factor_t_even", f"1<=s<={max_n}")
    for s in range(1, max_n + 1):
        sweep.run({"s": s}, lambda: _sides_factor_t_even(s))
    return sweep.done()


def _sweep_pq_reflection(max_n: int) -> CheckReport:
    sweep = Sweep("pq_reflection", f"0<=s<={max_n}")
    for s in range(max_n + 1):
        sweep.run({"s": s}, lambda: _sides_pq_reflection(s))
    return sweep.done()


def _sweep_c_splitting(max_n: int) -> CheckReport:
    sweep = Sweep("c_splitting", f"1<=s<={max_n}")
    for s in range(1, max_n + 1):
        sweep.run({"s": s}, lambda: _sides_c_splitting(s))
    return sweep.done()


def _sweep_divisibility(max_n: int) -> CheckReport:
    top = min(max_n, 40)
    sweep = Sweep("divisibility", f"1<=s<={top},1<=s2<={max_n}")
    for s in range(1, top + 1):
        for s2 in range(1, max_n + 1):
            sweep.run({"s": s, "s2": s2}, lambda: _sides_divisibility(s, s2))
    return sweep.done()


def _sweep_roots_float(max_n: int) -> CheckReport:
    top = min(max_n, FLOAT_ROOT_CEILING)
    if top < max_n:
        logger.warning("roots_float clipped to s <= %d (float ceiling)", top)
    sweep = Sweep(
        "roots_float",
        f"1<=s<={top}",
        note=f"absolute tolerance {ROOT_TOLERANCE:g}",
    )
    for family in Family:
        for s in range(1, top + 1):
            residual = root_residual(family, s)
            sweep.report.cases += 1
            if residual > ROOT_TOLERANCE:
                sweep._fail(
                    {"family": family.value, "s": s},
                    f"|f(r)| <= {ROOT_TOLERANCE:g}",
                    f"{residual:.3g}",
                )
    return sweep.done()


#: Sweeps in report order.
SUITE: list[tuple[str, Callable[[int], CheckReport]]] = [
    ("prod_c", _sweep_prod_c),
    ("factor_t_odd", _sweep_factor_t_odd),
    ("factor_t_even", _sweep_factor_t_even),
    ("pq_reflection", _sweep_pq_reflection),
    ("c_splitting", _sweep_c_splitting),
    ("divisibility", _sweep_divisibility),
    ("roots_float", _sweep_roots_float),
]


def run_sweeps(
    sweeps: list[tuple[str, Callable[[int], CheckReport]]],
    max_n: int,
    jobs: int = 1,
) -> list[CheckReport]:
    """Run sweeps, in parallel when ``jobs > 1``; reports keep list order."""
    if max_n < 1:
        return []
    if jobs <= 1:
        return [fn(max_n) for _, fn in sweeps]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(fn, max_n) for _, fn in sweeps]
        return [f.result() for f in futures]


def run_suite(max_n: int, jobs: int = 1) -> list[CheckReport]:
    """Every identity sweep over ranges bounded by ``max_n``.

    prod_c stops at 100 and divisibility at s <= 40, s2 <= max_n;
    the other sweeps run to max_n (root checks to the float ceiling).
    """
    max_n = require_int(max_n, "max_n")
    return run_sweeps(SUITE, max_n, jobs)
