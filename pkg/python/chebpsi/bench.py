"""
Time the ψ methods against each other.

Every method starts from cold caches, then computes ψ_n for n = 1..max_n.
Timings are informational; the outputs must agree with the first method
wherever both are defined.
"""
from __future__ import annotations

import logging
import statistics
import time
from typing import Sequence

from chebpsi import minpoly
from chebpsi.minpoly import Method
from chebpsi.models import BenchReport, BenchRow, MethodSummary
from chebpsi.numtheory import require_int
from chebpsi.poly import IntPoly

logger = logging.getLogger(__name__)


def run_bench(
    max_n: int,
    methods: Sequence[Method | str] = (Method.MAIN, Method.WZ),
) -> BenchReport:
    max_n = require_int(max_n, "max_n", minimum=1)
    methods = [Method(m) for m in methods]
    timings: dict[Method, dict[int, float]] = {}
    results: dict[Method, dict[int, IntPoly]] = {}
    for method in methods:
        minpoly.clear_caches()
        timings[method], results[method] = {}, {}
        for n in range(1, max_n + 1):
            if not minpoly.supports(method, n):
                continue
            start = time.perf_counter()
            results[method][n] = minpoly.compute(n, method)
            timings[method][n] = time.perf_counter() - start
        logger.debug("bench %s: %d values", method.value, len(results[method]))

    reference = results[methods[0]]
    mismatches = sorted({
        n
        for method in methods[1:]
        for n, value in results[method].items()
        if n in reference and reference[n] != value
    })
    if mismatches:
        logger.warning("bench: methods disagree at n=%s", mismatches)

    rows = [
        BenchRow(
            n=n,
            millis={
                m.value: (timings[m][n] * 1000.0 if n in timings[m] else None) for m in methods
            },
        )
        for n in range(1, max_n + 1)
    ]
    summary = [
        MethodSummary(
            method=m.value,
            total_seconds=sum(timings[m].values()),
            median_millis=statistics.median(timings[m].values()) * 1000.0 if timings[m] else 0.0,
            count=len(timings[m]),
        )
        for m in methods
    ]
    return BenchReport(
        max_n=max_n,
        methods=[m.value for m in methods],
        rows=rows,
        summary=summary,
        agree=not mismatches,
        mismatches=mismatches,
    )
