"""
The ψ table: one row ``n | expr`` per n, in the notation
``q-_15 q-_1/(q-_5 q-_3)``.  ψ₁ and ψ₂ are written out as ``x - 2`` and
``x + 2``.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Union

from chebpsi.minpoly import PsiExpr, psi, psi_expr
from chebpsi.models import TableRow, coeff_strings
from chebpsi.numtheory import require_int
from chebpsi.poly import IntPoly

logger = logging.getLogger(__name__)


def row_expr(n: int) -> str:
    if n <= 2:
        return str(psi(n))
    return str(psi_expr(n))


def parse_row_expr(text: str) -> Union[PsiExpr, IntPoly]:
    """Inverse of :func:`row_expr`: explicit polynomial for n <= 2, else a PsiExpr."""
    text = text.strip()
    if text.startswith("x"):
        return IntPoly.parse(text)
    return PsiExpr.parse(text)


def build_row(n: int, expand: bool = False) -> TableRow:
    n = require_int(n, minimum=1)
    expanded = coeff_strings(psi(n)) if expand else None
    return TableRow(n=n, expr=row_expr(n), expanded=expanded)


def build_table(max_n: int, expand: bool = False, jobs: int = 1) -> list[TableRow]:
    """Rows for 1..max_n, ascending regardless of ``jobs``."""
    max_n = require_int(max_n, "max_n", minimum=1)
    ns = range(1, max_n + 1)
    if jobs <= 1:
        rows = [build_row(n, expand) for n in ns]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(lambda n: build_row(n, expand), ns))
    logger.info("built %d table rows (expand=%s)", len(rows), expand)
    return rows
