"""
Pydantic models for chebpsi's JSON output.

Defines the records printed by ``--format json``: ψ polynomials, table
rows, Chebyshev factor lists, verification reports and benchmarks.
Coefficients travel as strings of descending integers so that arbitrarily
large values survive any JSON reader.
"""
from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field

from chebpsi.poly import IntPoly


def coeff_strings(p: IntPoly) -> list[str]:
    """Descending coefficients as decimal strings."""
    return [str(c) for c in p.descending]


def poly_from_strings(coeffs: list[str]) -> IntPoly:
    return IntPoly.from_descending(int(c) for c in coeffs)


# ============================================================================
# ψ records
# ============================================================================

class ExprModel(BaseModel):
    """Symbolic quotient: numerator and denominator term strings."""
    num: list[str] = Field(default_factory=list)
    den: list[str] = Field(default_factory=list)


class PsiRecord(BaseModel):
    """One minimal polynomial ψ_n."""
    n: int = Field(..., ge=1)
    degree: int
    method: str = "main"
    expr: Optional[ExprModel] = None
    text: Optional[str] = Field(None, description="Symbolic form as printed by --expr")
    coeffs: list[str] = Field(..., description="Descending integer coefficients")

    def polynomial(self) -> IntPoly:
        return poly_from_strings(self.coeffs)


class FractionRecord(BaseModel):
    """ψ_{m/n}, the minimal polynomial of 2cos(mπ/n)."""
    m: int
    n: int
    case: str
    psi_index: int
    degree: int
    expr: ExprModel
    coeffs: list[str]

    def polynomial(self) -> IntPoly:
        return poly_from_strings(self.coeffs)


class TableRow(BaseModel):
    """A row ``n | expr`` of the ψ table; ``expanded`` only with --expand."""
    n: int = Field(..., ge=1)
    expr: str
    expanded: Optional[list[str]] = None

    def polynomial(self) -> Optional[IntPoly]:
        return poly_from_strings(self.expanded) if self.expanded is not None else None

    def line(self) -> str:
        return f"{self.n} | {self.expr}"


# ============================================================================
# Chebyshev factorization
# ============================================================================

class FactorRecord(BaseModel):
    kind: str = Field(..., pattern="^[TVW]$")
    n: int = Field(..., ge=1)
    psi_factors: list[int]
    checked: bool = False


# ============================================================================
# Verification
# ============================================================================

class CheckFailure(BaseModel):
    """A counterexample: parameters plus both sides in full."""
    params: dict[str, int | str]
    expected: str
    actual: str

    def params_text(self) -> str:
        return ", ".join(f"{k}={v}" for k, v in self.params.items())


class CheckReport(BaseModel):
    """Outcome of one identity sweep."""
    name: str
    range: str
    cases: int = 0
    note: str = ""
    failures: list[CheckFailure] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        if self.passed:
            return f"PASS {self.name} range={self.range}"
        first = self.failures[0].params_text()
        more = f" (+{len(self.failures) - 1} more)" if len(self.failures) > 1 else ""
        return f"FAIL {self.name} at {first}{more}"


class VerifySummary(BaseModel):
    max_n: int
    passed: bool
    reports: list[CheckReport]


# ============================================================================
# Benchmarks
# ============================================================================

class BenchRow(BaseModel):
    """Milliseconds per method at one n; None where a method is undefined."""
    n: int
    millis: dict[str, Optional[float]]


class MethodSummary(BaseModel):
    method: str
    total_seconds: float
    median_millis: float
    count: int


class BenchReport(BaseModel):
    max_n: int
    methods: list[str]
    rows: list[BenchRow]
    summary: list[MethodSummary]
    agree: bool
    mismatches: list[int] = Field(default_factory=list)
