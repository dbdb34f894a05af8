# chebpsi: exact minimal polynomials of 2cos(2π/n)
#
# This package provides:
# - IntPoly exact integer polynomial arithmetic
# - the Chebyshev-type sequences c, t = q⁻, p±, q⁺
# - ψ_n / ψ_{m/n} by five independent methods, and cyclotomic Φ_n
# - Chebyshev T/V/W factorization into ψ's and executable identities
#
# Licensed under GPL-3.0-or-later

# Version: prefer CMake-generated _version.py, fall back to hardcoded
try:
    from chebpsi._version import __version__
except ImportError:
    __version__ = "0.3.0"

# Exception hierarchy
from chebpsi.exceptions import (  # noqa: F401
    ChebPsiError,
    DivideByZeroError,
    IdentityViolationError,
    IndexOutOfRangeError,
    InvalidInputError,
    NotDivisibleError,
    NotIrreducibleError,
    OutOfRangeError,
    PolynomialError,
    PolynomialParseError,
    PrecisionExceededError,
)
from chebpsi.poly import IntPoly  # noqa: F401
from chebpsi.sequences import Family, SeqTerm  # noqa: F401
from chebpsi.minpoly import (  # noqa: F401
    FractionTarget,
    Method,
    PsiExpr,
    cyclotomic,
    psi,
    psi_barnes,
    psi_expr,
    psi_fraction,
    psi_numeric,
    psi_quotient,
    psi_wz,
)
from chebpsi.cheb_factor import ChebKind, factor  # noqa: F401

__all__ = [
    "__version__",
    "ChebPsiError", "InvalidInputError", "OutOfRangeError", "NotIrreducibleError",
    "PolynomialParseError", "IndexOutOfRangeError", "PolynomialError",
    "NotDivisibleError", "DivideByZeroError", "PrecisionExceededError",
    "IdentityViolationError",
    "IntPoly", "Family", "SeqTerm",
    "FractionTarget", "Method", "PsiExpr",
    "psi", "psi_wz", "psi_barnes", "psi_numeric", "psi_quotient", "psi_fraction",
    "psi_expr", "cyclotomic",
    "ChebKind", "factor",
]
