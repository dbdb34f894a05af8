"""
Typed exceptions for chebpsi.

Every error raised by the library derives from :class:`ChebPsiError`, and
each one also subclasses the closest builtin, so callers can catch either
``ValueError`` or ``InvalidInputError``.

Exception hierarchy::

    ChebPsiError (Exception)
    ├── InvalidInputError (ValueError)           # bad argument at a module boundary
    │   ├── OutOfRangeError                      # argument outside the supported range
    │   ├── NotIrreducibleError                  # fraction m/n not in lowest terms
    │   └── PolynomialParseError                 # polynomial or expression text
    ├── IndexOutOfRangeError (IndexError)        # index below the family minimum
    ├── PolynomialError (ArithmeticError)
    │   ├── NotDivisibleError                    # exact division left a remainder
    │   └── DivideByZeroError (ZeroDivisionError)
    ├── PrecisionExceededError (ArithmeticError) # float oracle cannot meet tolerance
    └── IdentityViolationError (AssertionError)  # an enforced identity failed
"""


class ChebPsiError(Exception):
    """Base exception for all chebpsi errors."""


class InvalidInputError(ChebPsiError, ValueError):
    """An argument is not acceptable (wrong type, negative, zero...)."""


class OutOfRangeError(InvalidInputError):
    """An argument lies outside the range an operation supports."""


class NotIrreducibleError(InvalidInputError):
    """A fraction m/n was not given in lowest terms."""


class PolynomialParseError(InvalidInputError):
    """Polynomial or product-expression text could not be parsed."""


class IndexOutOfRangeError(ChebPsiError, IndexError):
    """A sequence index is below the first defined index of its family."""


class PolynomialError(ChebPsiError, ArithmeticError):
    """Base class for polynomial arithmetic failures."""


class NotDivisibleError(PolynomialError):
    """Exact division was requested but the divisor does not divide."""


class DivideByZeroError(PolynomialError, ZeroDivisionError):
    """Division by the zero polynomial."""


class PrecisionExceededError(ChebPsiError, ArithmeticError):
    """A floating-point computation cannot reach the requested tolerance."""


class IdentityViolationError(ChebPsiError, AssertionError):
    """An identity that the library enforces did not hold."""
