"""
Exact dense univariate polynomials over the integers.

:class:`IntPoly` stores coefficients in ascending order (index k holds the
coefficient of x^k) and is always normalized: no trailing zeros, and the
zero polynomial is the empty tuple.  Values are immutable and hashable, so
they can be cached and shared between threads freely.

The text format is descending powers with explicit signs::

    x^8 - 7*x^6 + 14*x^4 - 8*x^2 + 1
"""

from __future__ import annotations

import logging
import math
import operator
import re
from dataclasses import dataclass
from typing import Iterable, Union

from chebpsi.exceptions import (
    DivideByZeroError,
    InvalidInputError,
    NotDivisibleError,
    PolynomialParseError,
)

logger = logging.getLogger(__name__)

#: Degree of the zero polynomial.
NEG_INFINITY = float("-inf")

#: Both factors need at least this many coefficients before mul() switches
#: from schoolbook to Kronecker substitution.
KRONECKER_THRESHOLD = 32


def _normalize(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = []
    for c in coeffs:
        if isinstance(c, bool):
            raise InvalidInputError(f"bool is not a polynomial coefficient: {c!r}")
        try:
            out.append(operator.index(c))
        except TypeError:
            raise InvalidInputError(
                f"polynomial coefficients must be integers, got {type(c).__name__}"
            ) from None
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


# ============================================================================
# IntPoly
# ============================================================================

@dataclass(frozen=True, repr=False)
class IntPoly:
    """Dense polynomial with arbitrary-precision integer coefficients."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _normalize(self.coeffs))

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> IntPoly:
        return cls(())

    @classmethod
    def one(cls) -> IntPoly:
        return cls((1,))

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        """Return ``c * x^k``."""
        if k < 0:
            raise InvalidInputError(f"monomial exponent must be >= 0, got {k}")
        return cls((0,) * k + (c,))

    @classmethod
    def from_descending(cls, coeffs: Iterable[int]) -> IntPoly:
        """Build from coefficients listed highest power first."""
        return cls(tuple(reversed(list(coeffs))))

    @classmethod
    def parse(cls, text: str) -> IntPoly:
        """Parse the textual format produced by ``str()``."""
        return parse(text)

    # -- properties ---------------------------------------------------------

    @property
    def degree(self) -> Union[int, float]:
        """Highest power present; :data:`NEG_INFINITY` for zero."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return self.leading == 1

    @property
    def descending(self) -> tuple[int, ...]:
        return tuple(reversed(self.coeffs))

    def __getitem__(self, k: int) -> int:
        """Coefficient of x^k (0 beyond the degree)."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    # -- arithmetic ---------------------------------------------------------

    def shift(self, k: int) -> IntPoly:
        """Multiply by x^k."""
        if k < 0:
            raise InvalidInputError(f"shift must be >= 0, got {k}")
        if self.is_zero:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def scale(self, c: int) -> IntPoly:
        return IntPoly(tuple(c * a for a in self.coeffs))

    def __add__(self, other: object) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: object) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other: object) -> IntPoly:
        if isinstance(other, int):
            return add(IntPoly.constant(other), -self)
        return NotImplemented

    def __mul__(self, other: object) -> IntPoly:
        if isinstance(other, int) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    # -- formatting ---------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"IntPoly({format_poly(self)!r})"


# ============================================================================
# Module-level operations
# ============================================================================

def add(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pointwise coefficient sum."""
    ac, bc = a.coeffs, b.coeffs
    if len(ac) < len(bc):
        ac, bc = bc, ac
    out = list(ac)
    for k, c in enumerate(bc):
        out[k] += c
    return IntPoly(tuple(out))


def _mul_schoolbook(a: tuple[int, ...], b: tuple[int, ...]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def _pack(coeffs: tuple[int, ...], width: int) -> int:
    # Signed digits: evaluate at 2^(8*width) as (positive part) - (negative part).
    pos = b"".join(max(c, 0).to_bytes(width, "little") for c in coeffs)
    neg = b"".join(max(-c, 0).to_bytes(width, "little") for c in coeffs)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _mul_kronecker(a: tuple[int, ...], b: tuple[int, ...]) -> list[int]:
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    # every product coefficient satisfies |c| <= bound < 2^(8*width - 1)
    width = (bound.bit_length() + 2 + 7) // 8
    n = len(a) + len(b) - 1
    half = 1 << (8 * width - 1)
    offset = int.from_bytes(half.to_bytes(width, "little") * n, "little")
    packed = (_pack(a, width) * _pack(b, width) + offset).to_bytes(n * width, "little")
    return [
        int.from_bytes(packed[i * width:(i + 1) * width], "little") - half
        for i in range(n)
    ]


def mul(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact product.

    Small operands use schoolbook convolution.  When both have at least
    :data:`KRONECKER_THRESHOLD` coefficients, the polynomials are packed into
    single integers, multiplied once, and unpacked.
    """
    if a.is_zero or b.is_zero:
        return IntPoly.zero()
    ac, bc = a.coeffs, b.coeffs
    if min(len(ac), len(bc)) >= KRONECKER_THRESHOLD:
        return IntPoly(tuple(_mul_kronecker(ac, bc)))
    return IntPoly(tuple(_mul_schoolbook(ac, bc)))


def div_exact(a: IntPoly, b: IntPoly) -> IntPoly:
    """Return q with ``a == b * q``.

    Raises:
        DivideByZeroError: ``b`` is zero.
        NotDivisibleError: long division leaves a remainder or needs a
            non-integer quotient coefficient.
    """
    if b.is_zero:
        raise DivideByZeroError("division by the zero polynomial")
    if a.is_zero:
        return IntPoly.zero()
    bc = b.coeffs
    db = len(bc) - 1
    da = len(a.coeffs) - 1
    if da < db:
        raise NotDivisibleError(f"degree {da} dividend is not divisible by degree {db} divisor")
    lead = bc[-1]
    rem = list(a.coeffs)
    quot = [0] * (da - db + 1)
    for i in range(da - db, -1, -1):
        top = rem[i + db]
        if top == 0:
            continue
        qi, r = divmod(top, lead)
        if r:
            logger.debug("non-integer quotient coefficient at x^%d (%d / %d)", i, top, lead)
            raise NotDivisibleError(
                f"quotient coefficient of x^{i} is {top}/{lead}, not an integer"
            )
        quot[i] = qi
        rem[i:i + db + 1] = [u - qi * v for u, v in zip(rem[i:i + db + 1], bc)]
    if any(rem[:db]):
        raise NotDivisibleError(f"nonzero remainder {IntPoly(tuple(rem[:db]))}")
    return IntPoly(tuple(quot))


def is_divisible(a: IntPoly, b: IntPoly) -> bool:
    """True when ``b`` divides ``a`` exactly over the integers."""
    try:
        div_exact(a, b)
    except NotDivisibleError:
        return False
    return True


def eval_float(p: IntPoly, x: float) -> float:
    """Horner evaluation in double precision.

    Coefficients beyond the double range switch to exact Horner on the
    integer ratio of x, rounded once at the end; a value outside the double
    range comes back as ±inf.
    """
    try:
        coeffs = [float(c) for c in p.coeffs]
    except OverflowError:
        return _eval_exact(p, x)
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _eval_exact(p: IntPoly, x: float) -> float:
    if math.isnan(x):
        return math.nan
    if math.isinf(x):
        odd = p.degree % 2 == 1
        negative = (p.leading < 0) != (x < 0 and odd)
        return -math.inf if negative else math.inf
    num, den = float(x).as_integer_ratio()
    acc, power = 0, 1
    for c in reversed(p.coeffs):
        acc = acc * num + c * power
        power *= den
    try:
        return acc / (power // den)
    except OverflowError:
        return math.inf if acc > 0 else -math.inf


def substitute_neg(p: IntPoly) -> IntPoly:
    """Return p(-x)."""
    return IntPoly(tuple(-c if k & 1 else c for k, c in enumerate(p.coeffs)))


def laurent_lift(p: IntPoly) -> IntPoly:
    """Return ``x^d * p(x + 1/x)`` where d is the degree of p.

    Expands ``a_k * x^(d-k) * (x^2 + 1)^k`` term by term; the result has
    degree 2d and is palindromic.
    """
    if p.is_zero:
        return p
    d = len(p.coeffs) - 1
    out = [0] * (2 * d + 1)
    row = [1]  # binomial row C(k, .)
    for k, a in enumerate(p.coeffs):
        if k:
            row = [1] + [row[i] + row[i + 1] for i in range(k - 1)] + [1]
        if a:
            base = d - k
            for i, binom in enumerate(row):
                out[base + 2 * i] += a * binom
    return IntPoly(tuple(out))


# ============================================================================
# Text format
# ============================================================================

_TERM_RE = re.compile(r"^(?P<coef>\d+)?(?:(?P<star>\*)?x(?:\^(?P<exp>\d+))?)?$")


def format_poly(p: IntPoly) -> str:
    """Render in descending powers, e.g. ``x^2 - x - 1``."""
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            var = "x" if k == 1 else f"x^{k}"
            body = var if mag == 1 else f"{mag}*{var}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts)


def parse(text: str) -> IntPoly:
    """Parse ``x^8 - 7*x^6 + 1`` style text; whitespace is optional."""
    s = "".join(text.split())
    if not s:
        raise PolynomialParseError("empty polynomial text")
    terms = re.findall(r"[+-]?[^+-]+", s)
    if "".join(terms) != s:
        raise PolynomialParseError(f"dangling sign in {text!r}")
    coeffs: dict[int, int] = {}
    for term in terms:
        sign = -1 if term[0] == "-" else 1
        body = term.lstrip("+-")
        m = _TERM_RE.match(body)
        if m is None or not body:
            raise PolynomialParseError(f"cannot parse term {term!r} in {text!r}")
        has_x = "x" in body
        if m.group("star") and m.group("coef") is None:
            raise PolynomialParseError(f"'*' without coefficient in {term!r}")
        if not has_x:
            power = 0
        else:
            power = int(m.group("exp")) if m.group("exp") is not None else 1
        coef = int(m.group("coef")) if m.group("coef") is not None else 1
        coeffs[power] = coeffs.get(power, 0) + sign * coef
    top = max(coeffs)
    return IntPoly(tuple(coeffs.get(k, 0) for k in range(top + 1)))


ZERO = IntPoly.zero()
ONE = IntPoly.one()
X = IntPoly.x()
