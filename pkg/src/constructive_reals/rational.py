"""Exact rational arithmetic.

Rationals are :class:`fractions.Fraction` values, which are always stored in
lowest terms with a positive denominator. The functions here give the
arithmetic the names used throughout the package and add the dyadic
precision scale ``2**-k``.
"""
from __future__ import annotations

import enum
import re
from fractions import Fraction

from .errors import DivisionByZero, NegativePrecision, ParseError

Rational = Fraction

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*\Z")


class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def rat_add(x: Fraction, y: Fraction) -> Fraction:
    return x + y


def rat_mul(x: Fraction, y: Fraction) -> Fraction:
    return x * y


def rat_neg(x: Fraction) -> Fraction:
    return -x


def rat_abs(x: Fraction) -> Fraction:
    return abs(x)


def rat_div(x: Fraction, y: Fraction) -> Fraction:
    if y == 0:
        raise DivisionByZero(f"{format_rational(x)} / 0")
    return Fraction(x) / y


def rat_cmp(x: Fraction, y: Fraction) -> Ordering:
    # cross-multiplication on canonical forms (denominators positive)
    lhs = x.numerator * y.denominator
    rhs = y.numerator * x.denominator
    if lhs < rhs:
        return Ordering.LESS
    if lhs > rhs:
        return Ordering.GREATER
    return Ordering.EQUAL


def dyadic(k: int) -> Fraction:
    """Return ``2**-k`` exactly."""
    if k < 0:
        raise NegativePrecision(f"precision exponent must be >= 0, got {k}")
    return Fraction(1, 1 << k)


def ceil_log2(v: Fraction) -> int:
    """Smallest integer ``e`` with ``2**e >= v`` (``v > 0``)."""
    if v <= 0:
        raise ValueError("ceil_log2 needs a positive argument")
    v = Fraction(v)
    e = v.numerator.bit_length() - v.denominator.bit_length()
    # e is within one of the answer; settle it exactly
    while _pow2(e) < v:
        e += 1
    while _pow2(e - 1) >= v:
        e -= 1
    return e


def precision_for(eps: Fraction) -> int:
    """Smallest ``k >= 0`` with ``2**-k <= eps``.

    Converts a rational tolerance to the dyadic exponent used everywhere
    else. Tolerances of at least 1 map to ``k = 0``.
    """
    if eps <= 0:
        raise ValueError("tolerance must be positive")
    return max(0, -_floor_log2(Fraction(eps)))


def _floor_log2(v: Fraction) -> int:
    e = ceil_log2(v)
    return e if _pow2(e) == v else e - 1


def _pow2(e: int) -> Fraction:
    return Fraction(1 << e) if e >= 0 else Fraction(1, 1 << -e)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (sign allowed on ``p`` only)."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ParseError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
