"""Exact rational helpers: parsing, directed square-root bounds, safe floats.

All certified quantities in this package are carried as ``fractions.Fraction``.
Square roots are irrational in general, so they are only ever produced as
two-sided rational bounds with a stated precision, or as floats rounded in a
known direction.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import ParseError

#: Fractional bits used for directed square-root bounds. 64 bits keeps the
#: enclosure width below 2^-64 / denominator, far under any tolerance used here.
SQRT_BITS = 64


def parse_rational(text: str) -> Fraction:
    """Parse an exact rational literal such as ``3``, ``-5/7`` or ``0``."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def sqrt_bounds(value: Fraction, bits: int = SQRT_BITS) -> tuple[Fraction, Fraction]:
    """Return rationals (lo, hi) with lo <= sqrt(value) <= hi.

    For perfect squares both bounds equal the exact root; otherwise the
    enclosure width is at most 1 / (denominator * 2**bits).
    """
    value = Fraction(value)
    if value < 0:
        raise ValueError("sqrt of a negative rational")
    p, d = value.numerator, value.denominator
    n = p * d  # sqrt(p/d) = sqrt(p*d) / d
    r = math.isqrt(n)
    if r * r == n:
        exact = Fraction(r, d)
        return exact, exact
    scale = 1 << bits
    r = math.isqrt(n * scale * scale)
    return Fraction(r, d * scale), Fraction(r + 1, d * scale)


def sqrt_lower(value: Fraction, bits: int = SQRT_BITS) -> Fraction:
    return sqrt_bounds(value, bits)[0]


def sqrt_upper(value: Fraction, bits: int = SQRT_BITS) -> Fraction:
    return sqrt_bounds(value, bits)[1]


def sqrt_float(value: Fraction) -> float:
    """Float approximation of sqrt(value), for presentation only."""
    lo, hi = sqrt_bounds(value)
    return float((lo + hi) / 2)


def float_below(value: Fraction) -> float:
    """Largest convenient float known to be <= value."""
    f = float(value)
    if math.isinf(f):
        return math.nextafter(f, -math.inf) if f > 0 else f
    if Fraction(f) > Fraction(value):
        return math.nextafter(f, -math.inf)
    return f


def float_above(value: Fraction) -> float:
    """Smallest convenient float known to be >= value."""
    f = float(value)
    if math.isinf(f):
        return math.nextafter(f, math.inf) if f < 0 else f
    if Fraction(f) < Fraction(value):
        return math.nextafter(f, math.inf)
    return f
