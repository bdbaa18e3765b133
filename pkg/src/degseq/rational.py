"""Exact rational helpers on top of ``fractions.Fraction``.

Every verdict path compares Fractions (cross-multiplication on Python ints),
never floats.
"""

import math
from fractions import Fraction
from numbers import Rational


def as_fraction(value: Rational | int) -> Fraction:
    """Coerce an int or rational to a Fraction, refusing floats."""
    if isinstance(value, bool) or not isinstance(value, Rational):
        raise TypeError(f"Expected an exact rational, got {type(value).__name__}")
    return Fraction(value)


def fractional_part(value: Rational | int) -> Fraction:
    """{x} = x - floor(x), always in [0, 1)."""
    x = as_fraction(value)
    return x - math.floor(x)


def format_fraction(value: Rational | int) -> str:
    """Serialize as "p/q" (integers too, e.g. "5/1")."""
    x = as_fraction(value)
    return f"{x.numerator}/{x.denominator}"
