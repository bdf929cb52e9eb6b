"""Exact rational scalars.

Every scalar in the package is a :class:`fractions.Fraction`. It already keeps
numerator and denominator coprime, the denominator positive and zero as
``0/1``, and raises :class:`ZeroDivisionError` on division by zero. This module
adds the text form used by the CLI and the document format: ``p/q`` or ``p``.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``p/q`` strings; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    # numpy integer scalars and similar
    if hasattr(value, "__index__"):
        return Fraction(value.__index__())
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(value) -> str:
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
