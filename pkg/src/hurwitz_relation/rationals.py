"""Exact rational parsing and formatting helpers.

Rationals are read as ``"p/q"`` or ``"p"`` with an optional sign.  Decimal
input is rejected on purpose: every quantity in this package is exact.
"""
from __future__ import annotations

import re
from fractions import Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:/(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not an exact rational literal: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(value) -> str:
    """Lowest-terms ``p/q`` string, or ``p`` when the value is integral."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def sgn(value) -> int:
    return (value > 0) - (value < 0)
