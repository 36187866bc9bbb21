"""Exact rational arithmetic for parameter bookkeeping.

All pole/validity decisions in this package are made on `fractions.Fraction`
values, never on floats.  The helpers here are thin: `Fraction` already
stores reduced form with the sign on the numerator and rejects a zero
denominator.
"""
from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def rat(num: int, den: int = 1) -> Rational:
    """Reduced fraction num/den; raises ZeroDivisionError when den == 0."""
    return Fraction(num, den)


def coprime_parts(a: Rational) -> tuple[int, int]:
    """(n, m) with |a| = n/m in lowest terms. a must be nonzero."""
    if a == 0:
        raise ValueError("coprime_parts requires a nonzero rational")
    return abs(a.numerator), a.denominator


def is_integer(x: Rational) -> bool:
    return x.denominator == 1


def is_nonpositive_integer(x: Rational) -> bool:
    return x.denominator == 1 and x.numerator <= 0


def parse_rational(text: str) -> Rational:
    """Parse "p/q" or "p". Decimal forms are rejected on purpose: parameters
    must never pass through binary floating point."""
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational of the form p or p/q: {text!r}")
    return Fraction(text)


def format_rational(q: Rational) -> str:
    """Canonical string form: "num/den", with "/den" omitted when den == 1."""
    return str(q)
