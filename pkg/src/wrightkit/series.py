"""Parameter classification and the defining-series oracle.

    W(a, b | z) = sum_{k>=0} z^k / (k! * Gamma(a k + b))

The series converges for all z when a > -1.  With the reciprocal gamma
interpreted as an entire function (exactly zero at the poles), the domain
extends to negative integer a:

* a = -n, b a positive integer  -> the sum is finite (a polynomial in z);
* a = -n or a = 0, b a nonpositive integer -> every term vanishes;
* a = -1 with non-integer b     -> radius of convergence 1.

Everything else with a <= -1 is unsupported: the defining series diverges
for every nonzero z and no representation implemented here covers it.

``wright_series`` is the ground-truth oracle of the package.  Every other
evaluation route is tested against it on its region of good conditioning;
``SeriesResult.condition`` (sum of |terms| over |sum|) tells callers when
cancellation makes the float64 sum untrustworthy.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConvergenceError, DomainError
from .kernel import SeriesAccumulator, max_terms, rgamma
from .rationals import Rational, is_integer, is_nonpositive_integer

DEFAULT_SERIES_TOL = 1e-14
_OVERFLOW_GUARD = 1e290


class WrightKind(enum.Enum):
    FIRST_TYPE = "FirstType"
    SECOND_TYPE = "SecondType"
    NEG_INTEGER_POLYNOMIAL = "NegIntegerPolynomial"
    IDENTICALLY_ZERO = "IdenticallyZero"
    UNSUPPORTED = "Unsupported"


@dataclass(frozen=True)
class WrightSpec:
    """A classified parameter pair.  ``kind`` is total and deterministic."""

    a: Rational
    b: Rational
    kind: WrightKind


def classify(a: Rational, b: Rational) -> WrightSpec:
    """Classify (a, b) into the evaluation-strategy taxonomy.

    a >= 0 is first type (except a = 0 with nonpositive-integer b, which is
    identically zero); -1 < a < 0 is second type; negative integer a with
    nonpositive-integer b vanishes identically, with positive-integer b it
    reduces to a polynomial, and a = -1 additionally admits any rational b
    through the closed power form (1+z)^{b-1}/Gamma(b).  Non-integer a <= -1,
    and integer a < -1 with non-integer b, are unsupported.
    """
    a, b = Fraction(a), Fraction(b)
    if a >= 0:
        if a == 0 and is_nonpositive_integer(b):
            kind = WrightKind.IDENTICALLY_ZERO
        else:
            kind = WrightKind.FIRST_TYPE
    elif a > -1:
        kind = WrightKind.SECOND_TYPE
    elif is_integer(a):
        if is_nonpositive_integer(b):
            kind = WrightKind.IDENTICALLY_ZERO
        elif is_integer(b) or a == -1:
            kind = WrightKind.NEG_INTEGER_POLYNOMIAL
        else:
            kind = WrightKind.UNSUPPORTED
    else:
        kind = WrightKind.UNSUPPORTED
    return WrightSpec(a, b, kind)


@dataclass(frozen=True)
class SeriesResult:
    value: float
    condition: float
    terms_used: int


def wright_series_full(
    a: Rational, b: Rational, z: float, tol: float = DEFAULT_SERIES_TOL
) -> SeriesResult:
    """Sum the defining series, reporting the cancellation condition number.

    Each term is z^k/k! times rgamma(a k + b) evaluated on the exact rational
    a k + b, so terms at gamma poles contribute an exact zero.  The power
    factor is accumulated multiplicatively; a term recurrence through gamma
    ratios is deliberately avoided (unstable near the poles).
    """
    a, b = Fraction(a), Fraction(b)
    spec = classify(a, b)
    if spec.kind is WrightKind.UNSUPPORTED:
        raise DomainError(
            f"series undefined for a={a}, b={b}: a <= -1 outside the polynomial domain"
        )
    acc = SeriesAccumulator(tol)
    pk = 1.0  # z^k / k!
    cap = max_terms()
    converged = False
    for k in range(cap):
        term = pk * rgamma(a * k + b)
        if acc.add(term):
            converged = True
            break
        pk *= z / (k + 1)
        if abs(pk) > _OVERFLOW_GUARD:
            raise ConvergenceError(
                f"series power factor overflows binary64 at k={k + 1} (|z| too large)"
            )
    if not converged:
        raise ConvergenceError(
            f"series for a={a}, b={b}, z={z!r}: no convergence within {cap} terms"
        )
    value = acc.value
    condition = acc.abs_sum / max(abs(value), 1e-300)
    return SeriesResult(value=value, condition=condition, terms_used=acc.n_terms)


def wright_series(a: Rational, b: Rational, z: float, tol: float = DEFAULT_SERIES_TOL) -> float:
    """Defining-series value (see ``wright_series_full`` for the condition)."""
    return wright_series_full(a, b, z, tol).value
