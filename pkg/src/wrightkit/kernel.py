"""Real-valued special-function kernel and summation policy.

Values come from scipy.special; the wrappers add the contracts the rest of
the package relies on:

* ``rgamma`` takes an exact rational and returns exactly 0.0 at the poles of
  the gamma function.  This is the single point where symbolic and numeric
  arithmetic meet: series terms and decomposition terms vanish *identically*
  at those poles, so the decision must never be made by float proximity.
* ``erf`` is odd by construction, ``gamma`` refuses arguments within 1e-12 of
  a nonpositive integer, ``airy_ai``/``bessel_*`` enforce their accuracy
  windows, and no function ever returns NaN from a successful call.

The shared truncation policy for every infinite series in the package: stop
once three consecutive terms satisfy |term| <= tol * (|partial sum| + tiny),
with a hard cap of 100000 terms (override with WRIGHTKIT_MAX_TERMS).
"""
from __future__ import annotations

import math
import os
from fractions import Fraction

import scipy.special as _sp

from .errors import ConvergenceError, PoleError, RangeError, UnsupportedOrder
from .rationals import Rational, is_integer, is_nonpositive_integer

TINY = 1e-300
DEFAULT_MAX_TERMS = 100_000
AIRY_WINDOW = 15.0
_POLE_TOL = 1e-12

__all__ = [
    "comp_sum", "gamma", "rgamma", "erf", "erfc",
    "airy_ai", "airy_ai_prime", "bessel_i", "bessel_k",
    "max_terms", "SeriesAccumulator",
]


def max_terms() -> int:
    """Series term cap; WRIGHTKIT_MAX_TERMS overrides the default 100000."""
    raw = os.environ.get("WRIGHTKIT_MAX_TERMS")
    if raw is None:
        return DEFAULT_MAX_TERMS
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"WRIGHTKIT_MAX_TERMS must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise ValueError("WRIGHTKIT_MAX_TERMS must be positive")
    return value


def comp_sum(terms) -> float:
    """Compensated sum of a sequence of floats (exactly rounded, via fsum)."""
    return math.fsum(terms)


class SeriesAccumulator:
    """Collects series terms and applies the shared truncation policy.

    ``add`` returns True once three consecutive terms are below tolerance.
    The final value is an exactly rounded sum of all collected terms; the
    running plain sum is only used inside the stopping test.
    """

    def __init__(self, tol: float):
        if not tol > 0:
            raise ValueError("tol must be positive")
        self.tol = tol
        self._terms: list[float] = []
        self._running = 0.0
        self._small_streak = 0

    def add(self, term: float) -> bool:
        self._terms.append(term)
        self._running += term
        if abs(term) <= self.tol * (abs(self._running) + TINY):
            self._small_streak += 1
        else:
            self._small_streak = 0
        return self._small_streak >= 3

    @property
    def n_terms(self) -> int:
        return len(self._terms)

    @property
    def value(self) -> float:
        return math.fsum(self._terms)

    @property
    def abs_sum(self) -> float:
        return math.fsum(abs(t) for t in self._terms)


def gamma(x: float) -> float:
    """Gamma function on the reals, excluding nonpositive integers.

    Arguments within 1e-12 of a nonpositive integer raise PoleError rather
    than returning a huge, sign-ambiguous value.
    """
    r = round(x)
    if r <= 0 and abs(x - r) <= _POLE_TOL:
        raise PoleError(f"gamma pole at {x!r}")
    value = float(_sp.gamma(x))
    if not math.isfinite(value):
        raise RangeError(f"gamma({x!r}) overflows binary64")
    return value


def rgamma(x: Rational | int) -> float:
    """1/Gamma(x) for an exact rational x; exactly 0.0 at nonpositive integers.

    Total function: the reciprocal gamma is entire, and the pole decision is
    made in rational arithmetic, not by float proximity.
    """
    q = Fraction(x)
    if is_nonpositive_integer(q):
        return 0.0
    return float(_sp.rgamma(float(q)))


def erf(x: float) -> float:
    """Error function, odd by construction: erf(-x) == -erf(x) exactly."""
    if x < 0:
        return -float(_sp.erf(-x))
    return float(_sp.erf(x))


def erfc(x: float) -> float:
    return float(_sp.erfc(x))


def _airy(x: float) -> tuple[float, float]:
    if abs(x) > AIRY_WINDOW:
        raise RangeError(f"airy accuracy window is |x| <= {AIRY_WINDOW:g}, got {x!r}")
    ai, aip, _, _ = _sp.airy(x)
    return float(ai), float(aip)


def airy_ai(x: float) -> float:
    return _airy(x)[0]


def airy_ai_prime(x: float) -> float:
    return _airy(x)[1]


def bessel_i(nu: Rational, x: float) -> float:
    """Modified Bessel I_nu(x) for x > 0."""
    if not x > 0:
        raise RangeError(f"bessel_i requires x > 0, got {x!r}")
    return float(_sp.iv(float(Fraction(nu)), x))


def bessel_k(nu: Rational, x: float) -> float:
    """Modified Bessel K_nu(x) for x > 0 and non-integer order.

    Integer orders need the limit form K_n = lim K_nu, which is outside this
    kernel's scope; only nu in {1/4, 1/3, 2/3} (and nearby rationals) arise.
    """
    q = Fraction(nu)
    if is_integer(q):
        raise UnsupportedOrder(f"bessel_k order must be non-integer, got {q}")
    if not x > 0:
        raise RangeError(f"bessel_k requires x > 0, got {x!r}")
    return float(_sp.kv(float(q), x))


def _raise_cap(context: str, tol: float) -> None:
    raise ConvergenceError(
        f"{context}: no convergence within {max_terms()} terms at tol={tol:g}"
    )
