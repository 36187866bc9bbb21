"""Generalized hypergeometric series pFq with rational parameters.

    pFq(a_0..a_{p-1}; b_0..b_{q-1} | x) = sum_r x^r/r! * prod (a_j)_r / prod (b_j)_r

Normalization pFq(.|0) = 1.  Equal parameters shared between the upper and
lower lists cancel (multiset cancellation, performed by ``cancel_params``
before evaluation, in exact rational arithmetic).  Only p <= q is accepted:
those series are entire, and the forward term recurrence

    t_{r+1} = t_r * x * prod(a_j + r) / (prod(b_j + r) * (r + 1))

converges for every finite argument.  No analytic continuation and no
transformation formulas are applied.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ParameterError
from .kernel import SeriesAccumulator, _raise_cap, max_terms
from .rationals import Rational, is_nonpositive_integer


@dataclass(frozen=True)
class PFQSpec:
    """Parameter lists of a pFq series (upper/numerator, lower/denominator)."""

    uppers: tuple[Rational, ...]
    lowers: tuple[Rational, ...]

    @property
    def p(self) -> int:
        return len(self.uppers)

    @property
    def q(self) -> int:
        return len(self.lowers)

    def __str__(self) -> str:
        up = ", ".join(str(u) for u in self.uppers) or "-"
        lo = ", ".join(str(l) for l in self.lowers) or "-"
        return f"{self.p}F{self.q}[{up}; {lo}]"


def cancel_params(uppers: Iterable[Rational], lowers: Iterable[Rational]) -> PFQSpec:
    """Multiset difference of the two lists: each shared value is removed
    once from both sides.  This is where the bookkeeping "1" upper parameter
    produced by the decomposition disappears whenever a matching lower
    parameter exists."""
    up = [Fraction(u) for u in uppers]
    lo = [Fraction(l) for l in lowers]
    for u in list(up):
        if u in lo:
            up.remove(u)
            lo.remove(u)
    return PFQSpec(tuple(up), tuple(lo))


def _validate(spec: PFQSpec) -> None:
    for b in spec.lowers:
        if is_nonpositive_integer(b):
            raise ParameterError(
                f"lower parameter {b} is a nonpositive integer (uncancelled pole)"
            )
    if spec.p > spec.q:
        raise ParameterError(
            f"p={spec.p} > q={spec.q}: series is not entire; only p <= q is supported"
        )


def pfq(spec: PFQSpec, x: float, tol: float = 1e-14) -> float:
    """Sum the series by forward recurrence on the term ratio.

    Parameters stay rational until this point; they are converted to binary64
    once, before the recurrence.  An upper parameter that is a nonpositive
    integer truncates the series to a polynomial (the recurrence hits an
    exact zero and stops).
    """
    _validate(spec)
    up = [float(u) for u in spec.uppers]
    lo = [float(b) for b in spec.lowers]
    acc = SeriesAccumulator(tol)
    t = 1.0
    cap = max_terms()
    for r in range(cap):
        if acc.add(t):
            return acc.value
        num = x
        for a in up:
            num *= a + r
        if num == 0.0:
            return acc.value  # terminating series: every later term is zero
        den = r + 1.0
        for b in lo:
            den *= b + r
        t = t * num / den
    _raise_cap(f"pfq {spec} at x={x!r}", tol)
    raise AssertionError("unreachable")
