"""Closed-form reference identities, used as independent verification oracles.

Each case records a (a, b) parameter pair, a mapping from the case variable
z to the Wright argument, a validity domain, and a closed-form evaluator
built only from the special-function kernel (never from the series or the
hypergeometric decomposition).  The catalog:

    ERFC   W(-1/2, 1   |  z) = erfc(-z/2)                                z real
    GAUSS  W(-1/2, 0   |  z) = d/dz e^{-z^2/4}/sqrt(pi)                  z real
    AIRY   W(-1/3, 2/3 | -z) = 3^{2/3} Ai(z 3^{-1/3})                    z > 0
    AIRY-D W(-1/3, 1/3 | -z) = -3^{1/3} Ai'(z 3^{-1/3})                  z > 0
    K14    W(-1/2, 3/4 | -z) = sqrt(z) e^{-z^2/8} K_{1/4}(z^2/8)/(sqrt(2) pi),  z > 0
    K13    W(-2/3, 2/3 |  z) = z e^{2z^3/27} K_{1/3}(2z^3/27)/(sqrt(3) pi),     z > 0
    M23    W(-2/3, 1/3 |  z) = -e^{2z^3/27}(3 Ai'(z^2/3^{4/3})
                                 + 3^{1/3} z Ai(z^2/3^{4/3}))/3^{2/3},   z > 0
    POW    W(-1, b | z) = (1+z)^{b-1}/Gamma(b)                           z > -1
    ERF72  W(-1/2, 7/2 | z) = (z^4/60 + 3z^2/10 + 8/15) e^{-z^2/4}/sqrt(pi)
                               + (1 + erf(z/2)) (z^5/120 + z^3/6 + z/2)  z real

Note on K14: a single K_{1/4} cannot represent any a = -1/4 case (the
Maclaurin classes and the decay exponent do not match); the identity above
holds for a = -1/2, where it is the collapse of a Whittaker-type form, and
is verified against the defining series to machine precision.

All z > 0 domains keep the Bessel/Airy arguments positive; no analytic
continuation of the closed forms is attempted.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import kernel
from .decompose import wright
from .errors import RangeError, UsageError
from .rationals import Rational

SQRT_PI = math.sqrt(math.pi)


@dataclass(frozen=True)
class ReferenceCase:
    case_id: str
    a: Rational
    b: Rational
    arg_factor: int            # wright argument is arg_factor * z
    domain: tuple[float, float]  # open/closed sampling interval for z
    eval: Callable[[float], float]
    description: str

    def in_domain(self, z: float) -> bool:
        lo, hi = self.domain
        return lo < z <= hi if lo == 0.0 else lo <= z <= hi

    def wright_value(self, z: float, tol: float = 1e-12) -> float:
        return wright(self.a, self.b, self.arg_factor * z, tol)

    def sample_points(self, count: int = 20) -> list[float]:
        lo, hi = self.domain
        if lo == 0.0:
            lo = hi / count  # open at 0
        step = (hi - lo) / (count - 1)
        return [lo + i * step for i in range(count)]


def _erfc_case(z: float) -> float:
    return kernel.erfc(-z / 2)


def _gauss_case(z: float) -> float:
    return -(z / 2) * math.exp(-z * z / 4) / SQRT_PI


def _airy_case(z: float) -> float:
    return 3 ** (2 / 3) * kernel.airy_ai(z * 3 ** (-1 / 3))


def _airy_d_case(z: float) -> float:
    return -(3 ** (1 / 3)) * kernel.airy_ai_prime(z * 3 ** (-1 / 3))


def _k14_case(z: float) -> float:
    w = z * z / 8
    return math.sqrt(z) * math.exp(-w) * kernel.bessel_k(Fraction(1, 4), w) / (math.sqrt(2) * math.pi)


def _k13_case(z: float) -> float:
    w = 2 * z**3 / 27
    return z * math.exp(w) * kernel.bessel_k(Fraction(1, 3), w) / (math.sqrt(3) * math.pi)


def _m23_case(z: float) -> float:
    x = z * z / 3 ** (4 / 3)
    ai = kernel.airy_ai(x)
    aip = kernel.airy_ai_prime(x)
    return -math.exp(2 * z**3 / 27) * (3 * aip + 3 ** (1 / 3) * z * ai) / 3 ** (2 / 3)


def _pow_case(z: float, b: Rational) -> float:
    if z <= -1:
        raise RangeError(f"power form needs z > -1, got {z!r}")
    return (1 + z) ** (float(b) - 1) * kernel.rgamma(b)


def _erf72_case(z: float) -> float:
    gauss = (z**4 / 60 + 3 * z**2 / 10 + 8 / 15) * math.exp(-z * z / 4) / SQRT_PI
    poly = z**5 / 120 + z**3 / 6 + z / 2
    return gauss + (1 + kernel.erf(z / 2)) * poly


_POW_DEFAULT_B = Fraction(3)

CASES: dict[str, ReferenceCase] = {
    c.case_id: c
    for c in [
        ReferenceCase("ERFC", Fraction(-1, 2), Fraction(1), 1, (-4.0, 4.0),
                      _erfc_case, "complementary error function"),
        ReferenceCase("GAUSS", Fraction(-1, 2), Fraction(0), 1, (-4.0, 4.0),
                      _gauss_case, "first derivative of the Gaussian kernel"),
        ReferenceCase("AIRY", Fraction(-1, 3), Fraction(2, 3), -1, (0.0, 5.0),
                      _airy_case, "Airy Ai"),
        ReferenceCase("AIRY-D", Fraction(-1, 3), Fraction(1, 3), -1, (0.0, 5.0),
                      _airy_d_case, "Airy Ai derivative"),
        ReferenceCase("K14", Fraction(-1, 2), Fraction(3, 4), -1, (0.0, 4.0),
                      _k14_case, "exponentially weighted Bessel K of order 1/4"),
        ReferenceCase("K13", Fraction(-2, 3), Fraction(2, 3), 1, (0.0, 2.5),
                      _k13_case, "exponentially weighted Bessel K of order 1/3"),
        ReferenceCase("M23", Fraction(-2, 3), Fraction(1, 3), 1, (0.0, 2.5),
                      _m23_case, "Airy combination with exponential weight"),
        ReferenceCase("POW", Fraction(-1), _POW_DEFAULT_B, 1, (-0.9, 4.0),
                      lambda z: _pow_case(z, _POW_DEFAULT_B), "power form (1+z)^(b-1)/Gamma(b)"),
        ReferenceCase("ERF72", Fraction(-1, 2), Fraction(7, 2), 1, (-4.0, 4.0),
                      _erf72_case, "erf antiderivative family, b = 7/2"),
    ]
}


def reference_eval(case_id: str, z: float, b: Rational | None = None) -> float:
    """Closed-form value of a catalog case at z (in the case variable, not
    necessarily the Wright argument).  POW accepts an optional b; all other
    cases have fixed parameters."""
    try:
        case = CASES[case_id]
    except KeyError:
        raise UsageError(f"unknown reference case {case_id!r}; known: {sorted(CASES)}") from None
    if not case.in_domain(z):
        raise RangeError(f"{case_id}: z={z!r} outside domain {case.domain}")
    if b is not None:
        if case_id != "POW":
            raise UsageError(f"{case_id} does not take a b parameter")
        return _pow_case(z, Fraction(b))
    return case.eval(z)


def mainardi(a: Rational, z: float, tol: float = 1e-12) -> float:
    """Mainardi function M_a(z) = W(-a, 1 - a | -z)."""
    a = Fraction(a)
    return wright(-a, 1 - a, -z, tol)
