"""Structural calculus on Wright parameter pairs.

Differentiation and integration act on (a, b) as exact parameter shifts:

    d/dz W(a, b | z) = W(a, a + b | z)
    W(a, b | z) = integral_0^z W(a, a + b | x) dx + 1/Gamma(b)

No numerics happen here; the finite-difference and quadrature checks of
these identities live in the verification harness.
"""
from __future__ import annotations

from .series import WrightSpec, classify


def d_dz(spec: WrightSpec) -> WrightSpec:
    """Parameter pair of the derivative: b shifts to a + b."""
    return classify(spec.a, spec.a + spec.b)


def antiderivative(spec: WrightSpec) -> WrightSpec:
    """Parameter pair of the antiderivative: b shifts to b - a."""
    return classify(spec.a, spec.b - spec.a)
