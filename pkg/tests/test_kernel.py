"""Kernel checks against independent oracles (quadrature and defining series),
frozen before the main build, plus the gamma functional equations."""
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from wrightkit import (
    ConvergenceError,
    PoleError,
    RangeError,
    UnsupportedOrder,
    airy_ai,
    airy_ai_prime,
    bessel_i,
    bessel_k,
    comp_sum,
    erf,
    erfc,
    gamma,
    rgamma,
)
from wrightkit.kernel import SeriesAccumulator


# --- independent oracles -------------------------------------------------

def erf_quadrature_oracle(x: float) -> float:
    """(2/sqrt(pi)) integral_0^x exp(-t^2) dt by 60-point Gauss-Legendre."""
    nodes, weights = np.polynomial.legendre.leggauss(60)
    t = 0.5 * x * (nodes + 1)
    return float(np.sum(weights * 0.5 * x * 2 / np.sqrt(np.pi) * np.exp(-(t**2))))


def airy_maclaurin_oracle(x: float) -> float:
    """Ai from its Maclaurin series, summed to 1e-14 term tolerance."""
    c1 = 3 ** (-2 / 3) * rgamma(Fraction(2, 3))
    c2 = 3 ** (-1 / 3) * rgamma(Fraction(1, 3))
    s1, s2 = 0.0, 0.0
    t1, t2 = 1.0, x
    for k in range(80):
        s1 += t1
        s2 += t2
        t1 *= 3 * (k + 1 / 3) * x**3 / ((3 * k + 1) * (3 * k + 2) * (3 * k + 3))
        t2 *= 3 * (k + 2 / 3) * x**3 / ((3 * k + 2) * (3 * k + 3) * (3 * k + 4))
        if abs(t1) < 1e-14 and abs(t2) < 1e-14:
            break
    return c1 * s1 - c2 * s2


def bessel_i_series_oracle(nu: Fraction, x: float) -> float:
    fnu = float(nu)
    term = (x / 2) ** fnu * rgamma(nu + 1)
    total = 0.0
    for k in range(300):
        total += term
        term *= (x / 2) ** 2 / ((k + 1) * (k + 1 + fnu))
        if abs(term) < 1e-14 * abs(total):
            break
    return total


def bessel_k_from_i_oracle(nu: Fraction, x: float) -> float:
    return (
        math.pi
        * (bessel_i_series_oracle(-nu, x) - bessel_i_series_oracle(nu, x))
        / (2 * math.sin(math.pi * float(nu)))
    )


# --- gamma ----------------------------------------------------------------

def test_gamma_examples():
    assert gamma(1.0) == 1.0
    assert math.isclose(gamma(0.5), 1.7724538509055160, rel_tol=1e-14)
    assert math.isclose(gamma(-0.5), -3.5449077018110320, rel_tol=1e-14)


@pytest.mark.parametrize("x", [0.0, -1.0, -7.0, -3.0 + 1e-13])
def test_gamma_pole_error(x):
    with pytest.raises(PoleError):
        gamma(x)


@given(st.floats(min_value=0.1, max_value=20.0, allow_nan=False))
def test_gamma_recurrence(x):
    assert math.isclose(gamma(x + 1), x * gamma(x), rel_tol=1e-12)


@pytest.mark.parametrize("a", [2, 3, 4])
@pytest.mark.parametrize("b", [Fraction(1, 3), Fraction(5, 4), Fraction(7, 2)])
@pytest.mark.parametrize("j", [1, 3, 8])
def test_gamma_multiplication(a, b, j):
    # Gamma(b + a j) = Gamma(b) a^{a j} prod_{k<a} ((b+k)/a)_j,
    # rising factorials computed exactly, then converted
    poch = Fraction(1)
    for k in range(a):
        x0 = (b + k) / a
        for i in range(j):
            poch *= x0 + i
    lhs = gamma(float(b) + a * j)
    rhs = gamma(float(b)) * a ** (a * j) * float(poch)
    assert math.isclose(lhs, rhs, rel_tol=1e-10)


# --- reciprocal gamma -----------------------------------------------------

def test_rgamma_exact_zeros():
    assert rgamma(Fraction(-2)) == 0.0
    assert rgamma(Fraction(0)) == 0.0
    assert rgamma(-17) == 0.0


def test_rgamma_values():
    assert rgamma(Fraction(1)) == 1.0
    assert math.isclose(rgamma(Fraction(1, 2)), 0.5641895835477563, rel_tol=1e-14)


@given(st.floats(min_value=0.1, max_value=20.0, allow_nan=False))
def test_rgamma_times_gamma(x):
    q = Fraction(x).limit_denominator(1 << 30)
    assert math.isclose(rgamma(q) * gamma(float(q)), 1.0, rel_tol=1e-12)


# --- erf / erfc -----------------------------------------------------------

def test_erf_trivia():
    assert erf(0.0) == 0.0
    assert erfc(0.0) == 1.0


def test_erf_against_quadrature_oracle():
    # frozen from the pre-build oracle run: 0.8427007929497151 (quadrature)
    oracle = erf_quadrature_oracle(1.0)
    assert abs(oracle - 0.8427007929497151) < 5e-15
    assert abs(erf(1.0) - oracle) <= 1e-14
    assert abs(erf(1.0) - 0.8427007929497149) < 5e-16


@given(st.floats(min_value=-6, max_value=6, allow_nan=False))
def test_erf_odd_exactly(x):
    assert erf(-x) == -erf(x)


@given(st.floats(min_value=-6, max_value=6, allow_nan=False))
def test_erf_erfc_complement(x):
    assert abs(erf(x) + erfc(x) - 1.0) <= 1e-14


# --- Airy -----------------------------------------------------------------

def test_airy_initial_values():
    assert math.isclose(airy_ai(0.0), 0.3550280538878172, rel_tol=1e-14)
    assert math.isclose(airy_ai_prime(0.0), -0.2588194037928068, rel_tol=1e-14)


def test_airy_against_maclaurin_oracle():
    # frozen: Ai(1) = 0.13529241631288147 from the series oracle
    oracle = airy_maclaurin_oracle(1.0)
    assert abs(oracle - 0.13529241631288147) < 1e-15
    assert math.isclose(airy_ai(1.0), oracle, rel_tol=1e-12)
    for x in (-2.0, -0.7, 0.4, 2.5):
        assert math.isclose(airy_ai(x), airy_maclaurin_oracle(x), rel_tol=1e-10)


def test_airy_window():
    with pytest.raises(RangeError):
        airy_ai(15.5)
    with pytest.raises(RangeError):
        airy_ai_prime(-16.0)


@pytest.mark.parametrize("x", [-2.0, -1.0, -0.3, 0.0, 0.5, 1.0, 2.0])
def test_airy_differential_equation(x):
    h = 1e-4
    second = (airy_ai(x + h) - 2 * airy_ai(x) + airy_ai(x - h)) / h**2
    assert abs(second - x * airy_ai(x)) < 1e-6


# --- Bessel ---------------------------------------------------------------

def test_bessel_half_integer_closed_forms():
    assert math.isclose(bessel_i(Fraction(1, 2), 1.0),
                        math.sqrt(2 / math.pi) * math.sinh(1.0), rel_tol=1e-13)
    assert math.isclose(bessel_k(Fraction(1, 2), 1.0),
                        math.sqrt(math.pi / 2) * math.exp(-1.0), rel_tol=1e-13)
    assert math.isclose(bessel_k(Fraction(1, 2), 1.0), 0.4610685044478946, rel_tol=1e-13)


def test_bessel_k_against_i_series_oracle():
    # frozen: K_{1/3}(2) = 0.11654496129616242 from the I-difference oracle
    oracle = bessel_k_from_i_oracle(Fraction(1, 3), 2.0)
    assert abs(oracle - 0.11654496129616242) < 1e-15
    assert math.isclose(bessel_k(Fraction(1, 3), 2.0), oracle, rel_tol=1e-12)


@pytest.mark.parametrize("nu", [Fraction(1, 4), Fraction(1, 3), Fraction(2, 3)])
@pytest.mark.parametrize("x", [0.1, 1.0, 5.0])
def test_bessel_orders_used_by_reference_forms(nu, x):
    assert math.isclose(bessel_k(nu, x), bessel_k_from_i_oracle(nu, x), rel_tol=1e-10)
    assert math.isclose(bessel_i(nu, x), bessel_i_series_oracle(nu, x), rel_tol=1e-10)


def test_bessel_errors():
    with pytest.raises(UnsupportedOrder):
        bessel_k(Fraction(2), 1.0)
    with pytest.raises(RangeError):
        bessel_k(Fraction(1, 3), 0.0)
    with pytest.raises(RangeError):
        bessel_i(Fraction(1, 3), -1.0)


# --- summation ------------------------------------------------------------

def test_comp_sum_cancellation():
    assert comp_sum([1e16, 1.0, -1e16]) == 1.0


def test_comp_sum_empty():
    assert comp_sum([]) == 0.0


def test_comp_sum_tenths():
    assert abs(comp_sum([0.1] * 10) - 1.0) <= 2.3e-16


def test_accumulator_stops_after_three_small_terms():
    acc = SeriesAccumulator(1e-14)
    assert not acc.add(1.0)
    assert not acc.add(0.0)
    assert not acc.add(0.0)
    assert acc.add(0.0)
    assert acc.value == 1.0


def test_max_terms_env_override(monkeypatch):
    from wrightkit.kernel import max_terms

    monkeypatch.setenv("WRIGHTKIT_MAX_TERMS", "123")
    assert max_terms() == 123
    monkeypatch.setenv("WRIGHTKIT_MAX_TERMS", "0")
    with pytest.raises(ValueError):
        max_terms()
