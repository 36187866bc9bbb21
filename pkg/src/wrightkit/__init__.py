"""wrightkit: the Wright function W(a,b|z) for rational parameters.

Three mutually checking evaluation routes:

* ``wright_series`` -- direct summation of the defining series (the oracle);
* ``decompose`` / ``eval_decomposition`` / ``wright`` -- finite sums of
  generalized hypergeometric functions plus an exact polynomial part;
* ``bell_reduce`` / ``poly_part`` -- exact polynomial reduction for negative
  integer a and the polynomial correction for b >= 1.

The ``reference`` catalog ships closed-form identities (erfc, Airy, Bessel K,
Gaussian derivatives, power form) as independent oracles, and ``run_suite``
batch-compares all routes over fixed grids.
"""
from .calculus import antiderivative, d_dz
from .decompose import (
    Decomposition,
    HGTerm,
    decompose,
    eval_decomposition,
    wright,
)
from .errors import (
    ConvergenceError,
    DomainError,
    ParameterError,
    PoleError,
    RangeError,
    UnsupportedOrder,
    UsageError,
    WrightkitError,
)
from .kernel import (
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
from .pfq import PFQSpec, cancel_params, pfq
from .polyreduce import QPolynomial, bell_reduce, poly_part, poly_part_closed
from .rationals import (
    Rational,
    coprime_parts,
    format_rational,
    is_integer,
    is_nonpositive_integer,
    parse_rational,
    rat,
)
from .reference import CASES, ReferenceCase, mainardi, reference_eval
from .series import (
    SeriesResult,
    WrightKind,
    WrightSpec,
    classify,
    wright_series,
    wright_series_full,
)
from .verify import VerifyCase, VerifyReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "Rational", "rat", "coprime_parts", "is_integer", "is_nonpositive_integer",
    "parse_rational", "format_rational",
    "gamma", "rgamma", "erf", "erfc", "airy_ai", "airy_ai_prime",
    "bessel_i", "bessel_k", "comp_sum",
    "WrightKind", "WrightSpec", "classify", "SeriesResult",
    "wright_series", "wright_series_full",
    "PFQSpec", "cancel_params", "pfq",
    "QPolynomial", "bell_reduce", "poly_part", "poly_part_closed",
    "HGTerm", "Decomposition", "decompose", "eval_decomposition", "wright",
    "d_dz", "antiderivative",
    "ReferenceCase", "CASES", "reference_eval", "mainardi",
    "VerifyCase", "VerifyReport", "run_suite",
    "WrightkitError", "DomainError", "PoleError", "RangeError",
    "ConvergenceError", "ParameterError", "UnsupportedOrder", "UsageError",
]
