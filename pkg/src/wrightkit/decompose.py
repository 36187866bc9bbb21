"""Finite-sum hypergeometric decomposition of the Wright function.

For rational a = n/m (n, m coprime) the defining series splits into m
residue classes k = m p + r, and each class sums to a single generalized
hypergeometric function.  The resulting finite representations are:

a = n/m > 0 (first type), m terms indexed by r:

    W(a, b | z) = sum_r z^r/(r! Gamma(b + a r))
                  * 1F{m+n}(1; b_0..b_{n-1}, c_0..c_{m-1} | z^m/(n^n m^m)),
    b_j = (b + a r + j)/n,   c_j = (r+1+j)/m.

  When b + a r is a nonpositive integer, the leading members of the class
  vanish at gamma poles but the tail does not; the class representative is
  shifted to the first index past the poles (r_eff = r + m*p0 with p0 the
  smallest p making b + a(r + m p) positive) and the same formula applies
  verbatim with r_eff in place of r.

a = -n/m, n < m (second type), m terms:

    W(a, b | z) = sum_r z^r/(r! Gamma(b + a r))
                  * {n+1}F{m}(1, b'_0..b'_{n-1}; c_0..c_{m-1}
                              | (-1)^n z^m n^n / m^m)  [+ P_b(z) when b >= 1],
    b'_j = 1 + r/m - (b + j)/n,   c_j = (r+1+j)/m.

  The reflection step that moves the gamma factors to the numerator makes n^n
  a *multiplier* in the argument.  Any term whose b + a r is an integer is
  omitted: at nonpositive integers the reflected prefactor 1/Gamma(b+ar)
  kills the whole class; at positive integers (possible only when b >= 1)
  the polynomial part P_b carries the class instead.

a = -1: closed power form (1+z)^{b-1}/Gamma(b), carried by a single 1F0
pseudo-term that the evaluator resolves binomially (the 1F0 series itself
only converges for |z| < 1, so it is never summed).

a <= -2 (integer, integer b >= 1): pure polynomial, see ``polyreduce``.

Construction happens entirely in rational arithmetic; floats appear only in
``eval_decomposition``, which makes the JSON export exact and diffable.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, RangeError
from .kernel import comp_sum, rgamma
from .pfq import PFQSpec, cancel_params, pfq
from .polyreduce import QPolynomial, bell_reduce, poly_part
from .rationals import Rational, coprime_parts, is_integer
from .series import WrightKind, WrightSpec, classify

DEFAULT_EVAL_TOL = 1e-12


@dataclass(frozen=True)
class HGTerm:
    """One decomposition summand: z^r/(r! Gamma(gamma_arg)) * pFq(arg(z)),
    where arg(z) = arg_sign * arg_scale * z^arg_zpower."""

    r: int
    gamma_arg: Rational
    pfq: PFQSpec
    arg_sign: int
    arg_scale: Rational
    arg_zpower: int

    @property
    def z_power(self) -> int:
        return self.r

    def argument(self, z: float) -> float:
        return self.arg_sign * float(self.arg_scale) * z**self.arg_zpower

    def is_binomial(self) -> bool:
        """True for the 1F0 power-form pseudo-term (a = -1 only)."""
        return self.pfq.p == self.pfq.q + 1


@dataclass(frozen=True)
class Decomposition:
    spec: WrightSpec
    terms: tuple[HGTerm, ...]
    poly: QPolynomial

    def to_json_dict(self) -> dict:
        return {
            "a": str(self.spec.a),
            "b": str(self.spec.b),
            "kind": self.spec.kind.value,
            "terms": [
                {
                    "r": t.r,
                    "gamma_arg": str(t.gamma_arg),
                    "uppers": [str(u) for u in t.pfq.uppers],
                    "lowers": [str(l) for l in t.pfq.lowers],
                    "arg": {"sign": t.arg_sign, "scale": str(t.arg_scale), "zpow": t.arg_zpower},
                }
                for t in self.terms
            ],
            "poly": self.poly.to_pairs(),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Decomposition":
        spec = classify(Fraction(data["a"]), Fraction(data["b"]))
        terms = tuple(
            HGTerm(
                r=int(td["r"]),
                gamma_arg=Fraction(td["gamma_arg"]),
                pfq=PFQSpec(
                    tuple(Fraction(u) for u in td["uppers"]),
                    tuple(Fraction(l) for l in td["lowers"]),
                ),
                arg_sign=int(td["arg"]["sign"]),
                arg_scale=Fraction(td["arg"]["scale"]),
                arg_zpower=int(td["arg"]["zpow"]),
            )
            for td in data["terms"]
        )
        return cls(spec=spec, terms=terms, poly=QPolynomial.from_pairs(data["poly"]))


def _positive_terms(a: Fraction, b: Fraction) -> list[HGTerm]:
    n, m = coprime_parts(a)
    scale = Fraction(1, n**n * m**m)
    terms = []
    for r in range(m):
        g = b + a * r
        r_eff = r
        if is_integer(g) and g <= 0:
            # shift the class representative past the vanishing members
            first_alive = (-g.numerator) // n + 1
            r_eff = r + m * first_alive
            g = b + a * r_eff
        uppers = [Fraction(1)]
        lowers = [(b + a * r_eff + j) / n for j in range(n)]
        lowers += [Fraction(r_eff + 1 + j, m) for j in range(m)]
        terms.append(
            HGTerm(
                r=r_eff,
                gamma_arg=g,
                pfq=cancel_params(uppers, lowers),
                arg_sign=1,
                arg_scale=scale,
                arg_zpower=m,
            )
        )
    return terms


def _negative_terms(a: Fraction, b: Fraction, reciprocal_scale: bool) -> list[HGTerm]:
    n, m = coprime_parts(a)
    sign = -1 if n % 2 else 1
    scale = Fraction(1, n**n * m**m) if reciprocal_scale else Fraction(n**n, m**m)
    terms = []
    for r in range(m):
        g = b + a * r
        if is_integer(g):
            continue  # pole classes vanish; positive-integer classes live in P_b
        uppers = [Fraction(1)] + [1 + Fraction(r, m) - (b + j) / n for j in range(n)]
        lowers = [Fraction(r + 1 + j, m) for j in range(m)]
        terms.append(
            HGTerm(
                r=r,
                gamma_arg=g,
                pfq=cancel_params(uppers, lowers),
                arg_sign=sign,
                arg_scale=scale,
                arg_zpower=m,
            )
        )
    return terms


@functools.lru_cache(maxsize=4096)
def _decompose_cached(a: Fraction, b: Fraction, reciprocal_scale: bool) -> Decomposition:
    spec = classify(a, b)
    kind = spec.kind
    if kind is WrightKind.UNSUPPORTED:
        raise DomainError(
            f"no representation for a={a}, b={b}: a <= -1 is supported only for "
            "integer a with integer b (or a = -1 with any rational b)"
        )
    if kind is WrightKind.IDENTICALLY_ZERO:
        return Decomposition(spec, (), QPolynomial.zero())
    if kind is WrightKind.NEG_INTEGER_POLYNOMIAL:
        if is_integer(b):
            return Decomposition(spec, (), bell_reduce(a, b))
        # a = -1 with non-integer b: power form (1+z)^(b-1)/Gamma(b) as 1F0
        term = HGTerm(
            r=0,
            gamma_arg=b,
            pfq=PFQSpec((1 - b,), ()),
            arg_sign=-1,
            arg_scale=Fraction(1),
            arg_zpower=1,
        )
        return Decomposition(spec, (term,), QPolynomial.zero())
    if a == 0:
        term = HGTerm(
            r=0,
            gamma_arg=b,
            pfq=PFQSpec((), ()),
            arg_sign=1,
            arg_scale=Fraction(1),
            arg_zpower=1,
        )
        return Decomposition(spec, (term,), QPolynomial.zero())
    if kind is WrightKind.FIRST_TYPE:
        return Decomposition(spec, tuple(_positive_terms(a, b)), QPolynomial.zero())
    poly = poly_part(a, b) if b >= 1 else QPolynomial.zero()
    return Decomposition(spec, tuple(_negative_terms(a, b, reciprocal_scale)), poly)


def decompose(a: Rational, b: Rational) -> Decomposition:
    """Build the finite hypergeometric-plus-polynomial representation of
    W(a, b | .).  Raises DomainError for unsupported (a, b)."""
    return _decompose_cached(Fraction(a), Fraction(b), False)


def _decompose_with_reciprocal_scale(a: Rational, b: Rational) -> Decomposition:
    # Alternative argument normalization 1/(n^n m^m) for a < 0.  Kept only so
    # the verification suite can demonstrate that it disagrees with the
    # defining series for n >= 2; it is not a supported evaluation path.
    return _decompose_cached(Fraction(a), Fraction(b), True)


def _eval_binomial(term: HGTerm, z: float) -> float:
    # 1F0(alpha; x) = (1 - x)^(-alpha) with x = -z, i.e. (1+z)^(b-1)
    alpha = term.pfq.uppers[0]
    exponent = -alpha  # equals b - 1
    base = 1.0 + z
    if exponent == 0:
        return 1.0
    if base > 0:
        return base ** float(exponent)
    if base == 0:
        if exponent > 0:
            return 0.0
        raise RangeError("power form has a pole at z = -1 for b < 1")
    if is_integer(exponent):
        return base ** exponent.numerator
    raise RangeError(
        f"power form (1+z)^({exponent}) needs z > -1 for non-integer exponents, got z={z!r}"
    )


def eval_decomposition(d: Decomposition, z: float, tol: float = DEFAULT_EVAL_TOL) -> float:
    """Numeric value of a decomposition at real z (compensated combination)."""
    parts = []
    for t in d.terms:
        if t.is_binomial():
            hg = _eval_binomial(t, z)
        else:
            hg = pfq(t.pfq, t.argument(z), tol)
        parts.append(z**t.r / math.factorial(t.r) * rgamma(t.gamma_arg) * hg)
    if not d.poly.is_zero:
        parts.append(d.poly(z))
    return comp_sum(parts)


def wright(a: Rational, b: Rational, z: float, tol: float = DEFAULT_EVAL_TOL) -> float:
    """W(a, b | z) through the best available route.

    Identically-zero parameters return 0.0; negative-integer a uses the exact
    polynomial or power form; everything else evaluates the hypergeometric
    decomposition.  Unsupported parameters raise DomainError.
    """
    spec = classify(Fraction(a), Fraction(b))
    if spec.kind is WrightKind.UNSUPPORTED:
        raise DomainError(
            f"W(a,b|z) unsupported for a={a}, b={b} "
            "(a <= -1 non-integer, or integer a < -1 with non-integer b)"
        )
    if spec.kind is WrightKind.IDENTICALLY_ZERO:
        return 0.0
    return eval_decomposition(decompose(a, b), z, tol)
