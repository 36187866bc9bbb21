"""Exact polynomial routes.

Two independent constructions live here:

* ``bell_reduce`` -- for a = -n (negative integer) and b = m (positive
  integer) the function W(-n, m | z) is the residue of exp(g(xi))/xi^m at
  the origin with g(xi) = xi + z*xi^n, i.e. the complete exponential Bell
  polynomial B_{m-1}(g'(0), ..., g^{(m-1)}(0)) divided by (m-1)!.  Only two
  derivatives of g survive at 0 (g'(0) = 1, g^{(n)}(0) = n! z; for n = 1
  they merge into g'(0) = 1 + z), so the Bell recurrence

      B_{k+1} = sum_{i=0..k} C(k, i) * B_{k-i} * g^{(i+1)}(0)

  runs entirely over polynomials in z with rational coefficients.

* ``poly_part`` / ``poly_part_closed`` -- the finite polynomial correction
  attached to the hypergeometric decomposition when a = -n/m < 0 and b >= 1.
  The recursion form integrates downward in steps of |a|:

      P_b(z) = integral_0^z P_{b-|a|}(x) dx + c_{b-1},
      c_{b-1} = 1/(b-1)!  if b is a positive integer, else 0,
      P_b = 0 for b <= 0,  P_1 = 1.

  The closed form sums monomials z^e/(e! f!) over integer j with
  e = (j-b+1)/(1-|a|) and f = (b-1-|a|j)/(1-|a|) both nonnegative integers
  (note e + f = j, so j is automatically integral).  Both must agree
  coefficient-by-coefficient; the verify suite checks that exactly.
"""
from __future__ import annotations

import math
from fractions import Fraction

from .errors import DomainError
from .rationals import Rational, is_integer

_ZERO = Fraction(0)


class QPolynomial:
    """Sparse polynomial over the rationals with nonnegative integer exponents.

    Immutable by convention: no method mutates ``self``.  Zero coefficients
    are never stored, so equality is plain dict equality.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: dict[int, Rational] | None = None):
        clean: dict[int, Fraction] = {}
        for e, c in (coeffs or {}).items():
            if e < 0 or not isinstance(e, int):
                raise ValueError(f"exponent must be a nonnegative integer, got {e!r}")
            c = Fraction(c)
            if c != 0:
                clean[e] = c
        self._coeffs = clean

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls()

    @classmethod
    def constant(cls, c: Rational) -> "QPolynomial":
        return cls({0: Fraction(c)})

    def coefficient(self, exponent: int) -> Fraction:
        return self._coeffs.get(exponent, _ZERO)

    def items(self):
        """(exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._coeffs.items())

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> int:
        return max(self._coeffs, default=0)

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, _ZERO) + c
        return QPolynomial(out)

    def scale(self, factor: Rational) -> "QPolynomial":
        f = Fraction(factor)
        return QPolynomial({e: c * f for e, c in self._coeffs.items()})

    def mul(self, other: "QPolynomial") -> "QPolynomial":
        out: dict[int, Fraction] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, _ZERO) + c1 * c2
        return QPolynomial(out)

    def integrate(self) -> "QPolynomial":
        """Antiderivative with zero constant term (exact)."""
        return QPolynomial({e + 1: c / (e + 1) for e, c in self._coeffs.items()})

    def derivative(self) -> "QPolynomial":
        return QPolynomial({e - 1: c * e for e, c in self._coeffs.items() if e >= 1})

    def __call__(self, z):
        """Evaluate; exact when z is a Fraction/int, sparse Horner for floats."""
        if isinstance(z, (Fraction, int)):
            zq = Fraction(z)
            return sum((c * zq**e for e, c in self._coeffs.items()), _ZERO)
        acc = 0.0
        prev_e = None
        for e, c in sorted(self._coeffs.items(), reverse=True):
            if prev_e is None:
                acc = float(c)
            else:
                acc = acc * z ** (prev_e - e) + float(c)
            prev_e = e
        if prev_e is None:
            return 0.0
        return acc * z**prev_e

    def __eq__(self, other) -> bool:
        return isinstance(other, QPolynomial) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._coeffs.items())))

    def __repr__(self) -> str:
        return f"QPolynomial({self.render()!r})"

    def render(self) -> str:
        """Canonical string "c0 + c1*z + c2*z^2" with rational coefficients.

        Monomial forms: "p/q" for the constant, "z^e" when the coefficient
        is 1, "z^e/q" when it is 1/q, "p*z^e/q" in general.
        """
        if self.is_zero:
            return "0"
        parts = []
        for e, c in self.items():
            p, q = c.numerator, c.denominator
            if e == 0:
                body = str(c)
            else:
                zpow = "z" if e == 1 else f"z^{e}"
                body = zpow if abs(p) == 1 else f"{abs(p)}*{zpow}"
                if q != 1:
                    body += f"/{q}"
                if p < 0:
                    body = "-" + body
            parts.append(body)
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def to_pairs(self) -> list[dict]:
        """JSON form: [{"exp": e, "coeff": "p/q"}, ...], ascending exponents."""
        return [{"exp": e, "coeff": str(c)} for e, c in self.items()]

    @classmethod
    def from_pairs(cls, pairs) -> "QPolynomial":
        return cls({int(d["exp"]): Fraction(d["coeff"]) for d in pairs})


def _g_derivatives(n: int, m: int) -> list[QPolynomial]:
    """[g'(0), g''(0), ..., g^{(m-1)}(0)] for g(xi) = xi + z*xi^n, as
    degree<=1 polynomials in z."""
    derivs = []
    for order in range(1, m):
        coeffs: dict[int, Fraction] = {}
        if order == 1:
            coeffs[0] = Fraction(1)
        if order == n:
            coeffs[1] = coeffs.get(1, _ZERO) + Fraction(math.factorial(n))
        derivs.append(QPolynomial(coeffs))
    return derivs


def bell_reduce(a: Rational, b: Rational) -> QPolynomial:
    """W(-n, m | z) as an exact polynomial, via the complete Bell recurrence.

    Requires a = -n (negative integer) and b = m (positive integer).  The
    banded-determinant definition of B_k is equivalent; the recurrence costs
    O(m^2) coefficient operations and stays exact over the rationals.
    """
    a, b = Fraction(a), Fraction(b)
    if not (is_integer(a) and a <= -1):
        raise DomainError(f"bell_reduce requires a negative integer a, got {a}")
    if not (is_integer(b) and b >= 1):
        raise DomainError(f"bell_reduce requires a positive integer b, got {b}")
    n = -a.numerator
    m = b.numerator
    g = _g_derivatives(n, m)  # g[i] = g^{(i+1)}(0)
    bell = [QPolynomial.constant(1)]  # B_0 = 1
    for k in range(m - 1):
        nxt = QPolynomial.zero()
        for i in range(k + 1):
            term = bell[k - i].mul(g[i]).scale(math.comb(k, i))
            nxt = nxt + term
        bell.append(nxt)
    return bell[m - 1].scale(Fraction(1, math.factorial(m - 1)))


def _check_poly_part_args(a: Fraction, b: Fraction) -> Fraction:
    if not (-1 <= a < 0):
        raise DomainError(f"poly_part requires -1 <= a < 0, got {a}")
    return -a  # step size |a|


def poly_part(a: Rational, b: Rational) -> QPolynomial:
    """Polynomial correction P_b for a decomposition with a < 0, b >= 1,
    built by the integral recursion descending in steps of |a|.

    Returns the zero polynomial for b < 1.
    """
    a, b = Fraction(a), Fraction(b)
    step = _check_poly_part_args(a, b)
    if b < 1:
        return QPolynomial.zero()
    # Collect the descending chain, then fold back up (no recursion depth).
    chain = []
    cur = b
    while cur > 0 and cur != 1:
        chain.append(cur)
        cur -= step
    poly = QPolynomial.constant(1) if cur == 1 else QPolynomial.zero()
    for bb in reversed(chain):
        poly = poly.integrate()
        if is_integer(bb):  # bb > 1 here, so (bb-1)! is well defined
            poly = poly + QPolynomial.constant(Fraction(1, math.factorial(bb.numerator - 1)))
    return poly


def poly_part_closed(a: Rational, b: Rational) -> QPolynomial:
    """Same polynomial as ``poly_part`` via the closed-form coefficients.

    Requires |a| < 1 strictly (the coefficient derivation divides by 1-|a|).
    Scan integer j in [max(0, ceil(b-1)), floor((b-1)/|a|)]; j contributes
    z^e/(e! f!) when e = (j-b+1)/(1-|a|) and f = (b-1-|a|j)/(1-|a|) are both
    nonnegative integers.
    """
    a, b = Fraction(a), Fraction(b)
    step = _check_poly_part_args(a, b)
    if step == 1:
        raise DomainError("closed-form coefficients require |a| < 1 strictly")
    if b < 1:
        return QPolynomial.zero()
    one_minus = 1 - step
    j_lo = max(0, math.ceil(b - 1))
    j_hi = math.floor((b - 1) / step)
    coeffs: dict[int, Fraction] = {}
    for j in range(j_lo, j_hi + 1):
        e = (j - b + 1) / one_minus
        f = (b - 1 - step * j) / one_minus
        if is_integer(e) and e >= 0 and is_integer(f) and f >= 0:
            ei, fi = e.numerator, f.numerator
            coeffs[ei] = coeffs.get(ei, _ZERO) + Fraction(
                1, math.factorial(ei) * math.factorial(fi)
            )
    return QPolynomial(coeffs)
