"""Batch verification: route-against-route comparisons over fixed grids.

Suites
------
bell-table        polynomial reduction vs the frozen table of exact
                  polynomials for b = 2..6 (exact rational equality)
poly-dual         integral-recursion vs closed-form construction of the
                  polynomial part (exact), plus a frozen display check
oracle-grid       hypergeometric decomposition vs defining series over a
                  756-point (a, b, z) grid, skipping points where the series
                  condition number exceeds 1e4
reference-forms   wright() vs the closed-form catalog, 20 points per case
calculus          finite-difference/quadrature checks of the parameter-shift
                  identities
all               all of the above, in that order

Reports are deterministic: identical inputs produce byte-identical JSON
(no timestamps anywhere in the payload).  A point passes when the relative
error is within ``tol`` or the absolute error is within ``abs_tol`` (the
absolute escape keeps near-zero crossings of the oscillatory second-type
profiles from failing on meaningless relative error).
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from scipy.integrate import quad

from .decompose import (
    _decompose_with_reciprocal_scale,
    decompose,
    eval_decomposition,
    wright,
)
from .errors import UsageError, WrightkitError
from .kernel import rgamma
from .polyreduce import QPolynomial, bell_reduce, poly_part, poly_part_closed
from .reference import CASES
from .series import wright_series_full

SUITES = ("bell-table", "poly-dual", "oracle-grid", "reference-forms", "calculus", "all")

CONDITION_GUARD = 1e4
DEFAULT_ABS_TOL = 1e-12
ORACLE_GRID_TOL = 1e-9
REFERENCE_TOL = 1e-8
DERIVATIVE_TOL = 1e-6
INTEGRAL_TOL = 1e-7
FD_STEP = 1e-5

ORACLE_GRID_A = [Fraction(p, q) for p, q in
                 [(1, 4), (-1, 4), (1, 3), (-1, 3), (1, 2), (-1, 2),
                  (2, 3), (-2, 3), (3, 4), (-3, 4), (1, 1), (2, 1)]]
ORACLE_GRID_B = [Fraction(p, q) for p, q in
                 [(-1, 2), (1, 4), (1, 2), (3, 4), (1, 1), (3, 2), (2, 1), (5, 2), (7, 2)]]
ORACLE_GRID_Z = [-3.0, -1.0, -0.25, 0.0, 0.25, 1.0, 3.0]

# Frozen exact-polynomial table: rows are b = 2..6; each row lists the
# polynomials for n = b, b-1, ..., 1 (any n >= b gives the same constant as
# n = b, since only g'(0) = 1 survives).
BELL_TABLE: dict[int, list[str]] = {
    2: ["1", "1 + z"],
    3: ["1/2", "1/2 + z", "1/2 + z + z^2/2"],
    4: ["1/6", "1/6 + z", "1/6 + z", "1/6 + z/2 + z^2/2 + z^3/6"],
    5: ["1/24", "1/24 + z", "1/24 + z", "1/24 + z/2 + z^2/2",
        "1/24 + z/6 + z^2/4 + z^3/6 + z^4/24"],
    6: ["1/120", "1/120 + z", "1/120 + z", "1/120 + z/2",
        "1/120 + z/6 + z^2/2", "1/120 + z/24 + z^2/12 + z^3/12 + z^4/24 + z^5/120"],
}

POLY_DUAL_A = [Fraction(p, q) for p, q in [(-1, 4), (-1, 3), (-1, 2), (-2, 3), (-3, 4)]]
POLY_DUAL_B = [Fraction(p, q) for p, q in
               [(1, 1), (5, 4), (3, 2), (2, 1), (5, 2), (3, 1), (7, 2), (4, 1)]]

CALCULUS_A = [Fraction(-1, 2), Fraction(-1, 3), Fraction(1, 2)]
CALCULUS_B = [Fraction(1, 2), Fraction(1), Fraction(2)]
CALCULUS_Z = [0.5, 1.0, 2.0]
GAUSS_DERIV_Z = [-1.0, 0.3, 2.0]


@dataclass
class VerifyCase:
    suite: str
    route_a: str
    route_b: str
    a: str | None
    b: str | None
    z: float | None
    value_a: object
    value_b: object
    abs_err: float | None
    rel_err: float | None
    status: str  # "pass" | "fail" | "skip"
    reason: str | None = None

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "route_a": self.route_a,
            "route_b": self.route_b,
            "a": self.a,
            "b": self.b,
            "z": self.z,
            "value_a": self.value_a,
            "value_b": self.value_b,
            "abs_err": self.abs_err,
            "rel_err": self.rel_err,
            "status": self.status,
            "reason": self.reason,
        }


@dataclass
class VerifyReport:
    suite: str
    tolerances: dict
    cases: list[VerifyCase] = field(default_factory=list)

    @property
    def summary(self) -> dict:
        passed = sum(1 for c in self.cases if c.status == "pass")
        failed = sum(1 for c in self.cases if c.status == "fail")
        skipped = sum(1 for c in self.cases if c.status == "skip")
        return {"passed": passed, "failed": failed, "skipped": skipped}

    @property
    def failed(self) -> int:
        return self.summary["failed"]

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "tolerances": self.tolerances,
            "cases": [c.to_dict() for c in self.cases],
            "summary": self.summary,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _numeric_case(suite, route_a, route_b, a, b, z, va, vb, tol, abs_tol) -> VerifyCase:
    abs_err = abs(va - vb)
    rel_err = abs_err / max(abs(va), abs(vb), 1e-300)
    ok = rel_err <= tol or abs_err <= abs_tol
    return VerifyCase(
        suite=suite, route_a=route_a, route_b=route_b,
        a=None if a is None else str(a), b=None if b is None else str(b), z=z,
        value_a=va, value_b=vb, abs_err=abs_err, rel_err=rel_err,
        status="pass" if ok else "fail",
    )


def _exact_case(suite, route_a, route_b, a, b, got: QPolynomial, want: QPolynomial) -> VerifyCase:
    ok = got == want
    return VerifyCase(
        suite=suite, route_a=route_a, route_b=route_b,
        a=str(a), b=str(b), z=None,
        value_a=got.render(), value_b=want.render(),
        abs_err=0.0 if ok else None, rel_err=0.0 if ok else None,
        status="pass" if ok else "fail",
    )


def _run_bell_table() -> list[VerifyCase]:
    cases = []
    for b, row in sorted(BELL_TABLE.items()):
        for idx, rendered in enumerate(row):
            n = b - idx  # entries ordered by decreasing n, from n = b down to 1
            got = bell_reduce(Fraction(-n), Fraction(b))
            want_ok = got.render() == rendered
            cases.append(VerifyCase(
                suite="bell-table", route_a="polynomial-reduction", route_b="tabulated",
                a=str(Fraction(-n)), b=str(b), z=None,
                value_a=got.render(), value_b=rendered,
                abs_err=0.0 if want_ok else None, rel_err=0.0 if want_ok else None,
                status="pass" if want_ok else "fail",
            ))
    return cases


def _run_poly_dual() -> list[VerifyCase]:
    cases = []
    for a in POLY_DUAL_A:
        for b in POLY_DUAL_B:
            got = poly_part(a, b)
            want = poly_part_closed(a, b)
            cases.append(_exact_case("poly-dual", "integral-recursion",
                                     "closed-form-coefficients", a, b, got, want))
    # frozen display: P_{7/2} for |a| = 1/2 is z/2 + z^3/6 + z^5/120
    frozen = QPolynomial({1: Fraction(1, 2), 3: Fraction(1, 6), 5: Fraction(1, 120)})
    cases.append(_exact_case("poly-dual", "integral-recursion", "frozen-display",
                             Fraction(-1, 2), Fraction(7, 2),
                             poly_part(Fraction(-1, 2), Fraction(7, 2)), frozen))
    return cases


def _run_oracle_grid(tol: float, abs_tol: float) -> list[VerifyCase]:
    cases = []
    for a in ORACLE_GRID_A:
        for b in ORACLE_GRID_B:
            d = decompose(a, b)
            for z in ORACLE_GRID_Z:
                oracle = wright_series_full(a, b, z)
                if oracle.condition > CONDITION_GUARD:
                    cases.append(VerifyCase(
                        suite="oracle-grid", route_a="decomposition", route_b="series",
                        a=str(a), b=str(b), z=z,
                        value_a=None, value_b=oracle.value,
                        abs_err=None, rel_err=None, status="skip",
                        reason=f"series-condition {oracle.condition:.3e} > {CONDITION_GUARD:.0e}",
                    ))
                    continue
                value = eval_decomposition(d, z)
                cases.append(_numeric_case("oracle-grid", "decomposition", "series",
                                           a, b, z, value, oracle.value, tol, abs_tol))
    return cases


def _run_reference_forms(tol: float, abs_tol: float) -> list[VerifyCase]:
    cases = []
    for case_id in sorted(CASES):
        case = CASES[case_id]
        for z in case.sample_points():
            closed = case.eval(z)
            value = case.wright_value(z)
            cases.append(_numeric_case(
                "reference-forms", "wright", f"closed-form:{case_id}",
                case.a, case.b, z, value, closed, tol, abs_tol,
            ))
    return cases


def _run_calculus(abs_tol: float) -> list[VerifyCase]:
    cases = []
    # centered finite difference of W(a, b | .) vs W(a, a+b | .)
    for a in CALCULUS_A:
        for b in CALCULUS_B:
            for z in CALCULUS_Z:
                fd = (wright(a, b, z + FD_STEP) - wright(a, b, z - FD_STEP)) / (2 * FD_STEP)
                shifted = wright(a, a + b, z)
                cases.append(_numeric_case("calculus", "finite-difference-derivative",
                                           "parameter-shifted", a, b, z,
                                           fd, shifted, DERIVATIVE_TOL, abs_tol))
    # integral identity: W(a, b | z) - 1/Gamma(b) = integral_0^z W(a, a+b | x) dx
    for a in CALCULUS_A:
        for b in CALCULUS_B:
            for z in CALCULUS_Z:
                lhs = wright(a, b, z) - rgamma(b)
                rhs, _ = quad(lambda x: wright(a, a + b, x), 0.0, z,
                              epsabs=1e-11, epsrel=1e-11, limit=200)
                cases.append(_numeric_case("calculus", "integral-identity",
                                           "adaptive-quadrature", a, b, z,
                                           lhs, rhs, INTEGRAL_TOL, abs_tol))
    # Gaussian derivative family: W(-1/2, (1-n)/2 | z) = (d/dz)^n e^{-z^2/4}/sqrt(pi).
    # Each order is checked as a single centered difference of the exact
    # closed form one order below (a double difference at h = 1e-5 would sit
    # at the binary64 roundoff floor ~4e-6, above the tolerance).
    for order in (1, 2):
        b = Fraction(1 - order, 2)
        prev = _gauss if order == 1 else _gauss_prime
        for z in GAUSS_DERIV_Z:
            value = wright(Fraction(-1, 2), b, z)
            fd = (prev(z + FD_STEP) - prev(z - FD_STEP)) / (2 * FD_STEP)
            cases.append(_numeric_case("calculus", "gaussian-derivative",
                                       "finite-difference", Fraction(-1, 2), b, z,
                                       value, fd, DERIVATIVE_TOL, abs_tol))
    return cases


def _gauss(z: float) -> float:
    return math.exp(-z * z / 4) / math.sqrt(math.pi)


def _gauss_prime(z: float) -> float:
    return -(z / 2) * math.exp(-z * z / 4) / math.sqrt(math.pi)


def demonstrate_scale_sensitivity(a: Fraction, b_values=None, z_values=(1.0, 2.0)) -> float:
    """Worst relative deviation of the *reciprocal-scale* decomposition from
    the series oracle over a small grid.  Used by the acceptance suite to
    document that the alternative argument normalization is wrong for n >= 2."""
    worst = 0.0
    for b in b_values or ORACLE_GRID_B:
        alt = _decompose_with_reciprocal_scale(a, b)
        for z in z_values:
            oracle = wright_series_full(a, b, z)
            if oracle.condition > CONDITION_GUARD:
                continue
            value = eval_decomposition(alt, z)
            rel = abs(value - oracle.value) / max(abs(oracle.value), 1e-300)
            worst = max(worst, rel)
    return worst


def run_suite(name: str, tol: float | None = None) -> VerifyReport:
    """Run one verification suite and return its report.

    ``tol`` overrides the relative tolerance of the numeric comparison suites
    (oracle-grid default 1e-9, reference-forms default 1e-8).  The exact
    suites ignore it, and the calculus suite keeps its identity-specific
    tolerances (1e-6 finite difference, 1e-7 quadrature).
    """
    if name not in SUITES:
        raise UsageError(f"unknown suite {name!r}; known suites: {', '.join(SUITES)}")
    abs_tol = DEFAULT_ABS_TOL
    if name == "bell-table":
        return VerifyReport("bell-table", {"comparison": "exact"}, _run_bell_table())
    if name == "poly-dual":
        return VerifyReport("poly-dual", {"comparison": "exact"}, _run_poly_dual())
    if name == "oracle-grid":
        rel = ORACLE_GRID_TOL if tol is None else tol
        return VerifyReport("oracle-grid", {"rel": rel, "abs": abs_tol},
                            _run_oracle_grid(rel, abs_tol))
    if name == "reference-forms":
        rel = REFERENCE_TOL if tol is None else tol
        return VerifyReport("reference-forms", {"rel": rel, "abs": abs_tol},
                            _run_reference_forms(rel, abs_tol))
    if name == "calculus":
        return VerifyReport("calculus",
                            {"derivative_rel": DERIVATIVE_TOL, "integral_rel": INTEGRAL_TOL,
                             "abs": abs_tol},
                            _run_calculus(abs_tol))
    # all
    sub = [run_suite(s, tol) for s in SUITES[:-1]]
    report = VerifyReport("all", {s.suite: s.tolerances for s in sub})
    for s in sub:
        report.cases.extend(s.cases)
    return report
