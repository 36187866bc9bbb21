"""Command-line surface.

Subcommands: eval, decompose, table, reduce, verify.  Rational parameters
cross the boundary as strings "p/q" (never as floats), so classification
stays exact.  Exit codes: 0 ok, 1 verification failures, 2 domain error,
3 convergence error, 64 usage error.
"""
from __future__ import annotations

import sys
from fractions import Fraction

import click

from .decompose import Decomposition, decompose, eval_decomposition, wright
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
from .polyreduce import bell_reduce
from .rationals import is_integer, parse_rational
from .reference import CASES
from .series import WrightKind, classify, wright_series
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_DOMAIN = 2
EXIT_CONVERGENCE = 3
EXIT_USAGE = 64


def _rational_arg(_ctx, param, value):
    try:
        return parse_rational(value)
    except ValueError as exc:
        raise click.UsageError(f"--{param.name}: {exc}") from exc


_A_OPTION = click.option("--a", "a", required=True, callback=_rational_arg,
                         help="first parameter, as p or p/q")
_B_OPTION = click.option("--b", "b", required=True, callback=_rational_arg,
                         help="second parameter, as p or p/q")


@click.group()
def cli():
    """Evaluate the Wright function W(a,b|z) and its exact representations."""


@cli.command("eval")
@_A_OPTION
@_B_OPTION
@click.option("--z", type=float, required=True, help="real evaluation point")
@click.option("--tol", type=float, default=1e-12, show_default=True)
@click.option("--route", type=click.Choice(["auto", "series", "decomposition", "reference"]),
              default="auto", show_default=True)
def cmd_eval(a, b, z, tol, route):
    """Print W(a,b|z) with 16 significant digits."""
    if route == "series":
        value = wright_series(a, b, z, tol)
    elif route == "decomposition":
        value = eval_decomposition(decompose(a, b), z, tol)
    elif route == "reference":
        value = _reference_route(a, b, z)
    else:
        value = wright(a, b, z, tol)
    click.echo(f"{value:.16g}")


def _reference_route(a: Fraction, b: Fraction, z: float) -> float:
    for case in CASES.values():
        if case.a == a and case.b == b:
            zc = case.arg_factor * z  # case variable from the Wright argument
            if case.in_domain(zc):
                return case.eval(zc)
    if a == -1:
        from .reference import _pow_case
        return _pow_case(z, b)
    raise DomainError(f"no closed-form reference covers a={a}, b={b}")


def _render_text(d: Decomposition) -> str:
    kind = d.spec.kind
    if kind is WrightKind.IDENTICALLY_ZERO:
        return "0 (identically zero)"
    lines = []
    for t in d.terms:
        pref = f"z^{t.r}/({t.r}!·Γ({t.gamma_arg}))"
        sign = "-" if t.arg_sign < 0 else ""
        arg = f"{sign}{t.arg_scale}·z^{t.arg_zpower}"
        lines.append(f"{pref}·{t.pfq}({arg})")
    if not d.poly.is_zero:
        lines.append(d.poly.render())
    if not lines:
        return "0 (identically zero)"
    return "\n + ".join(lines)


@cli.command("decompose")
@_A_OPTION
@_B_OPTION
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text",
              show_default=True)
def cmd_decompose(a, b, fmt):
    """Print the hypergeometric-plus-polynomial representation."""
    d = decompose(a, b)
    if fmt == "json":
        import json

        click.echo(json.dumps(d.to_json_dict(), indent=2))
    else:
        click.echo(_render_text(d))


@cli.command("table")
@_A_OPTION
@_B_OPTION
@click.option("--zmin", type=float, required=True)
@click.option("--zmax", type=float, required=True)
@click.option("--steps", type=int, required=True, help="number of rows (>= 2)")
@click.option("--tol", type=float, default=1e-12, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None,
              help="write CSV here instead of standard output")
def cmd_table(a, b, zmin, zmax, steps, tol, out):
    """Uniform-grid CSV of W(a,b|z) (header "z,W")."""
    if steps < 2:
        raise click.UsageError("--steps must be at least 2")
    if not zmin < zmax:
        raise click.UsageError("--zmin must be strictly below --zmax")
    lines = ["z,W"]
    failures = []
    for i in range(steps):
        z = zmin + i * (zmax - zmin) / (steps - 1)
        try:
            lines.append(f"{z!r},{wright(a, b, z, tol)!r}")
        except WrightkitError as exc:
            lines.append(f"{z!r},")
            failures.append((z, exc))
    for z, exc in failures:
        lines.append(f"# failed at z={z!r}: {exc}")
    text = "\n".join(lines) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


@cli.command("reduce")
@_A_OPTION
@_B_OPTION
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text",
              show_default=True)
def cmd_reduce(a, b, fmt):
    """Print the exact polynomial W(-n, m | z) for negative integer a."""
    if not (is_integer(a) and a <= -1 and is_integer(b) and b >= 1):
        raise DomainError(
            f"reduce needs a negative integer a and a positive integer b, got a={a}, b={b}"
        )
    poly = bell_reduce(a, b)
    if fmt == "json":
        import json

        click.echo(json.dumps(poly.to_pairs()))
    else:
        click.echo(poly.render())


@cli.command("verify")
@click.option("--suite", required=True, help=f"one of: {', '.join(SUITES)}")
@click.option("--tol", type=float, default=None,
              help="override the suite's relative tolerance")
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json",
              show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
@click.pass_context
def cmd_verify(ctx, suite, tol, fmt, out):
    """Run a verification suite; exit status is nonzero iff anything failed."""
    report = run_suite(suite, tol)
    if fmt == "json":
        text = report.to_json() + "\n"
    else:
        s = report.summary
        lines = [f"suite: {report.suite}"]
        for case in report.cases:
            if case.status != "pass":
                lines.append(f"  [{case.status}] {case.route_a} vs {case.route_b} "
                             f"a={case.a} b={case.b} z={case.z} ({case.reason or case.rel_err})")
        lines.append(f"passed={s['passed']} failed={s['failed']} skipped={s['skipped']}")
        text = "\n".join(lines) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)
    if report.failed:
        ctx.exit(EXIT_VERIFY_FAILED)


def main(argv=None) -> int:
    """Entry point with the documented exit-code mapping."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.exceptions.Abort:
        return 130
    except click.UsageError as exc:
        click.echo(f"usage error: {exc.format_message()}", err=True)
        return EXIT_USAGE
    except UsageError as exc:
        click.echo(f"usage error: {exc}", err=True)
        return EXIT_USAGE
    except (DomainError, PoleError, RangeError, ParameterError, UnsupportedOrder) as exc:
        click.echo(f"domain error: {exc}", err=True)
        return EXIT_DOMAIN
    except ConvergenceError as exc:
        click.echo(f"convergence error: {exc}", err=True)
        return EXIT_CONVERGENCE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
