"""
Command-line interface for chebpsi.

Usage::

    # ψ_60 expanded, or as a product of sequence terms
    chebpsi psi 60
    chebpsi psi 60 --expr
    chebpsi psi 60 --method barnes --expr

    # ψ_{3/10}: minimal polynomial of 2cos(3π/10)
    chebpsi fraction 3 10

    # The table of ψ_n for n <= 120
    chebpsi table --max 120
    chebpsi table --max 30 --expand --format json

    # Chebyshev T/V/W as products of ψ's
    chebpsi factor T 15 --check

    # Identity and cross-method sweeps
    chebpsi --jobs 4 verify --max 300 --json-out report.json

    # Timings per method
    chebpsi bench --max 120 --methods main,wz

Exit codes: 0 success, 1 verification failure, 2 usage or invalid input,
3 precision exceeded (numeric method).
"""
from __future__ import annotations

import json
import logging
import sys
from contextlib import contextmanager
from pathlib import Path

import click

from chebpsi import __version__, cheb_factor, minpoly
from chebpsi.bench import run_bench
from chebpsi.crosscheck import run_all
from chebpsi.exceptions import (
    ChebPsiError,
    IdentityViolationError,
    IndexOutOfRangeError,
    InvalidInputError,
    PrecisionExceededError,
)
from chebpsi.minpoly import FractionTarget, Method
from chebpsi.models import (
    ExprModel,
    FactorRecord,
    FractionRecord,
    PsiRecord,
    VerifySummary,
    coeff_strings,
)
from chebpsi.table import build_table

logger = logging.getLogger("chebpsi.cli")

DEFAULT_LOG_LEVEL = "WARNING"
DEFAULT_LOG_FILE = ""  # empty = stderr
DEFAULT_TABLE_MAX = 120
DEFAULT_VERIFY_MAX = 50
DEFAULT_BENCH_METHODS = "main,quotient,wz,barnes"

EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_PRECISION = 3


# ============================================================================
# Helpers
# ============================================================================

def _setup_logging(log_level: str, log_file: str) -> None:
    """Configure root logging."""
    fmt = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
    handlers: list[logging.Handler] = []

    if log_file:
        handlers.append(logging.FileHandler(log_file, mode="a"))
    else:
        handlers.append(logging.StreamHandler(sys.stderr))

    logging.basicConfig(
        level=getattr(logging, log_level.upper(), logging.WARNING),
        format=fmt,
        handlers=handlers,
        force=True,
    )


def _print_json(data) -> None:
    """Print data as formatted JSON."""
    click.echo(json.dumps(data, indent=2, default=str))


def _print_table(rows: list[dict], columns: list[str] | None = None) -> None:
    """Print a list of dicts as a simple aligned table."""
    if not rows:
        click.echo("(empty)")
        return
    if columns is None:
        columns = list(rows[0].keys())
    widths = {c: max(len(c), *(len(str(r.get(c, ""))) for r in rows)) for c in columns}
    click.echo("  ".join(c.ljust(widths[c]) for c in columns))
    click.echo("  ".join("-" * widths[c] for c in columns))
    for row in rows:
        click.echo("  ".join(str(row.get(c, "")).ljust(widths[c]) for c in columns))


@contextmanager
def _errors_to_exit_codes():
    """Turn library exceptions into the documented exit codes."""
    try:
        yield
    except PrecisionExceededError as exc:
        click.echo(f"Error: {exc}", err=True)
        raise SystemExit(EXIT_PRECISION)
    except (InvalidInputError, IndexOutOfRangeError) as exc:
        click.echo(f"Error: {exc}", err=True)
        raise SystemExit(EXIT_USAGE)
    except IdentityViolationError as exc:
        click.echo(f"Check failed: {exc}", err=True)
        raise SystemExit(EXIT_VERIFY_FAILED)
    except ChebPsiError as exc:
        logger.exception("unexpected library error")
        click.echo(f"Error: {exc}", err=True)
        raise SystemExit(EXIT_VERIFY_FAILED)


def _expr_model(expr: minpoly.ProductExpr) -> ExprModel:
    return ExprModel(num=expr.num_strings(), den=expr.den_strings())


def _parse_methods(ctx, param, value: str) -> list[Method]:
    methods = []
    for name in (v.strip() for v in value.split(",")):
        if not name:
            continue
        try:
            methods.append(Method(name))
        except ValueError:
            choices = ", ".join(m.value for m in Method)
            raise click.BadParameter(f"unknown method {name!r} (choose from {choices})")
    if not methods:
        raise click.BadParameter("at least one method is required")
    return methods


_FORMAT = click.option(
    "--format", "fmt", type=click.Choice(["text", "json"]), default="text",
    show_default=True, help="Output encoding.",
)


# ============================================================================
# Root group
# ============================================================================

@click.group(
    context_settings={"help_option_names": ["-h", "--help"]},
)
@click.version_option(version=__version__, prog_name="chebpsi")
@click.option(
    "--log-level", default=DEFAULT_LOG_LEVEL, envvar="CHEBPSI_LOG_LEVEL",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    help=f"Log level (default: {DEFAULT_LOG_LEVEL}). Env: CHEBPSI_LOG_LEVEL",
)
@click.option(
    "--log-file", default=DEFAULT_LOG_FILE, envvar="CHEBPSI_LOG_FILE",
    help="Log to file (default: stderr). Env: CHEBPSI_LOG_FILE",
)
@click.option(
    "--jobs", default=1, type=click.IntRange(min=1), envvar="CHEBPSI_JOBS",
    help="Worker threads for table, verify and bench (default: 1). Env: CHEBPSI_JOBS",
)
@click.pass_context
def cli(ctx, log_level, log_file, jobs):
    """chebpsi: minimal polynomials of 2cos(2π/n) from Chebyshev sequences.

    \b
    Commands:
      psi       ψ_n by one of five methods
      fraction  ψ_{m/n}, the minimal polynomial of 2cos(mπ/n)
      table     the ψ table as sequence-term products
      factor    T/V/W Chebyshev polynomials as products of ψ's
      verify    identity and cross-method sweeps
      bench     per-method timings
    """
    _setup_logging(log_level, log_file)
    ctx.ensure_object(dict)
    ctx.obj["jobs"] = jobs


# ============================================================================
# psi / fraction
# ============================================================================

@cli.command("psi")
@click.argument("n", type=click.IntRange(min=1))
@click.option(
    "--method", type=click.Choice([m.value for m in Method]), default=Method.MAIN.value,
    show_default=True, help="Computation method.",
)
@_FORMAT
@click.option("--expr", "show_expr", is_flag=True, help="Print the symbolic form instead.")
def cmd_psi(n, method, fmt, show_expr):
    """Print ψ_N, the minimal polynomial of 2cos(2π/N)."""
    method = Method(method)
    if show_expr and method is Method.NUMERIC:
        raise click.UsageError("the numeric method has no symbolic form")
    with _errors_to_exit_codes():
        poly = minpoly.compute(n, method)
        text = minpoly.expression_text(n, method)
        if fmt == "json":
            expr = None
            if n > 2 and method is Method.MAIN:
                expr = _expr_model(minpoly.psi_expr(n))
            elif n > 2 and method is Method.BARNES:
                expr = _expr_model(minpoly.barnes_expr(n))
            record = PsiRecord(
                n=n, degree=poly.degree, method=method.value,
                expr=expr, text=text, coeffs=coeff_strings(poly),
            )
            _print_json(record.model_dump(mode="json"))
        elif show_expr:
            click.echo(text if text is not None else str(poly))
        else:
            click.echo(str(poly))


@cli.command("fraction")
@click.argument("m", type=click.IntRange(min=1))
@click.argument("n", type=click.IntRange(min=2))
@_FORMAT
@click.option("--expr", "show_expr", is_flag=True, help="Print the symbolic form instead.")
def cmd_fraction(m, n, fmt, show_expr):
    """Print ψ_{M/N}, the minimal polynomial of 2cos(Mπ/N)."""
    with _errors_to_exit_codes():
        target = FractionTarget(m, n)
        expr = minpoly.psi_expr_fraction(target)
        poly = expr.evaluate()
        if fmt == "json":
            record = FractionRecord(
                m=m, n=n, case=target.case.value, psi_index=target.psi_index,
                degree=poly.degree, expr=_expr_model(expr), coeffs=coeff_strings(poly),
            )
            _print_json(record.model_dump(mode="json"))
        elif show_expr:
            click.echo(str(expr))
        else:
            click.echo(str(poly))


# ============================================================================
# table
# ============================================================================

@cli.command("table")
@click.option(
    "--max", "max_n", type=click.IntRange(min=1), default=DEFAULT_TABLE_MAX,
    show_default=True, help="Largest n.",
)
@_FORMAT
@click.option("--expand", is_flag=True, help="Include the expanded polynomial.")
@click.pass_context
def cmd_table(ctx, max_n, fmt, expand):
    """Print ψ_n for n = 1..MAX as products of sequence terms."""
    with _errors_to_exit_codes():
        rows = build_table(max_n, expand=expand, jobs=ctx.obj["jobs"])
    if fmt == "json":
        _print_json([row.model_dump(mode="json", exclude_none=True) for row in rows])
        return
    for row in rows:
        if expand:
            click.echo(f"{row.line()} | {row.polynomial()}")
        else:
            click.echo(row.line())


# ============================================================================
# factor
# ============================================================================

@cli.command("factor")
@click.argument("kind", type=click.Choice(["T", "V", "W"], case_sensitive=False))
@click.argument("n", type=click.IntRange(min=1))
@click.option("--check", is_flag=True, help="Multiply the factors back out and compare.")
@_FORMAT
def cmd_factor(kind, n, check, fmt):
    """Print T_N, V_N or W_N (rescaled) as a product of ψ's."""
    with _errors_to_exit_codes():
        result = cheb_factor.factor(kind.upper(), n, check=check)
    if fmt == "json":
        record = FactorRecord(
            kind=result.kind.value, n=n, psi_factors=list(result.factors), checked=check,
        )
        _print_json(record.model_dump(mode="json"))
        return
    click.echo(" ".join(f"psi_{k}" for k in result.factors))
    if check:
        click.echo("check: ok", err=True)


# ============================================================================
# verify
# ============================================================================

@cli.command("verify")
@click.option(
    "--max", "max_n", type=click.IntRange(min=0), default=DEFAULT_VERIFY_MAX,
    show_default=True, help="Upper bound for every sweep.",
)
@_FORMAT
@click.option(
    "--json-out", type=click.Path(dir_okay=False, writable=True), default=None,
    help="Also write the reports as JSON to this file.",
)
@click.pass_context
def cmd_verify(ctx, max_n, fmt, json_out):
    """Run the identity suite and the cross-method sweeps."""
    if max_n == 0:
        click.echo("no checks run")
        return
    with _errors_to_exit_codes():
        reports = run_all(max_n, jobs=ctx.obj["jobs"])
    summary = VerifySummary(max_n=max_n, passed=all(r.passed for r in reports), reports=reports)
    if json_out:
        Path(json_out).write_text(summary.model_dump_json(indent=2))
        logger.info("wrote %d reports to %s", len(reports), json_out)
    if fmt == "json":
        _print_json(summary.model_dump(mode="json"))
    else:
        for report in reports:
            click.echo(report.line())
    if not summary.passed:
        raise SystemExit(EXIT_VERIFY_FAILED)


# ============================================================================
# bench
# ============================================================================

@cli.command("bench")
@click.option(
    "--max", "max_n", type=click.IntRange(min=1), default=DEFAULT_TABLE_MAX,
    show_default=True, help="Largest n.",
)
@click.option(
    "--methods", default=DEFAULT_BENCH_METHODS, show_default=True, callback=_parse_methods,
    help="Comma-separated methods to time.",
)
@_FORMAT
def cmd_bench(max_n, methods, fmt):
    """Time each method on ψ_1..ψ_MAX and compare the results."""
    with _errors_to_exit_codes():
        report = run_bench(max_n, methods)
    if fmt == "json":
        _print_json(report.model_dump(mode="json"))
    else:
        names = report.methods
        rows = [
            {"n": row.n, **{
                m: ("-" if row.millis[m] is None else f"{row.millis[m]:.3f}") for m in names
            }}
            for row in report.rows
        ]
        _print_table(rows, ["n", *names])
        click.echo("")
        _print_table(
            [
                {
                    "method": s.method,
                    "total_s": f"{s.total_seconds:.4f}",
                    "median_ms": f"{s.median_millis:.3f}",
                    "count": s.count,
                }
                for s in report.summary
            ],
            ["method", "total_s", "median_ms", "count"],
        )
        click.echo(f"agree: {'yes' if report.agree else 'no'}")
    if not report.agree:
        raise SystemExit(EXIT_VERIFY_FAILED)


def main():
    """Entry point for console_scripts."""
    cli()


if __name__ == "__main__":
    main()
