"""
Command-line interface for zetatrace.

Usage:
    zetatrace eval --rep T2.9 --z 3 --param n=1
    zetatrace eval --rep L2.3 --z 1.5,2
    zetatrace verify --filter "T*" --report out.json
    zetatrace table --odd --max 7
    zetatrace table --even --max 12 --format csv
    zetatrace list

Exit codes: 0 pass, 1 verification failures, 2 usage or strip errors,
3 quadrature non-convergence.
"""

from __future__ import annotations

import fnmatch
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import click

from .errors import DomainError, UnknownRepresentation
from .quadrature import QuadratureConfig
from .representations import catalogue, catalogue_ids, cross_verify, evaluate, even_zeta_table, odd_zeta_table
from .representations.report import render

__all__ = ["main", "RunConfig", "parse_z", "parse_params"]

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_NOT_CONVERGED = 3

FORMATS = ("text", "json", "csv")


@dataclass
class RunConfig:
    """Options shared by all commands."""

    command: str
    rel_tol: float = 1e-12
    abs_tol: float = 1e-15
    fmt: str = "text"
    output: Optional[Path] = None
    filters: Tuple[str, ...] = ()
    z_samples: Tuple[complex, ...] = ()
    jobs: int = 1
    tol: Optional[float] = None
    params: Dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise click.UsageError("tolerances must be positive")
        if self.tol is not None and not self.tol > 0:
            raise click.UsageError("--tol must be positive")
        if self.jobs < 1:
            raise click.UsageError("--jobs must be >= 1")

    @property
    def quadrature(self) -> QuadratureConfig:
        return QuadratureConfig(rel_tol=self.rel_tol, abs_tol=self.abs_tol)


def parse_z(text: str) -> complex:
    """``"re"`` or ``"re,im"`` (a Python complex literal is accepted too)."""
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(parts[0].strip().replace("i", "j"))
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise click.BadParameter(f"cannot read {text!r} as re or re,im")


def parse_params(items: Sequence[str]) -> Dict[str, str]:
    out: Dict[str, str] = {}
    for item in items:
        name, sep, value = item.partition("=")
        if not sep or not name.strip():
            raise click.BadParameter(f"expected name=value, got {item!r}")
        out[name.strip()] = value.strip()
    return out


def _emit(text: str, output: Optional[Path]) -> None:
    if output is None:
        click.echo(text, nl=False)
    else:
        output.write_text(text)


def _common(f):
    f = click.option("--format", "fmt", type=click.Choice(FORMATS), default="text", show_default=True)(f)
    f = click.option("--rel-tol", type=float, default=1e-12, show_default=True, help="Quadrature relative tolerance.")(f)
    f = click.option("--abs-tol", type=float, default=1e-15, show_default=True, help="Quadrature absolute tolerance.")(f)
    return f


@click.group()
@click.version_option(package_name="artifact")
def main():
    """Evaluate and cross-verify representations of the Riemann zeta function."""


@main.command("eval")
@click.option("--rep", "rep_id", required=True, help="Representation id, e.g. T2.9.")
@click.option("--z", "z_text", required=True, help="Argument as re or re,im.")
@click.option("--param", "param_items", multiple=True, help="Parameter as name=value (repeatable).")
@click.option("--tol", type=float, default=None, help="Residual threshold (default: the entry's tolerance).")
@click.option("--output", type=click.Path(dir_okay=False, path_type=Path), default=None)
@_common
def cmd_eval(rep_id, z_text, param_items, tol, output, fmt, rel_tol, abs_tol):
    """Evaluate one representation and compare it with the reference value."""
    cfg = RunConfig("eval", rel_tol, abs_tol, fmt, output, tol=tol, params=parse_params(param_items))
    if rep_id not in catalogue_ids():
        raise click.UsageError(f"unknown representation id {rep_id!r}; see `zetatrace list`")
    z = parse_z(z_text)
    try:
        rec = evaluate(rep_id, z, cfg.params, cfg.quadrature, cfg.tol)
    except DomainError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    _emit(render([rec], cfg.fmt), cfg.output)
    if not rec.converged:
        click.echo(f"error: quadrature did not converge (estimate {rec.error_estimate:.2e})", err=True)
        sys.exit(EXIT_NOT_CONVERGED)
    sys.exit(EXIT_OK if rec.passed else EXIT_FAILED)


@main.command("verify")
@click.option("--filter", "filters", multiple=True, help="Glob on representation ids (repeatable).")
@click.option("--z", "z_items", multiple=True, help="Sample point override as re or re,im (repeatable).")
@click.option("--tol", type=float, default=None, help="Residual threshold for every row.")
@click.option("--report", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Write the report here (format from the suffix .json/.csv, else --format).")
@click.option("--jobs", type=int, default=1, envvar="ZETATRACE_JOBS", show_default=True, help="Worker processes.")
@click.option("--include-disabled", is_flag=True, help="Also run entries disabled by default.")
@_common
def cmd_verify(filters, z_items, tol, report, jobs, include_disabled, fmt, rel_tol, abs_tol):
    """Run the cross-verification sweep over the catalogue."""
    cfg = RunConfig("verify", rel_tol, abs_tol, fmt, report, tuple(filters), tuple(parse_z(z) for z in z_items), jobs, tol)
    ids = [d.id for d in catalogue(include_disabled=include_disabled)]
    for pat in cfg.filters:
        if not any(fnmatch.fnmatchcase(i, pat) for i in ids):
            raise click.UsageError(f"filter {pat!r} matches no representation id")
    rep = cross_verify(
        cfg.z_samples or None, cfg.quadrature, list(cfg.filters) or None, cfg.jobs, cfg.tol, include_disabled
    )
    if report is not None:
        suffix = report.suffix.lower().lstrip(".")
        report.write_text(render(rep.records, suffix if suffix in ("json", "csv") else cfg.fmt))
        click.echo(f"wrote {len(rep.records)} rows to {report}", err=True)
    else:
        _emit(render(rep.records, cfg.fmt), None)
    for rep_id, z, params, msg in rep.errors:
        click.echo(f"error: {msg}", err=True)
    failures = rep.failures
    for r in failures:
        why = "not converged" if not r.converged else f"residual {r.residual:.2e} > {r.tolerance:.0e}"
        click.echo(f"FAIL {r.id} z={r.z} {r.params}: {why}", err=True)
    worst = rep.max_residual()
    click.echo(
        f"{len(rep.records) - len(failures)}/{len(rep.records)} rows passed over {len(worst)} representations",
        err=True,
    )
    sys.exit(EXIT_OK if rep.passed else EXIT_FAILED)


@main.command("table")
@click.option("--odd", "kind", flag_value="odd", help="zeta(3), zeta(5), ... by every route.")
@click.option("--even", "kind", flag_value="even", help="zeta(2), zeta(4), ... closed form, residue and integrals.")
@click.option("--max", "max_n", type=int, required=True, help="Largest argument in the table.")
@click.option("--output", type=click.Path(dir_okay=False, path_type=Path), default=None)
@_common
def cmd_table(kind, max_n, output, fmt, rel_tol, abs_tol):
    """Tables of zeta at odd or even integers."""
    if kind is None:
        raise click.UsageError("choose --odd or --even")
    cfg = RunConfig("table", rel_tol, abs_tol, fmt, output)
    try:
        rows = odd_zeta_table(max_n, cfg.quadrature) if kind == "odd" else even_zeta_table(max_n, cfg.quadrature)
    except DomainError as exc:
        raise click.UsageError(str(exc)) from None
    _emit(render(rows, cfg.fmt), cfg.output)
    if any(not r.converged for r in rows):
        sys.exit(EXIT_NOT_CONVERGED)
    sys.exit(EXIT_OK if all(r.passed for r in rows) else EXIT_FAILED)


@main.command("list")
@click.option("--all", "show_all", is_flag=True, help="Include entries disabled by default.")
def cmd_list(show_all):
    """List representation ids with their validity regions."""
    for d in catalogue(include_disabled=show_all):
        params = ",".join(p.name for p in d.params)
        dom = d.domain(d.resolve_params(None, d.param_grid[0])).describe()
        flag = "" if d.enabled else "  [disabled]"
        click.echo(f"{d.id:<7} {d.tol_class:<11} {dom:<28} {params:<5} {d.title}{flag}")


if __name__ == "__main__":  # pragma: no cover
    main()
