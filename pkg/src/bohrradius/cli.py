"""Command-line front end.

    bohr radius --class wh0 --alpha 0 --family power
    bohr table --id 1 --format csv
    bohr verify --claim thm22 --tol 1e-10
    bohr sharpness --epsilon 0.01
    bohr specfun --fn lerch --z -1 --a 2

Exit status: 0 success, 1 usage or parameter error, 2 verification failure.
Output is byte-identical across runs with the same flags.
"""
from __future__ import annotations

import csv
import io
import json
import os
import sys
from typing import Optional

import click

from .classes import HarmonicPH0Extremal, HarmonicWH0Extremal
from .errors import BohrError
from .families import parse_family
from .published import LAMBDA_SHARP
from .radius import (
    build_ph0_equation,
    build_wh0_equation,
    classical_equation,
    solve_radius,
    table_generate,
)
from .specfun import digamma, dilog, gauss_2f1, h_alpha, lerch_phi, lerch_phi_via_digamma
from .verify import sharpness_probe_thm22, sign_profile, verify_harmonic_bohr, verify_thm22

SCHEMA = 1
TOL_ENV = "BOHR_TOL"
DEFAULT_TOL = 1e-12
TABLE_HEADER = ("M", "weight", "root", "residual", "paper_value", "abs_diff", "flag")
EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


def _check_tol(value: float) -> float:
    if not 0.0 < value <= 1e-3:
        raise click.BadParameter(f"tol must lie in (0, 1e-3], got {value!r}")
    return value


def default_tol() -> float:
    raw = os.environ.get(TOL_ENV)
    if raw is None:
        return DEFAULT_TOL
    try:
        value = float(raw)
    except ValueError:
        raise click.BadParameter(f"{TOL_ENV}={raw!r} is not a number") from None
    return _check_tol(value)


def _tol_option(default=None):
    def callback(ctx, param, value):
        if value is None:
            return default if default is not None else default_tol()
        return _check_tol(value)

    return click.option("--tol", type=float, default=None, callback=callback,
                        help=f"Tolerance in (0, 1e-3]; default from ${TOL_ENV} or {DEFAULT_TOL}.")


_output_option = click.option("--output", "-o", type=click.Path(dir_okay=False), default=None,
                              help="Write to this file instead of stdout.")


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return repr(x)
    return str(x)


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", newline="") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _json(payload: dict) -> str:
    payload = dict(payload, schema=SCHEMA)
    return json.dumps(payload, sort_keys=True, indent=2, allow_nan=True) + "\n"


@click.group()
def cli():
    """Bohr radii, published tables and inequality sweeps."""


@cli.command()
@click.option("--class", "klass", type=click.Choice(["ph0", "wh0", "rogosinski1", "rogosinski2", "hypergeometric"]),
              required=True)
@click.option("--M", "M", type=float, default=None, help="PH0 class parameter.")
@click.option("--alpha", type=float, default=None, help="WH0 class parameter.")
@click.option("--family", default="power", show_default=True, help="power, poly:K or shift:K.")
@click.option("--N", "N", type=int, default=1, show_default=True)
@click.option("--a", "ha", type=float, default=1.0, show_default=True)
@click.option("--b", "hb", type=float, default=1.0, show_default=True)
@click.option("--c", "hc", type=float, default=2.0, show_default=True)
@click.option("--p", type=float, default=2.0, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@_tol_option()
@_output_option
def radius(klass, M, alpha, family, N, ha, hb, hc, p, fmt, tol, output):
    """Solve one radius equation."""
    if klass == "ph0":
        if M is None:
            raise click.UsageError("--class ph0 needs --M")
        eq = build_ph0_equation(parse_family(family), M)
    elif klass == "wh0":
        if alpha is None:
            raise click.UsageError("--class wh0 needs --alpha")
        eq = build_wh0_equation(parse_family(family), alpha)
    else:
        eq = classical_equation(klass, N, ha, hb, hc, p)
    res = solve_radius(eq, tol)
    row = {
        "root": res.root,
        "residual": res.residual,
        "bracket": list(res.bracket),
        "iterations": res.iterations,
        "monotone_certificate": res.monotone_certificate,
        "sign_changes": res.sign_changes,
        "rhs": eq.rhs,
        "meta": res.meta,
    }
    if fmt == "json":
        _emit(_json(dict(row, command="radius")), output)
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        keys = ("root", "residual", "iterations", "monotone_certificate", "sign_changes", "rhs")
        w.writerow(keys)
        w.writerow([_fmt(row[k]) for k in keys])
        _emit(buf.getvalue(), output)
    ok = res.monotone_certificate and res.sign_changes == 1
    return EXIT_OK if ok else EXIT_FAIL


@cli.command()
@click.option("--id", "table_id", type=click.Choice(["1", "2"]), required=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", show_default=True)
@_tol_option()
@_output_option
def table(table_id, fmt, tol, output):
    """Recompute a published table and flag cells that disagree."""
    res = table_generate(int(table_id), tol)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(TABLE_HEADER)
        for c in res.cells:
            w.writerow([_fmt(c.M), c.weight, _fmt(c.root), _fmt(c.residual), _fmt(c.paper_value),
                        _fmt(c.abs_diff), c.flag])
        _emit(buf.getvalue(), output)
    else:
        cells = [{"M": c.M, "weight": c.weight, "root": c.root, "residual": c.residual,
                  "paper_value": c.paper_value, "abs_diff": c.abs_diff, "flag": c.flag, "error": c.error}
                 for c in res.cells]
        payload = {
            "command": "table",
            "table_id": res.table_id,
            "provenance": res.provenance,
            "cells": cells,
            "agreement": res.agreement,
            "ordering_ok": res.ordering_ok,
            "ordering_violations": [list(v) for v in res.ordering_violations],
        }
        _emit(_json(payload), output)
    # mismatches with printed values are reported, not failures
    broken = res.ordering_violations or any(c.flag == "error" for c in res.cells)
    return EXIT_FAIL if broken else EXIT_OK


@cli.command()
@click.option("--claim", type=click.Choice(["thm22", "sharp-bohr-rogosinski", "harmonic", "f-sign"]), required=True)
@click.option("--grid-a", type=int, default=99, show_default=True)
@click.option("--grid-r", type=int, default=100, show_default=True)
@click.option("--lambda", "lam", type=float, default=LAMBDA_SHARP, show_default=True)
@click.option("--class", "klass", type=click.Choice(["ph0", "wh0"]), default="ph0", show_default=True)
@click.option("--M", "M", type=float, default=0.431, show_default=True)
@click.option("--alpha", type=float, default=0.0, show_default=True)
@click.option("--family", default="power", show_default=True)
@click.option("--r", "r", type=float, default=None, help="Radius for --claim harmonic.")
@_tol_option(default=1e-10)
@_output_option
def verify(claim, grid_a, grid_r, lam, klass, M, alpha, family, r, tol, output):
    """Run an inequality sweep; exit 2 if it fails."""
    if claim in ("thm22", "sharp-bohr-rogosinski"):
        rep = verify_thm22(grid_a, grid_r, tol, lam).to_dict()
    elif claim == "harmonic":
        if r is None:
            raise click.UsageError("--claim harmonic needs --r")
        model = HarmonicPH0Extremal(M) if klass == "ph0" else HarmonicWH0Extremal(alpha)
        rep = verify_harmonic_bohr(model, parse_family(family), r, tol).to_dict()
    else:
        p1, p2 = sign_profile(1), sign_profile(2)
        ok = p1["min"] > 0.0 and p2["max"] < 0.0
        rep = {"claim_id": "f-sign", "grid": {"a": "linspace(0, 1, 1001)"}, "F1": p1, "F2": p2,
               "worst_margin": max(-p1["min"], p2["max"]), "passed": ok, "tol": 0.0, "witnesses": []}
    _emit(_json(dict(rep, command="verify")), output)
    return EXIT_OK if rep["passed"] else EXIT_FAIL


@cli.command()
@click.option("--epsilon", type=float, default=0.01, show_default=True)
@click.option("--a-grid", type=int, default=99, show_default=True)
@_output_option
def sharpness(epsilon, a_grid, output):
    """Probe sharpness of lambda: exit 0 iff a violating a is found."""
    rep = sharpness_probe_thm22(epsilon, a_grid)
    _emit(_json(dict(rep.to_dict(), command="sharpness", epsilon=epsilon)), output)
    return EXIT_OK if rep.passed else EXIT_FAIL


@cli.command()
@click.option("--fn", type=click.Choice(["digamma", "lerch", "lerch-digamma", "h", "2f1", "dilog"]), required=True)
@click.option("--x", type=float, default=None)
@click.option("--z", type=float, default=None)
@click.option("--a", type=float, default=None)
@click.option("--b", type=float, default=None)
@click.option("--c", type=float, default=None)
@_tol_option()
@_output_option
def specfun(fn, x, z, a, b, c, tol, output):
    """Evaluate a special function."""
    def need(**kw):
        missing = [k for k, v in kw.items() if v is None]
        if missing:
            raise click.UsageError(f"--fn {fn} needs " + ", ".join("--" + k for k in missing))

    payload = {"command": "specfun", "fn": fn}
    if fn == "digamma":
        need(x=x)
        payload.update(x=x, value=digamma(x))
    elif fn == "dilog":
        need(x=x)
        payload.update(x=x, value=dilog(x))
    elif fn == "h":
        need(x=x)
        payload.update(alpha=x, value=h_alpha(x))
    elif fn == "lerch-digamma":
        need(a=a)
        payload.update(a=a, value=lerch_phi_via_digamma(a))
    elif fn == "lerch":
        need(z=z, a=a)
        sv = lerch_phi(z, a, tol=tol)
        payload.update(z=z, a=a, value=sv.value, tail_bound=sv.tail_bound, terms_used=sv.terms_used)
    else:
        need(a=a, b=b, c=c, z=z)
        sv = gauss_2f1(a, b, c, z, tol=tol)
        payload.update(a=a, b=b, c=c, z=z, value=sv.value, tail_bound=sv.tail_bound, terms_used=sv.terms_used)
    _emit(_json(payload), output)
    return EXIT_OK


def main(argv=None) -> int:
    try:
        rv = cli.main(args=argv, prog_name="bohr", standalone_mode=False)
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return EXIT_USAGE
    except click.UsageError as exc:
        exc.show()
        return EXIT_USAGE
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except BohrError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_USAGE
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_USAGE
    if isinstance(rv, int):
        return rv
    return EXIT_OK  # --help and friends


if __name__ == "__main__":
    sys.exit(main())
