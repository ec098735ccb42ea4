"""Command-line front end.

Exit status: 0 on success, 1 when ``--strict`` is given and a checked
property does not hold, 2 on bad input (unparsable JSON, Jacobi failure,
wrong catalog parameters).
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction

import click

from . import theorems
from .errors import ParalieError
from .exact import DIM, format_rational, parse_rational
from .lie_algebra import CatalogEntry, StructureConstants, catalog_instantiate
from .report import PROPERTIES, GeometryReport, analyze, tensor_to_json
from .sweep import SWEEP_PARAMETERS, parse_range, run_sweep

EXIT_NO = 1
EXIT_INPUT = 2


class InputError(click.ClickException):
    exit_code = EXIT_INPUT


def _dump(doc) -> str:
    return json.dumps(doc, ensure_ascii=False, sort_keys=False, separators=(",", ":"))


def _read_input(source: str) -> StructureConstants:
    """File path, ``-`` for stdin, or an inline JSON object."""
    if source == "-":
        text = sys.stdin.read()
    elif source.lstrip().startswith("{"):
        text = source
    else:
        try:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {source}: {exc.strerror}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    try:
        return StructureConstants.from_json(doc)
    except (ParalieError, ZeroDivisionError, TypeError) as exc:
        raise InputError(str(exc)) from exc


def _analyze(source: str) -> GeometryReport:
    s = _read_input(source)
    try:
        return analyze(s)
    except ParalieError as exc:
        raise InputError(str(exc)) from exc


def _nonzero_coefficients(coeffs: dict[str, Fraction]) -> str:
    return ", ".join(f"{k}={format_rational(v)}" for k, v in coeffs.items() if v != 0)


def _tensor_lines(name: str, t) -> list[str]:
    entries = tensor_to_json(t)
    if not entries:
        return [f"{name}: 0"]
    return [f"{name}_{idx} = {v}" for idx, v in entries.items()]


def _vector(t) -> str:
    return "(" + ", ".join(format_rational(t[i]) for i in range(DIM)) + ")"


json_flag = click.option("--json", "as_json", is_flag=True, help="Emit one JSON document.")
input_arg = click.argument("source", metavar="INPUT")


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main():
    """Geometry of 3-dimensional Lie algebras with a paracontact paracomplex structure."""


@main.command()
@input_arg
@json_flag
def classify(source, as_json):
    """Class decomposition and Lee forms."""
    r = _analyze(source)
    d = r.decomposition
    if as_json:
        theta, theta_star, omega = r.lee_forms
        doc = d.to_json()
        doc["lee_forms"] = {
            "theta": [format_rational(v) for v in theta.data],
            "theta_star": [format_rational(v) for v in theta_star.data],
            "omega": [format_rational(v) for v in omega.data],
        }
        click.echo(_dump(doc))
        return
    coeffs = _nonzero_coefficients(d.coefficients)
    click.echo(d.label + (f", {coeffs}" if coeffs else ""))
    theta, theta_star, omega = r.lee_forms
    click.echo(f"theta = {_vector(theta)}")
    click.echo(f"theta* = {_vector(theta_star)}")
    click.echo(f"omega = {_vector(omega)}")


@main.command()
@input_arg
@json_flag
def curvature(source, as_json):
    """Connection, curvature tensors, scalar and sectional curvatures."""
    r = _analyze(source)
    if as_json:
        click.echo(_dump(r.to_json()))
        return
    c = r.curvature
    lines = [f"class: {r.decomposition.label}"]
    lines += _tensor_lines("Gamma", r.connection.gamma)
    lines += _tensor_lines("R", c.R)
    lines += _tensor_lines("rho", c.rho)
    lines += _tensor_lines("rho*", c.rho_star)
    lines += [
        f"tau = {format_rational(c.tau)}",
        f"tau* = {format_rational(c.tau_star)}",
        f"k01 = {format_rational(c.k01)}",
        f"k02 = {format_rational(c.k02)}",
        f"k12 = {format_rational(c.k12)}",
    ]
    einstein = r.einstein
    coeffs = _nonzero_coefficients(einstein.coefficients)
    lines.append(f"einstein: {einstein.kind}" + (f", {coeffs}" if coeffs else ""))
    lines.append(
        "3d curvature identity: residual zero"
        if r.r3_residual.is_zero()
        else "3d curvature identity: NONZERO residual"
    )
    flags = [name for name, on in r.flags.items() if on]
    lines.append("flags: " + (", ".join(flags) if flags else "none"))
    click.echo("\n".join(lines))


def _yes_no(v) -> str:
    return {True: "yes", False: "no", None: "n/a"}[v]


def _witness(w: tuple[int, ...]) -> str:
    return "(" + ",".join(f"E{i}" for i in w) + ")"


@main.command()
@input_arg
@click.argument("prop", metavar="PROPERTY", type=click.Choice(PROPERTIES))
@json_flag
@click.option("--strict", is_flag=True, help="Exit 1 when the property does not hold.")
def check(source, prop, as_json, strict):
    """Test one property, literally and through its class condition."""
    r = _analyze(source)
    p = r.predicates[prop]
    if as_json:
        click.echo(_dump({"property": prop, **p.to_json()}))
    else:
        coeffs = _nonzero_coefficients(p.coefficients) if p.literal else ""
        if prop == "para-sasakian":
            coeffs = ""
        click.echo(f"{prop}: {_yes_no(p.literal)}" + (f", {coeffs}" if coeffs else ""))
        click.echo(f"class condition: {_yes_no(p.class_condition)}")
        if p.witness is not None:
            click.echo(f"witness: {_witness(p.witness)}")
        if p.agree is False:
            click.echo("note: literal verdict and class condition disagree")
    if strict and not p.literal:
        sys.exit(EXIT_NO)


@main.command()
@click.argument("family")
@click.option("--alpha")
@click.option("--beta")
@click.option("--a1")
@click.option("--a2")
def catalog(family, **params):
    """Structure constants of a named family, as input JSON."""
    try:
        entry = CatalogEntry.of(family, **params)
    except (ParalieError, ZeroDivisionError) as exc:
        raise click.UsageError(str(exc)) from exc
    click.echo(_dump(catalog_instantiate(entry).to_json()))


@main.command("verify-theorems")
@click.option("--grid", "grid_spec", help="Comma-separated rational parameter grid.")
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--random-count", default=100, show_default=True, type=int)
@json_flag
def verify_theorems(grid_spec, seed, random_count, as_json):
    """Run every theorem check; exit 1 if any fails."""
    try:
        grid = theorems.parse_grid(grid_spec) if grid_spec else theorems.DEFAULT_GRID
    except (ParalieError, ZeroDivisionError) as exc:
        raise click.UsageError(f"bad --grid: {exc}") from exc
    suite = theorems.run_suite(grid, random_count=random_count, seed=seed)
    if as_json:
        click.echo(_dump(suite.to_json()))
    else:
        click.echo("\n".join(suite.lines()))
    if not suite.ok:
        sys.exit(EXIT_NO)


def _axis_key(name: str) -> str:
    return name.lower().replace("^", "_")


def _axis_option(name: str):
    flag = "--" + name.lower().replace("^", "-")
    return click.option(flag, _axis_key(name), default="0", show_default=True, help=f"Values of {name}.")


def _free_option(name: str):
    flag = "--free-" + name.lower().replace("^", "-")
    return click.option(flag, default="0", show_default=True, help=f"{name} where undetermined.")


def _sweep_options(fn):
    for name in reversed(SWEEP_PARAMETERS):
        fn = _axis_option(name)(fn)
    for name in reversed(("C12^0", "C02^1", "C01^2")):
        fn = _free_option(name)(fn)
    return fn


@main.command()
@_sweep_options
@click.option("--step", default="1", show_default=True, help="Increment for lo:hi ranges.")
@json_flag
def sweep(step, as_json, free_c12_0, free_c02_1, free_c01_2, **axes):
    """Classify every Jacobi-completable point of a 6-parameter grid, as CSV.

    Each axis is a value, a comma list, or lo:hi stepped by --step.
    Points whose completion has no solution are skipped and counted on
    stderr.
    """
    try:
        step_q = parse_rational(step)
        values = [parse_range(axes[_axis_key(name)], step_q) for name in SWEEP_PARAMETERS]
        free = tuple(parse_rational(v) for v in (free_c12_0, free_c02_1, free_c01_2))
    except (ParalieError, ZeroDivisionError) as exc:
        raise click.UsageError(str(exc)) from exc
    result = run_sweep(values, free)
    if as_json:
        click.echo(_dump(result.to_json()))
    else:
        click.echo(result.to_csv(), nl=False)
    click.echo(f"skipped {len(result.skipped)} degenerate points", err=True)


if __name__ == "__main__":  # pragma: no cover
    main()
