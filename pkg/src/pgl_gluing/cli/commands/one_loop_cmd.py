"""CLI command computing the 1-loop invariant."""

from dataclasses import replace
from pathlib import Path
from typing import Optional

import click

from pgl_gluing.cli.common import (
    LEVEL,
    OUTPUT,
    SEED,
    TOL,
    emit,
    format_option,
    handle_errors,
    load_input,
    notify,
    shape_source,
    shape_vector,
    tolerance,
)
from pgl_gluing.exceptions import RelationResidualError
from pgl_gluing.export.datum import datum_to_json
from pgl_gluing.export.formats import OutputFormat, complex_pair, dump_json
from pgl_gluing.solver.flattening import find_flattening
from pgl_gluing.solver.nz_reduce import nz_reduce
from pgl_gluing.solver.one_loop import one_loop as one_loop_invariant


@click.command(name="one-loop")
@click.argument("triangulation")
@LEVEL
@shape_source
@click.option(
    "--strategy",
    type=click.Choice(["last", "first"]),
    default="last",
    show_default=True,
    help="Which dependent gluing rows are replaced by meridian rows",
)
@click.option("--save-datum", type=click.Path(dir_okay=False), default=None, help="Also write the NZ datum as JSON")
@format_option(OutputFormat.TEXT, OutputFormat.JSON)
@SEED
@TOL
@OUTPUT
@click.pass_context
@handle_errors
def one_loop(
    ctx: click.Context,
    triangulation: str,
    n: int,
    geometric: bool,
    solution: Optional[str],
    meridian: str,
    longitude: str,
    strategy: str,
    save_datum: Optional[str],
    fmt: str,
    seed: Optional[int],
    tol: Optional[float],
    output: Optional[str],
) -> None:
    """1-loop invariant tau of the reduced Neumann-Zagier datum.

    tau is defined up to sign; compare |tau|.

    \b
    Examples:
        pgl-gluing one-loop figure_eight -n 2 --geometric
        pgl-gluing one-loop figure_eight -n 3 --geometric --save-datum fig8_n3.json
    """
    tri = load_input(triangulation)
    z = shape_vector(ctx, tri, n, geometric, solution, meridian, longitude, seed, tol)
    reduced = nz_reduce(tri, n, tri.curve(meridian), strategy)  # type: ignore[arg-type]

    residual = reduced.residual(z)
    limit = tolerance(ctx, tol) * 1e3
    if residual > limit:
        raise RelationResidualError(f"shape vector misses the reduced system by {residual:.3e} (limit {limit:.1e})")

    f, f2 = find_flattening(reduced.a, reduced.b, reduced.nu)
    datum = replace(reduced.datum(z), f=f, f2=f2)
    tau = one_loop_invariant(datum)

    if save_datum is not None:
        Path(save_datum).write_text(datum_to_json(datum))
        notify(ctx, f"💾 Saved NZ datum to {save_datum}")

    if fmt == OutputFormat.JSON.value:
        text = dump_json({"n": n, "tau": complex_pair(tau), "abs_tau": abs(tau), "dropped": reduced.dropped})
    else:
        text = f"tau = {tau:.10g}\n|tau| = {abs(tau):.10g}\n"
    emit(ctx, text, output)
