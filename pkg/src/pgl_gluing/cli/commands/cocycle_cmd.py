"""CLI command building natural cocycles and holonomy matrices."""

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
from pgl_gluing.cocycle.holonomy import check_cocycle, holonomy, triangulation_cocycle
from pgl_gluing.cocycle.matrices import is_unipotent
from pgl_gluing.export.formats import OutputFormat, cocycle_json, dump_json, matrix_csv, matrix_pairs


@click.command()
@click.argument("triangulation")
@LEVEL
@shape_source
@click.option("--curve", default=None, help="Print the holonomy of this curve instead of the cocycle")
@format_option(OutputFormat.JSON, OutputFormat.CSV, default=OutputFormat.JSON)
@SEED
@TOL
@OUTPUT
@click.pass_context
@handle_errors
def cocycle(
    ctx: click.Context,
    triangulation: str,
    n: int,
    geometric: bool,
    solution: Optional[str],
    meridian: str,
    longitude: str,
    curve: Optional[str],
    fmt: str,
    seed: Optional[int],
    tol: Optional[float],
    output: Optional[str],
) -> None:
    """Natural PGL(n,C) cocycle of a shape solution, or a curve's holonomy.

    CSV output is available for holonomy matrices only.

    \b
    Examples:
        pgl-gluing cocycle figure_eight -n 3 --geometric
        pgl-gluing cocycle figure_eight -n 3 --geometric --curve mu --format csv
        pgl-gluing cocycle figure_eight -n 2 --solution shapes.json
    """
    tri = load_input(triangulation)
    z = shape_vector(ctx, tri, n, geometric, solution, meridian, longitude, seed, tol)
    cocycles = triangulation_cocycle(tri, n, z, tolerance(ctx, tol))
    for tet, c in enumerate(cocycles):
        broken = check_cocycle(c)
        if broken:
            notify(ctx, f"⚠️  tet {tet}: {len(broken)} faces of the truncated simplex do not close")

    if curve is None:
        emit(ctx, cocycle_json(cocycles), output)
        return

    matrix = holonomy(tri, cocycles, tri.curve(curve))
    text = matrix_csv(matrix) if fmt == OutputFormat.CSV.value else dump_json(matrix_pairs(matrix))
    emit(ctx, text, output)
    if not is_unipotent(matrix):
        notify(ctx, f"⚠️  holonomy of {curve} is not unipotent")
