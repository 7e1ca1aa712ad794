"""CLI command printing the Neumann-Zagier matrices."""

from typing import Optional

import click

from pgl_gluing.cli.common import LEVEL, OUTPUT, emit, format_option, handle_errors, load_input, notify
from pgl_gluing.export.formats import OutputFormat, nz_csv, nz_json, nz_text
from pgl_gluing.gluing.nz import check_symplectic as check_symplectic_pairings, nz_matrices


@click.command()
@click.argument("triangulation")
@LEVEL
@format_option(OutputFormat.TEXT, OutputFormat.JSON, OutputFormat.CSV)
@click.option("--check-symplectic", is_flag=True, help="Pair every two rows and report nonzero pairings")
@OUTPUT
@click.pass_context
@handle_errors
def nz(
    ctx: click.Context,
    triangulation: str,
    n: int,
    fmt: str,
    check_symplectic: bool,
    output: Optional[str],
) -> None:
    """Print the matrices (A|B) of the gluing equations.

    With --check-symplectic the text header reports whether all row
    pairings vanish, e.g. "2x4, all pairings 0".

    \b
    Examples:
        pgl-gluing nz figure_eight -n 2 --check-symplectic
        pgl-gluing nz figure_eight -n 5 --format csv
    """
    tri = load_input(triangulation)
    matrices = nz_matrices(tri, n)
    failures = check_symplectic_pairings(matrices) if check_symplectic else None
    if fmt == OutputFormat.JSON.value:
        text = nz_json(matrices)
    elif fmt == OutputFormat.CSV.value:
        text = nz_csv(matrices)
    else:
        text = nz_text(matrices, failures)
    emit(ctx, text, output)
    if failures:
        notify(ctx, f"⚠️  {len(failures)} row pairs have nonzero symplectic pairing")
