"""CLI command generating the gluing equations."""

from typing import Optional

import click

from pgl_gluing.cli.common import LEVEL, OUTPUT, emit, format_option, handle_errors, load_input, notify
from pgl_gluing.export.formats import OutputFormat, gluing_json, gluing_text, nz_csv
from pgl_gluing.gluing.generator import generate
from pgl_gluing.gluing.nz import to_nz


@click.command()
@click.argument("triangulation")
@LEVEL
@format_option(OutputFormat.TEXT, OutputFormat.JSON, OutputFormat.CSV)
@OUTPUT
@click.pass_context
@handle_errors
def gluing(ctx: click.Context, triangulation: str, n: int, fmt: str, output: Optional[str]) -> None:
    """Generate the edge, face and interior gluing equations.

    Text output has one equation per line; CSV output is the (A|B) matrix.

    \b
    Examples:
        pgl-gluing gluing figure_eight -n 4
        pgl-gluing gluing figure_eight -n 3 --format csv -o fig8_n3.csv
    """
    tri = load_input(triangulation)
    equations = generate(tri, n)
    if fmt == OutputFormat.JSON.value:
        text = gluing_json(equations)
    elif fmt == OutputFormat.CSV.value:
        text = nz_csv(to_nz(equations))
    else:
        text = gluing_text(equations)
    emit(ctx, text, output)
    notify(ctx, f"🧩 {len(equations)} gluing equations at n={n}")
