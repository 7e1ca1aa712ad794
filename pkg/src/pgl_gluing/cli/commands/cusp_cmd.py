"""CLI command generating cusp equations."""

from typing import Optional

import click

from pgl_gluing.cli.common import LEVEL, OUTPUT, emit, format_option, handle_errors, load_input, notify
from pgl_gluing.cusp.generator import generate_cusp
from pgl_gluing.export.formats import OutputFormat, cusp_json, cusp_text


@click.command()
@click.argument("triangulation")
@LEVEL
@click.option("--curve", "curves", multiple=True, help="Peripheral curve name (repeatable, default: all)")
@format_option(OutputFormat.TEXT, OutputFormat.JSON)
@OUTPUT
@click.pass_context
@handle_errors
def cusp(
    ctx: click.Context,
    triangulation: str,
    n: int,
    curves: tuple[str, ...],
    fmt: str,
    output: Optional[str],
) -> None:
    """Generate the cusp equations of peripheral curves, one per level 1..n-1.

    \b
    Examples:
        pgl-gluing cusp figure_eight -n 3
        pgl-gluing cusp figure_eight -n 4 --curve mu --format json
    """
    tri = load_input(triangulation)
    selected = [tri.curve(name) for name in curves] if curves else list(tri.curves)
    if not selected:
        notify(ctx, "⚠️  Triangulation carries no peripheral curves")
    equations = [eq for curve in selected for eq in generate_cusp(tri, n, curve)]
    text = cusp_json(equations) if fmt == OutputFormat.JSON.value else cusp_text(equations)
    emit(ctx, text, output)
