"""CLI command printing the integral point classes of a triangulation."""

from typing import Optional

import click

from pgl_gluing.cli.common import LEVEL, OUTPUT, emit, format_option, handle_errors, load_input, notify
from pgl_gluing.export.formats import OutputFormat, points_json, points_text
from pgl_gluing.lattice.points import PointKind
from pgl_gluing.lattice.quotient import point_quotient


@click.command()
@click.argument("triangulation")
@LEVEL
@format_option(OutputFormat.TEXT, OutputFormat.JSON, default=OutputFormat.JSON)
@OUTPUT
@click.pass_context
@handle_errors
def points(ctx: click.Context, triangulation: str, n: int, fmt: str, output: Optional[str]) -> None:
    """Print the integral point classes of a triangulation at level n.

    \b
    Examples:
        pgl-gluing points figure_eight -n 3
        pgl-gluing points my_census.json -n 4 --format text
    """
    tri = load_input(triangulation)
    quotient = point_quotient(tri, n)
    text = points_json(quotient.classes) if fmt == OutputFormat.JSON.value else points_text(quotient.classes)
    emit(ctx, text, output)
    counts = ", ".join(f"{quotient.count(kind)} {kind.value}" for kind in PointKind)
    notify(ctx, f"📐 {len(quotient.classes)} classes at n={n}: {counts}")
