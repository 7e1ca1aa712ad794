"""CLI command generating the Ptolemy relations."""

from typing import Optional

import click

from pgl_gluing.cli.common import LEVEL, OUTPUT, emit, format_option, handle_errors, load_input, notify
from pgl_gluing.export.formats import OutputFormat, ptolemy_json, ptolemy_text
from pgl_gluing.ptolemy.relations import generate_relations, variable_classes


@click.command()
@click.argument("triangulation")
@LEVEL
@format_option(OutputFormat.TEXT, OutputFormat.JSON)
@OUTPUT
@click.pass_context
@handle_errors
def ptolemy(ctx: click.Context, triangulation: str, n: int, fmt: str, output: Optional[str]) -> None:
    """Generate the Ptolemy relations, one per subsimplex of every simplex.

    \b
    Examples:
        pgl-gluing ptolemy figure_eight -n 3
        pgl-gluing ptolemy figure_eight -n 4 --format json
    """
    tri = load_input(triangulation)
    relations = generate_relations(tri, n)
    text = ptolemy_json(relations) if fmt == OutputFormat.JSON.value else ptolemy_text(relations)
    emit(ctx, text, output)
    notify(ctx, f"🔗 {len(relations)} relations in {len(variable_classes(tri, n))} variables at n={n}")
