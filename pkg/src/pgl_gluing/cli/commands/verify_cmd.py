"""CLI command checking a solution against the generated equations."""

from typing import Optional

import click

from pgl_gluing.cli.common import (
    LEVEL,
    OUTPUT,
    TOL,
    emit,
    format_option,
    handle_errors,
    load_input,
    notify,
    tolerance,
)
from pgl_gluing.cusp.generator import generate_cusp
from pgl_gluing.cusp.verify import verify_cusp
from pgl_gluing.exceptions import RelationResidualError
from pgl_gluing.export.datum import load_solution
from pgl_gluing.export.formats import OutputFormat, dump_json, report_text
from pgl_gluing.gluing.nz import nz_matrices
from pgl_gluing.gluing.verify import verify_solution
from pgl_gluing.ptolemy.relations import generate_relations, verify_ptolemy
from pgl_gluing.utils.residuals import ResidualReport


@click.command()
@click.argument("triangulation")
@click.option("--solution", type=click.Path(dir_okay=False), required=True, help="JSON file with the vector to check")
@LEVEL
@click.option("--curve", "curves", multiple=True, help="Cusp curve to check (repeatable, default: all)")
@click.option("--ptolemy", "use_ptolemy", is_flag=True, help="The vector holds Ptolemy variable values")
@format_option(OutputFormat.TEXT, OutputFormat.JSON)
@TOL
@OUTPUT
@click.pass_context
@handle_errors
def verify(
    ctx: click.Context,
    triangulation: str,
    solution: str,
    n: int,
    curves: tuple[str, ...],
    use_ptolemy: bool,
    fmt: str,
    tol: Optional[float],
    output: Optional[str],
) -> None:
    """Evaluate a solution on the gluing and cusp equations.

    The report is written in full; the exit code is 2 when some system
    exceeds the tolerance.

    \b
    Examples:
        pgl-gluing verify figure_eight -n 3 --solution component.json
        pgl-gluing verify figure_eight -n 3 --solution ptolemy.json --ptolemy
    """
    tri = load_input(triangulation)
    z = load_solution(solution)
    limit = tolerance(ctx, tol)

    reports: dict[str, ResidualReport] = {}
    if use_ptolemy:
        reports["ptolemy"] = verify_ptolemy(generate_relations(tri, n), z, limit)
    else:
        reports["gluing"] = verify_solution(nz_matrices(tri, n), z, limit)
        selected = [tri.curve(name) for name in curves] if curves else list(tri.curves)
        for curve in selected:
            reports[curve.name] = verify_cusp(generate_cusp(tri, n, curve), z, limit)

    if fmt == OutputFormat.JSON.value:
        text = dump_json({name: report.model_dump(mode="json") for name, report in reports.items()})
    else:
        text = report_text(reports)
    emit(ctx, text, output)

    failed = [name for name, report in reports.items() if not report.passed]
    if failed:
        raise RelationResidualError(f"residual above {limit:.1e} in {', '.join(failed)}")
    notify(ctx, "✅ All equations satisfied")
