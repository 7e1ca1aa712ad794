"""CLI command solving gluing or Ptolemy systems numerically."""

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
    solve_config,
)
from pgl_gluing.exceptions import NumericalError
from pgl_gluing.export.datum import solutions_to_json
from pgl_gluing.export.formats import OutputFormat, solutions_text
from pgl_gluing.solver.geometric import solve_ptolemy
from pgl_gluing.solver.newton import newton_solve
from pgl_gluing.solver.systems import GluingSystem


@click.command()
@click.argument("triangulation")
@LEVEL
@click.option("--curve", "curves", multiple=True, help="Append the cusp equations of this curve (repeatable)")
@click.option("--ptolemy", "use_ptolemy", is_flag=True, help="Solve the Ptolemy relations instead")
@click.option("--restarts", type=int, default=None, help="Number of random starts")
@format_option(OutputFormat.TEXT, OutputFormat.JSON, default=OutputFormat.JSON)
@SEED
@TOL
@OUTPUT
@click.pass_context
@handle_errors
def solve(
    ctx: click.Context,
    triangulation: str,
    n: int,
    curves: tuple[str, ...],
    use_ptolemy: bool,
    restarts: Optional[int],
    fmt: str,
    seed: Optional[int],
    tol: Optional[float],
    output: Optional[str],
) -> None:
    """Find solutions by damped Newton iteration from random starts.

    Equal seeds give identical solution lists. Gluing solutions are shape
    vectors in column order, Ptolemy solutions are values per variable.

    \b
    Examples:
        pgl-gluing solve figure_eight -n 2 --curve mu --curve lambda
        pgl-gluing solve figure_eight -n 3 --curve mu --curve lambda --restarts 200 --seed 7
        pgl-gluing solve figure_eight -n 3 --ptolemy --format text
    """
    tri = load_input(triangulation)
    overrides = {} if restarts is None else {"restarts": restarts}
    config = solve_config(ctx, seed, tol, **overrides)

    if use_ptolemy:
        result = solve_ptolemy(tri, n, config)
    else:
        system = GluingSystem.from_triangulation(tri, n, [tri.curve(name) for name in curves])
        result = newton_solve(system, config)

    for line in result.diagnostics:
        notify(ctx, f"   {line}")
    if not result.success:
        raise NumericalError(f"no solution in {result.attempts} restarts")

    text = solutions_to_json(result.solutions, n) if fmt == OutputFormat.JSON.value else solutions_text(result.solutions)
    emit(ctx, text, output)
    notify(ctx, f"✅ {len(result.solutions)} distinct solutions from {result.converged}/{result.attempts} converged runs")
