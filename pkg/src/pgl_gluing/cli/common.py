"""Helpers shared by the CLI commands."""

import functools
import traceback
from pathlib import Path
from typing import Any, Callable, Optional, TypeVar

import click
import numpy as np

from pgl_gluing.config.loader import SolverSettings
from pgl_gluing.exceptions import GluingError, ValidationError
from pgl_gluing.export.datum import load_solution
from pgl_gluing.export.formats import OutputFormat
from pgl_gluing.models.solve import SolveConfig
from pgl_gluing.models.triangulation import ConcreteTriangulation
from pgl_gluing.solver.geometric import geometric_solution
from pgl_gluing.triangulation.fixtures import list_fixtures, load_fixture
from pgl_gluing.triangulation.parser import load_triangulation

F = TypeVar("F", bound=Callable[..., Any])

LEVEL = click.option("-n", "n", type=int, default=2, show_default=True, help="Level n of PGL(n,C)")
SEED = click.option("--seed", type=int, default=None, help="Seed for random starting points")
TOL = click.option("--tol", type=float, default=None, help="Residual tolerance")
OUTPUT = click.option(
    "--output",
    "-o",
    type=click.Path(dir_okay=False),
    default=None,
    help="Write the artifact to this file instead of stdout",
)


def format_option(*choices: OutputFormat, default: OutputFormat = OutputFormat.TEXT) -> Callable[[F], F]:
    """--format restricted to the given formats."""
    return click.option(
        "--format",
        "fmt",
        type=click.Choice([c.value for c in choices]),
        default=default.value,
        show_default=True,
        help="Output format",
    )


def load_input(source: str) -> ConcreteTriangulation:
    """Triangulation from a file path or the name of a bundled triangulation.

    Raises:
        FileNotFoundError: If neither a file nor a bundled name matches
    """
    if Path(source).exists():
        return load_triangulation(source)
    if source in list_fixtures():
        return load_fixture(source)
    raise FileNotFoundError(
        f"No triangulation file or bundled triangulation {source!r}; bundled: {', '.join(list_fixtures())}"
    )


def settings(ctx: click.Context) -> SolverSettings:
    """Settings loaded by the command group."""
    return ctx.obj["settings"]


def tolerance(ctx: click.Context, tol: Optional[float]) -> float:
    """--tol if given, else the configured tolerance."""
    return settings(ctx).tolerance if tol is None else tol


def solve_config(ctx: click.Context, seed: Optional[int], tol: Optional[float], **overrides: Any) -> SolveConfig:
    """Solver configuration with command-line overrides applied."""
    if seed is not None:
        overrides["seed"] = seed
    if tol is not None:
        overrides["tol"] = tol
    return settings(ctx).solve_config(**overrides)


def emit(ctx: click.Context, text: str, output: Optional[str]) -> None:
    """Write an artifact to a file or stdout."""
    if output is None:
        click.echo(text, nl=False)
        return
    Path(output).write_text(text)
    notify(ctx, f"✅ Wrote {output}")


def notify(ctx: click.Context, message: str) -> None:
    """Status line on stderr unless --quiet."""
    if not ctx.obj.get("quiet"):
        click.echo(message, err=True)


def handle_errors(command: F) -> F:
    """Report package errors on stderr and exit with their code.

    Validation errors exit with 1, numerical errors with 2. Missing files
    count as validation errors.
    """

    @functools.wraps(command)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        ctx = click.get_current_context()
        try:
            return command(*args, **kwargs)
        except GluingError as e:
            _report(ctx, e)
            ctx.exit(e.exit_code)
        except FileNotFoundError as e:
            _report(ctx, e)
            ctx.exit(1)

    return wrapper  # type: ignore[return-value]


def _report(ctx: click.Context, error: Exception) -> None:
    click.echo(f"❌ {type(error).__name__}: {error}", err=True)
    if ctx.obj.get("verbose"):
        traceback.print_exc()


CURVE_NAMES = [
    click.option("--meridian", default="mu", show_default=True, help="Name of the meridian curve"),
    click.option("--longitude", default="lambda", show_default=True, help="Name of the longitude curve"),
]


def shape_source(command: F) -> F:
    """--geometric, --solution, --meridian and --longitude."""
    for option in reversed(
        [
            click.option("--geometric", is_flag=True, help="Use the lifted geometric solution"),
            click.option(
                "--solution",
                type=click.Path(dir_okay=False),
                default=None,
                help="JSON file with a shape vector",
            ),
            *CURVE_NAMES,
        ]
    ):
        command = option(command)
    return command


def shape_vector(
    ctx: click.Context,
    triangulation: ConcreteTriangulation,
    n: int,
    geometric: bool,
    solution: Optional[str],
    meridian: str,
    longitude: str,
    seed: Optional[int] = None,
    tol: Optional[float] = None,
) -> np.ndarray:
    """Shape vector from --solution or --geometric.

    Raises:
        ValidationError: If neither or both sources are given
    """
    if geometric == (solution is not None):
        raise ValidationError("pass exactly one of --geometric and --solution")
    if solution is not None:
        return load_solution(solution)
    config = solve_config(ctx, seed, tol)
    return geometric_solution(
        triangulation,
        triangulation.curve(meridian),
        triangulation.curve(longitude),
        config,
        n,
    )
