"""Main CLI entry point for pgl-gluing."""

from typing import Optional

import click

from pgl_gluing.cli.commands import (
    cocycle_cmd,
    cusp_cmd,
    gluing_cmd,
    nz_cmd,
    one_loop_cmd,
    points_cmd,
    ptolemy_cmd,
    solve_cmd,
    verify_cmd,
)
from pgl_gluing.config.loader import load_config
from pgl_gluing.utils.logging import set_run_id, setup_logging


@click.group()
@click.version_option(version="0.1.0")
@click.option("--verbose", "-v", is_flag=True, help="Verbose output")
@click.option("--quiet", "-q", is_flag=True, help="Suppress non-error output")
@click.option(
    "--config",
    "config_path",
    type=click.Path(dir_okay=False),
    default=None,
    help="Path to config.yaml (default: .pgl-gluing/config.yaml)",
)
@click.pass_context
def cli(ctx: click.Context, verbose: bool, quiet: bool, config_path: Optional[str]) -> None:
    """PGL(n,C) gluing equations - generate, verify and solve.

    Reads a concrete triangulation (a JSON file or a bundled name such as
    figure_eight) and writes equations, matrices and invariants to stdout.
    Logs go to stderr.
    """
    ctx.ensure_object(dict)
    try:
        settings = load_config(config_path)
    except FileNotFoundError as e:
        click.echo(f"❌ {e}", err=True)
        ctx.exit(1)

    level = "DEBUG" if verbose else "ERROR" if quiet else settings.log_level
    setup_logging(level)
    set_run_id(f"{ctx.invoked_subcommand or 'cli'}-{settings.seed}")

    ctx.obj["verbose"] = verbose
    ctx.obj["quiet"] = quiet
    ctx.obj["settings"] = settings


# Register commands
cli.add_command(points_cmd.points)
cli.add_command(gluing_cmd.gluing)
cli.add_command(ptolemy_cmd.ptolemy)
cli.add_command(nz_cmd.nz)
cli.add_command(cusp_cmd.cusp)
cli.add_command(cocycle_cmd.cocycle)
cli.add_command(solve_cmd.solve)
cli.add_command(one_loop_cmd.one_loop)
cli.add_command(verify_cmd.verify)


if __name__ == "__main__":
    cli()
