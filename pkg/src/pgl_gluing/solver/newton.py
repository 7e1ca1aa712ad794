"""Damped Newton iteration from random starts."""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from pgl_gluing.models.solve import SolveConfig, SolveResult
from pgl_gluing.solver.systems import ResidualSystem
from pgl_gluing.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass
class _Run:
    """Outcome of one restart."""

    solution: Optional[np.ndarray]
    reason: str


def _norm(residual: np.ndarray) -> float:
    return float(np.max(np.abs(residual))) if residual.size else 0.0


def _newton(system: ResidualSystem, start: np.ndarray, config: SolveConfig) -> _Run:
    x = start.astype(complex)
    with np.errstate(all="ignore"):
        residual = system.residual(x)
        current = _norm(residual)
        for iteration in range(config.max_iterations):
            if not np.isfinite(current):
                return _Run(None, "non-finite residual")
            if current <= config.tol:
                break
            jacobian = system.jacobian(x)
            step, *_ = np.linalg.lstsq(jacobian, -residual, rcond=None)
            for factor in config.damping_schedule:
                candidate = x + factor * step
                candidate_residual = system.residual(candidate)
                candidate_norm = _norm(candidate_residual)
                if np.isfinite(candidate_norm) and candidate_norm < current:
                    x, residual, current = candidate, candidate_residual, candidate_norm
                    break
            else:
                logger.debug("Stalled at residual %.3e after %d steps", current, iteration)
                return _Run(None, "stalled")

    if current > config.tol:
        return _Run(None, "no convergence")
    if system.degenerate(x, config.degeneracy_radius):
        return _Run(None, "degenerate")
    return _Run(x, "converged")


def _sort_key(x: np.ndarray) -> tuple[float, ...]:
    rounded = np.round(x, 8)
    return tuple(v for z in rounded for v in (float(z.real), float(z.imag)))


def deduplicate(solutions: list[np.ndarray], radius: float) -> list[np.ndarray]:
    """Keep the first of every group of solutions closer than radius in max-norm."""
    kept: list[np.ndarray] = []
    for x in solutions:
        if all(float(np.max(np.abs(x - y))) >= radius for y in kept):
            kept.append(x)
    return kept


def newton_solve(system: ResidualSystem, config: Optional[SolveConfig] = None) -> SolveResult:
    """Solve a residual system by damped Newton from random starts.

    Starts are drawn up front from default_rng(seed), restarts run on a
    thread pool, and distinct solutions are returned in canonical order, so
    equal configurations give identical lists.

    Args:
        system: Residual system
        config: Solver parameters (defaults if omitted)

    Returns:
        SolveResult; failures are reported in diagnostics, never raised
    """
    config = config or SolveConfig()
    rng = np.random.default_rng(config.seed)
    starts = [system.random_start(rng) for _ in range(config.restarts)]

    with ThreadPoolExecutor(max_workers=config.max_workers) as pool:
        runs = list(pool.map(lambda start: _newton(system, start, config), starts))

    found = [run.solution for run in runs if run.solution is not None]
    rejected = sum(run.reason == "degenerate" for run in runs)
    solutions = sorted(deduplicate(found, config.dedup_radius), key=_sort_key)

    diagnostics = []
    failures: dict[str, int] = {}
    for run in runs:
        if run.solution is None:
            failures[run.reason] = failures.get(run.reason, 0) + 1
    for reason, count in sorted(failures.items()):
        diagnostics.append(f"{count} of {config.restarts} restarts: {reason}")
    if not solutions:
        diagnostics.append("no solution found")

    logger.info(
        "Newton: %d restarts, %d converged, %d rejected, %d distinct solutions",
        config.restarts,
        len(found),
        rejected,
        len(solutions),
    )
    return SolveResult(
        solutions=solutions,
        attempts=config.restarts,
        converged=len(found),
        rejected=rejected,
        diagnostics=diagnostics,
    )
