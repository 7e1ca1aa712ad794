"""Evaluation of gluing systems at a shape-coordinate vector."""

from typing import Sequence, Union

import numpy as np

from pgl_gluing.exceptions import DegenerateShapeError, ValidationError
from pgl_gluing.gluing.nz import to_nz
from pgl_gluing.lattice.points import subsimplices
from pgl_gluing.models.equations import GluingEquation
from pgl_gluing.models.nz import NZMatrices
from pgl_gluing.models.triangulation import ConcreteTriangulation
from pgl_gluing.ptolemy.pullback import ShapeAssignment, shape_assignment
from pgl_gluing.utils.logging import get_logger
from pgl_gluing.utils.residuals import ResidualReport, build_report

logger = get_logger(__name__)


def check_nondegenerate(z: np.ndarray, tol: float) -> None:
    """Raise if some coordinate lies within tol of 0 or 1.

    Raises:
        DegenerateShapeError: Naming the first offending column
    """
    for j, value in enumerate(z):
        if abs(value) <= tol or abs(1 - value) <= tol:
            raise DegenerateShapeError(f"shape coordinate {value:.6g} in column {j} is within {tol:.1e} of 0 or 1")


def evaluate_rows(nz: NZMatrices, z: Sequence[complex]) -> np.ndarray:
    """sign * prod z^A (1-z)^B for every row."""
    values = np.asarray(z, dtype=complex)
    if values.shape[0] != nz.a.shape[1]:
        raise ValidationError(f"expected {nz.a.shape[1]} shape coordinates, got {values.shape[0]}")
    factors = values[np.newaxis, :] ** nz.a * (1 - values)[np.newaxis, :] ** nz.b
    return nz.signs * np.prod(factors, axis=1)


def verify_solution(
    system: Union[NZMatrices, Sequence[GluingEquation]],
    z: Sequence[complex],
    tol: float = 1e-9,
) -> ResidualReport:
    """Residual of a shape vector against a gluing system.

    The residual of a row is |sign * prod z^A (1-z)^B - 1|.

    Args:
        system: NZ matrices, or gluing equations to convert
        z: Shape coordinate per column
        tol: Pass threshold, also the degeneracy radius around 0 and 1

    Returns:
        ResidualReport over all rows

    Raises:
        DegenerateShapeError: If some coordinate is within tol of 0 or 1
    """
    nz = system if isinstance(system, NZMatrices) else to_nz(list(system))
    values = np.asarray(z, dtype=complex)
    check_nondegenerate(values, tol)
    residuals = np.abs(evaluate_rows(nz, values) - 1)
    report = build_report([float(r) for r in residuals], list(nz.row_labels), tol)
    logger.debug("Gluing residual %.3e over %d rows", report.max_residual, report.rows)
    return report


def split_shapes(
    triangulation: ConcreteTriangulation,
    n: int,
    z: Sequence[complex],
) -> list[ShapeAssignment]:
    """Full six-edge shape assignment of every simplex from a column vector.

    Raises:
        ValidationError: If the vector length does not match the columns
    """
    subs = subsimplices(n)
    if len(z) != triangulation.num_tet * len(subs):
        raise ValidationError(
            f"expected {triangulation.num_tet * len(subs)} shape coordinates, got {len(z)}"
        )
    return [
        shape_assignment(n, {s: complex(z[tet * len(subs) + j]) for j, s in enumerate(subs)})
        for tet in range(triangulation.num_tet)
    ]
