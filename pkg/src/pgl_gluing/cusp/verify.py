"""Evaluation of cusp equations and of the diagonal ratios they encode."""

from typing import Mapping, Sequence

import numpy as np

from pgl_gluing.cocycle.matrices import inverse
from pgl_gluing.cocycle.natural import DoublyTruncatedCocycle, EdgeKind, edge_target
from pgl_gluing.cusp.generator import cusp_nz_rows
from pgl_gluing.gluing.verify import check_nondegenerate
from pgl_gluing.lattice.points import LatticePoint
from pgl_gluing.models.equations import CuspEquation
from pgl_gluing.models.triangulation import CurveStepKind, PeripheralCurve
from pgl_gluing.ptolemy.coordinates import x_coordinate_from_shapes
from pgl_gluing.utils.logging import get_logger
from pgl_gluing.utils.residuals import ResidualReport, build_report

logger = get_logger(__name__)

ShapeMap = Mapping[tuple[LatticePoint, LatticePoint], complex]


def verify_cusp(
    equations: Sequence[CuspEquation],
    z: Sequence[complex],
    tol: float = 1e-9,
) -> ResidualReport:
    """Residual of a shape vector against cusp equations.

    Each equation is evaluated in its expanded form; the residual is
    |prod z^A (1-z)^B - sign|.

    Raises:
        DegenerateShapeError: If some coordinate is within tol of 0 or 1
    """
    values = np.asarray(z, dtype=complex)
    check_nondegenerate(values, tol)
    if not equations:
        return build_report([], [], tol)
    a, b, signs = cusp_nz_rows(list(equations))
    products = np.prod(values[np.newaxis, :] ** a * (1 - values)[np.newaxis, :] ** b, axis=1)
    residuals = np.abs(products - signs)
    labels = [f"{eq.curve} level {eq.level}" for eq in equations]
    report = build_report([float(r) for r in residuals], labels, tol)
    logger.debug("Cusp residual %.3e over %d equations", report.max_residual, report.rows)
    return report


def monomial_value(equation: CuspEquation, shapes: Sequence[ShapeMap]) -> complex:
    """Product of the shape and X factors of an equation, without rhs_sign.

    Args:
        equation: Cusp equation
        shapes: Six-edge shape assignment per simplex
    """
    value = 1 + 0j
    for term in equation.shape_terms:
        value *= shapes[term.tet][(term.s, term.e)] ** term.exponent
    for x in equation.x_terms:
        value *= x_coordinate_from_shapes(shapes[x.tet], x.t) ** x.exponent
    return value


def diagonal_monomial(
    cocycles: Sequence[DoublyTruncatedCocycle],
    curve: PeripheralCurve,
    level: int,
) -> complex:
    """Product along a curve of M_ll / M_{l+1,l+1} over its edge labels.

    Labels are upper triangular, so this telescopes the level-l diagonal
    ratio of the holonomy. Reversed steps use the inverse label.
    """
    value = 1 + 0j
    for step in curve.steps:
        kind = EdgeKind.SHORT if step.kind == CurveStepKind.SHORT else EdgeKind.MIDDLE
        label = cocycles[step.tet].label(step.triple, edge_target(step.triple, kind))
        if step.direction == -1:
            label = inverse(label)
        value *= label[level - 1, level - 1] / label[level, level]
    return complex(value)
