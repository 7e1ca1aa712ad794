"""Level-l cusp equations of peripheral edge paths.

Along a curve, a short step at (tet, v0v1v2) contributes
z^{v0+v1}_{(l-1)v0+(n-1-l)v1} to the power -eps*dir, and a middle step
contributes -prod_{k=1}^{n-1-l} X_{k v2 + l v0 + (n-k-l) v1} to the power
eps*dir, where eps is the orientation sign of (v0, v1, v2, v3). The minus
signs of middle steps are collected in rhs_sign.
"""

from collections import defaultdict

import numpy as np

from pgl_gluing.gluing.generator import shape_columns
from pgl_gluing.lattice.points import LatticePoint, ShapeRole, add, edge_role, scale, unit
from pgl_gluing.models.equations import CuspEquation, ShapeTerm, XTerm
from pgl_gluing.models.nz import Column
from pgl_gluing.models.triangulation import ConcreteTriangulation, CurveStepKind, PeripheralCurve
from pgl_gluing.ptolemy.coordinates import orientation_sign, x_coordinate_terms
from pgl_gluing.triangulation.curves import check_curve
from pgl_gluing.utils.logging import get_logger

logger = get_logger(__name__)

_ROLE_SLOT = {ShapeRole.Z: 0, ShapeRole.Z_PRIME: 1, ShapeRole.Z_DOUBLE_PRIME: 2}


def _point(coefficients: dict[int, int]) -> LatticePoint:
    point: LatticePoint = (0, 0, 0, 0)
    for vertex, k in coefficients.items():
        point = add(point, scale(k, unit(vertex)))
    return point


def _expand(
    shape_terms: list[ShapeTerm],
    x_terms: list[XTerm],
    rhs_sign: int,
    columns: list[Column],
) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...], int]:
    """Write every X^a as (-1)^a prod (z^e_s)^a and collect role exponents."""
    position = {col: i for i, col in enumerate(columns)}
    exponents = [[0] * len(columns) for _ in range(3)]
    sign = rhs_sign

    def add_term(tet: int, s: LatticePoint, e: LatticePoint, exponent: int) -> None:
        exponents[_ROLE_SLOT[edge_role(e)]][position[(tet, s)]] += exponent

    for term in shape_terms:
        add_term(term.tet, term.s, term.e, term.exponent)
    for x in x_terms:
        if x.exponent % 2:
            sign = -sign
        for s, e in x_coordinate_terms(x.t):
            add_term(x.tet, s, e, x.exponent)
    return tuple(exponents[0]), tuple(exponents[1]), tuple(exponents[2]), sign


def generate_cusp(
    triangulation: ConcreteTriangulation,
    n: int,
    curve: PeripheralCurve,
) -> list[CuspEquation]:
    """Cusp equations of a curve at levels 1..n-1.

    Args:
        triangulation: Triangulation carrying the curve
        n: Level, n >= 2
        curve: Closed edge path

    Returns:
        One equation per level

    Raises:
        BrokenPathError: If the curve is not a closed edge path
    """
    check_curve(triangulation, curve)
    columns = shape_columns(triangulation, n)
    equations = []

    for l in range(1, n):
        shapes: dict[tuple[int, LatticePoint, LatticePoint], int] = defaultdict(int)
        xs: dict[tuple[int, LatticePoint], int] = defaultdict(int)
        middles = 0
        for step in curve.steps:
            v0, v1, v2 = step.triple
            eps = orientation_sign(v0, v1, v2)
            if step.kind == CurveStepKind.SHORT:
                s = _point({v0: l - 1, v1: n - 1 - l})
                e = add(unit(v0), unit(v1))
                shapes[(step.tet, s, e)] += -eps * step.direction
            else:
                middles += 1
                for k in range(1, n - l):
                    t = _point({v2: k, v0: l, v1: n - k - l})
                    xs[(step.tet, t)] += eps * step.direction

        shape_terms = [
            ShapeTerm(tet=tet, s=s, e=e, exponent=exp)
            for (tet, s, e), exp in sorted(shapes.items())
            if exp
        ]
        x_terms = [XTerm(tet=tet, t=t, exponent=exp) for (tet, t), exp in sorted(xs.items()) if exp]
        rhs_sign = -1 if middles % 2 else 1
        a, b, c, expanded_sign = _expand(shape_terms, x_terms, rhs_sign, columns)
        equations.append(
            CuspEquation(
                curve=curve.name,
                level=l,
                shape_terms=tuple(shape_terms),
                x_terms=tuple(x_terms),
                rhs_sign=rhs_sign,
                a=a,
                b=b,
                c=c,
                expanded_sign=expanded_sign,
            )
        )

    logger.info("Generated %d cusp equations for curve %s at n=%d", len(equations), curve.name, n)
    return equations


def cusp_nz_rows(equations: list[CuspEquation]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Cusp equations as rows prod z^A (1-z)^B = sign.

    Returns:
        (A, B, signs) with A = A' - C', B = C' - B' and
        sign = expanded_sign * (-1)^sum(C')
    """
    a_prime = np.array([eq.a for eq in equations], dtype=np.int64)
    b_prime = np.array([eq.b for eq in equations], dtype=np.int64)
    c_prime = np.array([eq.c for eq in equations], dtype=np.int64)
    parity = c_prime.sum(axis=1) % 2
    signs = np.array([eq.expanded_sign for eq in equations], dtype=np.int64) * np.where(
        parity == 1, -1, 1
    )
    return a_prime - c_prime, c_prime - b_prime, signs
