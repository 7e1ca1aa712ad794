"""The monomial map from Ptolemy coordinates to shape coordinates.

    z   = c_{s+1001} c_{s+0110} / (c_{s+1010} c_{s+0101})
    z'  = c_{s+0101} c_{s+1010} / (c_{s+1100} c_{s+0011})
    z'' = -c_{s+1100} c_{s+0011} / (c_{s+1001} c_{s+0110})
"""

from typing import Mapping, Sequence

import numpy as np

from pgl_gluing.exceptions import NonGenericDecorationError, RelationResidualError
from pgl_gluing.lattice.points import (
    EDGES,
    LatticePoint,
    ShapeRole,
    add,
    edge_role,
    subsimplices,
)
from pgl_gluing.lattice.quotient import point_quotient
from pgl_gluing.models.triangulation import ConcreteTriangulation
from pgl_gluing.ptolemy.pullback import ShapeAssignment
from pgl_gluing.ptolemy.relations import single_relation_residual, variable_classes
from pgl_gluing.utils.logging import get_logger

logger = get_logger(__name__)

_E1001 = (1, 0, 0, 1)
_E0110 = (0, 1, 1, 0)
_E1100 = (1, 1, 0, 0)
_E0011 = (0, 0, 1, 1)
_E1010 = (1, 0, 1, 0)
_E0101 = (0, 1, 0, 1)

# (numerator edges, denominator edges, sign) per role
_MONOMIALS: dict[ShapeRole, tuple[tuple[LatticePoint, ...], tuple[LatticePoint, ...], int]] = {
    ShapeRole.Z: ((_E1001, _E0110), (_E1010, _E0101), 1),
    ShapeRole.Z_PRIME: ((_E0101, _E1010), (_E1100, _E0011), 1),
    ShapeRole.Z_DOUBLE_PRIME: ((_E1100, _E0011), (_E1001, _E0110), -1),
}

# 1 - z = c_{s+1100} c_{s+0011} / (c_{s+1010} c_{s+0101})
_ONE_MINUS_Z = ((_E1100, _E0011), (_E1010, _E0101), 1)


def mu(c: Mapping[LatticePoint, complex], n: int, tol: float = 1e-9) -> ShapeAssignment:
    """Shape assignment of a single-simplex Ptolemy assignment.

    Args:
        c: Coordinates at every non-vertex point of level n
        n: Level
        tol: Relative Ptolemy residual allowed

    Returns:
        z^e_s for every subsimplex and edge

    Raises:
        NonGenericDecorationError: If a coordinate vanishes
        RelationResidualError: If the Ptolemy relations fail beyond tol
    """
    for s in subsimplices(n):
        for e in EDGES:
            if c[add(s, e)] == 0:
                raise NonGenericDecorationError(f"vanishing Ptolemy coordinate at {add(s, e)}")

    residual = single_relation_residual(n, c)
    if residual > tol:
        raise RelationResidualError(f"Ptolemy relation residual {residual:.3e} exceeds {tol:.1e}")

    z: ShapeAssignment = {}
    for s in subsimplices(n):
        for e in EDGES:
            num, den, sign = _MONOMIALS[edge_role(e)]
            z[(s, e)] = sign * c[add(s, num[0])] * c[add(s, num[1])] / (
                c[add(s, den[0])] * c[add(s, den[1])]
            )
    return z


def mu_exponent_matrix(
    triangulation: ConcreteTriangulation,
    n: int,
    full: bool = False,
) -> tuple[np.ndarray, np.ndarray]:
    """Exponent matrix of mu in the Ptolemy variables.

    By default rows are the shape coordinates z of every column (tet, s)
    followed by the factors 1 - z of every column. With full=True there is
    one row per (tet, s, e) instead.

    Returns:
        (exponents, signs): integer matrix with one column per Ptolemy
        variable, and the sign of each row's monomial
    """
    quotient = point_quotient(triangulation, n)
    position = {index: i for i, index in enumerate(variable_classes(triangulation, n))}

    def row(tet: int, s: LatticePoint, monomial: tuple) -> tuple[list[int], int]:
        num, den, sign = monomial
        exps = [0] * len(position)
        for edges, step in ((num, 1), (den, -1)):
            for e in edges:
                index, ident = quotient.class_of(tet, add(s, e))
                exps[position[index]] += step
                sign *= ident
        return exps, sign

    columns = [(tet, s) for tet in range(triangulation.num_tet) for s in subsimplices(n)]
    rows: list[list[int]] = []
    signs: list[int] = []
    if full:
        for tet, s in columns:
            for e in EDGES:
                exps, sign = row(tet, s, _MONOMIALS[edge_role(e)])
                rows.append(exps)
                signs.append(sign)
    else:
        for monomial in (_MONOMIALS[ShapeRole.Z], _ONE_MINUS_Z):
            for tet, s in columns:
                exps, sign = row(tet, s, monomial)
                rows.append(exps)
                signs.append(sign)

    return np.array(rows, dtype=np.int64), np.array(signs, dtype=np.int64)


def mu_on_triangulation(
    triangulation: ConcreteTriangulation,
    n: int,
    values: Sequence[complex],
) -> np.ndarray:
    """Shape coordinates z of every column induced by Ptolemy class values."""
    exponents, signs = mu_exponent_matrix(triangulation, n)
    width = len(exponents) // 2
    logs = np.log(np.asarray(values, dtype=complex))
    return signs[:width] * np.exp(exponents[:width] @ logs)
