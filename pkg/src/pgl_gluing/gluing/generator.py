"""Generalized gluing equations.

For each non-vertex integral point p the equation is the product, over
representatives (tet, t) of p and decompositions t = s + e, of
(z^e_{s,tet})^eps_tet, set equal to 1.
"""

from functools import lru_cache

from pgl_gluing.lattice.points import (
    EDGES,
    ShapeRole,
    edge_role,
    is_nonnegative,
    sub,
    subsimplices,
)
from pgl_gluing.lattice.quotient import point_quotient
from pgl_gluing.models.equations import GluingEquation, ShapeTerm
from pgl_gluing.models.nz import Column
from pgl_gluing.models.triangulation import ConcreteTriangulation
from pgl_gluing.utils.logging import get_logger

logger = get_logger(__name__)

_ROLE_SLOT = {ShapeRole.Z: 0, ShapeRole.Z_PRIME: 1, ShapeRole.Z_DOUBLE_PRIME: 2}


def shape_columns(triangulation: ConcreteTriangulation, n: int) -> list[Column]:
    """Columns (tet, s): simplices in index order, subsimplices lexicographic."""
    return [(tet, s) for tet in range(triangulation.num_tet) for s in subsimplices(n)]


def column_signs(triangulation: ConcreteTriangulation, n: int) -> list[int]:
    """Orientation sign of each column's simplex."""
    per_tet = len(subsimplices(n))
    return [e for e in triangulation.eps for _ in range(per_tet)]


@lru_cache(maxsize=32)
def _generate(triangulation: ConcreteTriangulation, n: int) -> tuple[GluingEquation, ...]:
    columns = shape_columns(triangulation, n)
    position = {col: i for i, col in enumerate(columns)}
    equations = []

    for point_class in point_quotient(triangulation, n).non_vertex():
        exponents = [[0] * len(columns) for _ in range(3)]
        terms = []
        for tet, t in point_class.reps:
            eps = triangulation.eps[tet]
            for e in EDGES:
                s = sub(t, e)
                if not is_nonnegative(s):
                    continue
                exponents[_ROLE_SLOT[edge_role(e)]][position[(tet, s)]] += eps
                terms.append(ShapeTerm(tet=tet, s=s, e=e, exponent=eps))

        terms.sort(key=lambda term: (term.tet, term.s, term.e))
        equations.append(
            GluingEquation(
                point=point_class.index,
                label=point_class.label,
                kind=point_class.kind,
                terms=tuple(terms),
                a=tuple(exponents[0]),
                b=tuple(exponents[1]),
                c=tuple(exponents[2]),
            )
        )

    logger.info(
        "Generated %d gluing equations for %s at n=%d",
        len(equations),
        triangulation.name or "<unnamed>",
        n,
    )
    return tuple(equations)


def generate(triangulation: ConcreteTriangulation, n: int) -> list[GluingEquation]:
    """Generate the gluing equations of a triangulation.

    Args:
        triangulation: Valid triangulation
        n: Level, n >= 2

    Returns:
        One equation per non-vertex integral point, ordered by representative

    Raises:
        LatticeError: If n < 2
    """
    return list(_generate(triangulation, n))
