"""Ptolemy relations on a triangulation.

Ptolemy variables live on non-vertex integral points. Each occurrence of a
coordinate in a relation is resolved to its class representative and carries
the identification sign relating the two.
"""

from typing import Mapping, Sequence

import numpy as np

from pgl_gluing.exceptions import ValidationError
from pgl_gluing.lattice.points import LatticePoint, PointKind, add, lattice_points, subsimplices
from pgl_gluing.lattice.quotient import PointQuotient, point_quotient
from pgl_gluing.models.equations import PtolemyFactor, PtolemyRelation
from pgl_gluing.models.triangulation import ConcreteTriangulation
from pgl_gluing.ptolemy.pullback import PtolemyAssignment
from pgl_gluing.utils.logging import get_logger
from pgl_gluing.utils.residuals import ResidualReport, build_report

logger = get_logger(__name__)

# (first, second, third) terms: c_{s+1001}c_{s+0110} + c_{s+1100}c_{s+0011} = c_{s+1010}c_{s+0101}
RELATION_EDGES: tuple[tuple[LatticePoint, LatticePoint], ...] = (
    ((1, 0, 0, 1), (0, 1, 1, 0)),
    ((1, 1, 0, 0), (0, 0, 1, 1)),
    ((1, 0, 1, 0), (0, 1, 0, 1)),
)


def variable_classes(triangulation: ConcreteTriangulation, n: int) -> list[int]:
    """Class indices of the Ptolemy variables, in variable order."""
    return [c.index for c in point_quotient(triangulation, n).non_vertex()]


def _factor(quotient: PointQuotient, tet: int, t: LatticePoint, position: Mapping[int, int]) -> PtolemyFactor:
    index, sign = quotient.class_of(tet, t)
    return PtolemyFactor(tet=tet, t=t, point=position[index], sign=sign)


def generate_relations(triangulation: ConcreteTriangulation, n: int) -> list[PtolemyRelation]:
    """One Ptolemy relation per (tet, subsimplex).

    Factor point indices refer to the variable order of variable_classes.

    Args:
        triangulation: Valid triangulation
        n: Level, n >= 2

    Returns:
        Relations in column order (tet, then lexicographic s)
    """
    quotient = point_quotient(triangulation, n)
    position = {index: i for i, index in enumerate(variable_classes(triangulation, n))}
    relations = []
    for tet in range(triangulation.num_tet):
        for s in subsimplices(n):
            pairs = [
                (
                    _factor(quotient, tet, add(s, e1), position),
                    _factor(quotient, tet, add(s, e2), position),
                )
                for e1, e2 in RELATION_EDGES
            ]
            relations.append(
                PtolemyRelation(tet=tet, s=s, first=pairs[0], second=pairs[1], third=pairs[2])
            )
    logger.info(
        "Generated %d Ptolemy relations over %d variables for %s at n=%d",
        len(relations),
        len(position),
        triangulation.name or "<unnamed>",
        n,
    )
    return relations


def relation_residuals(relations: Sequence[PtolemyRelation], values: Sequence[complex]) -> np.ndarray:
    """Relative residual of each relation at class values.

    |T1 + T2 - T3| / max(|T1|, |T2|, |T3|) where each term is the signed
    product of its two variables.
    """
    values = np.asarray(values, dtype=complex)
    residuals = np.empty(len(relations))
    for i, rel in enumerate(relations):
        terms = [
            rel.term_sign(k) * values[pair[0].point] * values[pair[1].point]
            for k, pair in enumerate((rel.first, rel.second, rel.third))
        ]
        scale = max(abs(t) for t in terms) or 1.0
        residuals[i] = abs(terms[0] + terms[1] - terms[2]) / scale
    return residuals


def verify_ptolemy(relations: Sequence[PtolemyRelation], values: Sequence[complex], tol: float) -> ResidualReport:
    """Grade class values against Ptolemy relations."""
    residuals = relation_residuals(relations, values)
    labels = [f"tet {r.tet} s {''.join(map(str, r.s))}" for r in relations]
    return build_report(list(residuals), labels, tol)


def ptolemy_from_classes(
    triangulation: ConcreteTriangulation,
    n: int,
    values: Sequence[complex],
) -> list[PtolemyAssignment]:
    """Expand class values to one assignment per simplex.

    (c_tet)_t = sign * value of the class of (tet, t); vertex points get 1.

    Raises:
        ValidationError: If the number of values does not match the variables
    """
    quotient = point_quotient(triangulation, n)
    position = {index: i for i, index in enumerate(variable_classes(triangulation, n))}
    if len(values) != len(position):
        raise ValidationError(f"expected {len(position)} Ptolemy values, got {len(values)}")

    assignments = []
    for tet in range(triangulation.num_tet):
        c: PtolemyAssignment = {}
        for t in lattice_points(n):
            index, sign = quotient.class_of(tet, t)
            if quotient.classes[index].kind == PointKind.VERTEX:
                c[t] = 1 + 0j
            else:
                c[t] = sign * complex(values[position[index]])
        assignments.append(c)
    return assignments


def single_relation_residual(n: int, c: Mapping[LatticePoint, complex]) -> float:
    """Largest relative Ptolemy residual of one simplex's assignment."""
    worst = 0.0
    for s in subsimplices(n):
        terms = [c[add(s, e1)] * c[add(s, e2)] for e1, e2 in RELATION_EDGES]
        scale = max(abs(t) for t in terms) or 1.0
        worst = max(worst, abs(terms[0] + terms[1] - terms[2]) / scale)
    return worst
