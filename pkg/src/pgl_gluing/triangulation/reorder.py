"""Vertex reordering of concrete triangulations.

Reordering simplex i by sigma_i means new vertex v of simplex i is old vertex
sigma_i(v). Pairings are conjugated, orientation signs pick up sgn(sigma_i)
and curve triples are relabeled.
"""

from typing import Optional, Sequence

from pgl_gluing.exceptions import TriangulationError
from pgl_gluing.models.permutation import Perm4
from pgl_gluing.models.triangulation import (
    ConcreteTriangulation,
    CurveStep,
    FacePairing,
    PeripheralCurve,
)
from pgl_gluing.triangulation.orientation import is_consistent
from pgl_gluing.utils.logging import get_logger

logger = get_logger(__name__)


def _relabel_curve(curve: PeripheralCurve, inverses: Sequence[Perm4]) -> PeripheralCurve:
    steps = []
    for step in curve.steps:
        inv = inverses[step.tet]
        steps.append(
            CurveStep(
                tet=step.tet,
                triple=(inv(step.triple[0]), inv(step.triple[1]), inv(step.triple[2])),
                kind=step.kind,
                direction=step.direction,
            )
        )
    return PeripheralCurve(name=curve.name, steps=tuple(steps))


def reorder(triangulation: ConcreteTriangulation, sigmas: Sequence[Perm4]) -> ConcreteTriangulation:
    """Reorder the vertices of every simplex.

    Args:
        triangulation: Valid triangulation
        sigmas: One permutation per simplex

    Returns:
        Triangulation whose pairing across new face f of simplex i is
        sigma_j^-1 * tau * sigma_i, where tau is the old pairing across
        face sigma_i(f)

    Raises:
        TriangulationError: If the number of permutations is wrong
    """
    if len(sigmas) != triangulation.num_tet:
        raise TriangulationError(
            f"expected {triangulation.num_tet} permutations, got {len(sigmas)}"
        )

    inverses = [s.inverse() for s in sigmas]
    rows: list[tuple[Optional[FacePairing], ...]] = []
    for tet, sigma in enumerate(sigmas):
        row: list[Optional[FacePairing]] = []
        for face in range(4):
            old = triangulation.pairing(tet, sigma(face))
            if old is None:
                row.append(None)
                continue
            perm = inverses[old.to_tet] * old.perm * sigma
            row.append(FacePairing(from_tet=tet, from_face=face, to_tet=old.to_tet, perm=perm))
        rows.append(tuple(row))

    eps = tuple(e * s.sign for e, s in zip(triangulation.eps, sigmas))
    result = ConcreteTriangulation(
        name=triangulation.name,
        num_tet=triangulation.num_tet,
        pairings=tuple(rows),
        eps=eps,
        curves=tuple(_relabel_curve(c, inverses) for c in triangulation.curves),
    )
    assert is_consistent(result)

    logger.debug(
        "Reordered %s by %s; eps %s -> %s",
        triangulation.name or "<unnamed>",
        [str(s) for s in sigmas],
        triangulation.eps,
        eps,
    )
    return result
