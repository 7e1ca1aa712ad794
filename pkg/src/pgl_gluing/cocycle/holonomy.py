"""Cocycle conditions and holonomy along edge paths."""

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from pgl_gluing.cocycle.matrices import inverse, pgl_equal, product
from pgl_gluing.cocycle.natural import (
    DoublyTruncatedCocycle,
    EdgeKind,
    VertexTriple,
    edge_target,
    pgl_cocycle_from_shapes,
)
from pgl_gluing.gluing.verify import split_shapes
from pgl_gluing.models.triangulation import ConcreteTriangulation, CurveStepKind, PeripheralCurve
from pgl_gluing.triangulation.curves import check_curve
from pgl_gluing.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class TruncatedFace:
    """A 2-cell of the doubly truncated simplex as a closed vertex cycle."""

    kind: str  # "vertex hexagon", "face hexagon" or "square"
    vertices: tuple[VertexTriple, ...]


def doubly_truncated_faces() -> list[TruncatedFace]:
    """The 14 faces: 4 vertex hexagons, 4 face hexagons and 6 squares."""
    faces = []
    for v0 in range(4):
        a, b, c = (v for v in range(4) if v != v0)
        faces.append(
            TruncatedFace(
                "vertex hexagon",
                ((v0, a, b), (v0, a, c), (v0, c, a), (v0, c, b), (v0, b, c), (v0, b, a)),
            )
        )
    for v3 in range(4):
        a, b, c = (v for v in range(4) if v != v3)
        faces.append(
            TruncatedFace(
                "face hexagon",
                ((a, b, c), (b, a, c), (b, c, a), (c, b, a), (c, a, b), (a, c, b)),
            )
        )
    for a in range(4):
        for b in range(a + 1, 4):
            c, d = (v for v in range(4) if v not in (a, b))
            faces.append(TruncatedFace("square", ((a, b, c), (a, b, d), (b, a, d), (b, a, c))))
    return faces


def path_product(cocycle: DoublyTruncatedCocycle, vertices: Sequence[VertexTriple]) -> np.ndarray:
    """Ordered product of labels around a closed vertex cycle."""
    count = len(vertices)
    labels = [cocycle.label(vertices[i], vertices[(i + 1) % count]) for i in range(count)]
    return product(labels, cocycle.n)


def face_products(cocycle: DoublyTruncatedCocycle) -> list[tuple[TruncatedFace, np.ndarray]]:
    """Product of labels around every face."""
    return [(face, path_product(cocycle, face.vertices)) for face in doubly_truncated_faces()]


def check_cocycle(cocycle: DoublyTruncatedCocycle, tol: float = 1e-8) -> list[TruncatedFace]:
    """Faces whose product is not the identity in PGL; empty for a cocycle."""
    identity = np.eye(cocycle.n, dtype=complex)
    return [face for face, m in face_products(cocycle) if not pgl_equal(m, identity, tol)]


def triangulation_cocycle(
    triangulation: ConcreteTriangulation,
    n: int,
    z: Sequence[complex],
    tol: float = 1e-9,
) -> list[DoublyTruncatedCocycle]:
    """Natural PGL cocycle of every simplex from a shape-coordinate vector.

    Args:
        triangulation: Triangulation
        n: Level
        z: z^{1100}_s per column (tet, lexicographic s)
        tol: Allowed violation of the shape relations

    Raises:
        ValidationError: If the vector length does not match the columns
    """
    return [pgl_cocycle_from_shapes(shapes, n, tol) for shapes in split_shapes(triangulation, n, z)]


def holonomy(
    triangulation: ConcreteTriangulation,
    cocycles: Sequence[DoublyTruncatedCocycle],
    curve: PeripheralCurve,
) -> np.ndarray:
    """Ordered product of edge labels along a closed edge path.

    Steps with direction -1 contribute the inverse label. The empty path
    gives the identity.

    Raises:
        BrokenPathError: If the curve is not closed
    """
    n = cocycles[0].n if cocycles else 1
    if not curve.steps:
        return np.eye(n, dtype=complex)
    check_curve(triangulation, curve)

    factors = []
    for step in curve.steps:
        kind = EdgeKind.SHORT if step.kind == CurveStepKind.SHORT else EdgeKind.MIDDLE
        cocycle = cocycles[step.tet]
        label = cocycle.label(step.triple, edge_target(step.triple, kind))
        factors.append(label if step.direction == 1 else inverse(label))
    result = product(factors, n)
    logger.debug("Holonomy of %s over %d steps", curve.name, len(curve.steps))
    return result
