"""Edge paths on the boundary of a truncated triangulation.

A vertex of the doubly truncated simplex is a pair (tet, v0v1v2). It lies on
the face opposite v3 and is identified with (tet', sigma(v0)sigma(v1)sigma(v2))
across that face's pairing.
"""

from pgl_gluing.exceptions import BrokenPathError
from pgl_gluing.models.triangulation import (
    ConcreteTriangulation,
    PeripheralCurve,
    VertexTriple,
)

BoundaryVertex = tuple[int, VertexTriple]


def glued_vertex(triangulation: ConcreteTriangulation, vertex: BoundaryVertex) -> BoundaryVertex | None:
    """The vertex identified with `vertex` across the face it lies on.

    Returns:
        The identified vertex, or None if that face is open
    """
    tet, triple = vertex
    missing = 6 - sum(triple)
    pairing = triangulation.pairing(tet, missing)
    if pairing is None:
        return None
    image = (pairing.perm(triple[0]), pairing.perm(triple[1]), pairing.perm(triple[2]))
    return pairing.to_tet, image


def same_boundary_vertex(
    triangulation: ConcreteTriangulation,
    a: BoundaryVertex,
    b: BoundaryVertex,
) -> bool:
    """Whether two truncation vertices coincide on the boundary."""
    return a == b or glued_vertex(triangulation, a) == b


def check_curve(triangulation: ConcreteTriangulation, curve: PeripheralCurve) -> None:
    """Validate that a curve is a closed edge path.

    Args:
        triangulation: Triangulation carrying the curve
        curve: Curve to check

    Raises:
        BrokenPathError: If a step references a missing simplex or consecutive
            steps (cyclically) do not meet
    """
    if not curve.steps:
        return

    for index, step in enumerate(curve.steps):
        if step.tet >= triangulation.num_tet:
            raise BrokenPathError(
                f"curve {curve.name!r} step {index}: no tetrahedron {step.tet}"
            )

    count = len(curve.steps)
    for index, step in enumerate(curve.steps):
        following = curve.steps[(index + 1) % count]
        end = (step.tet, step.endpoints()[1])
        start = (following.tet, following.endpoints()[0])
        if not same_boundary_vertex(triangulation, end, start):
            raise BrokenPathError(
                f"broken edge path: curve {curve.name!r} step {index} ends at {end}, "
                f"step {(index + 1) % count} starts at {start}"
            )
