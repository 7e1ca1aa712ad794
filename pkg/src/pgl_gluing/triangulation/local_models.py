"""Open triangulations modelling a neighborhood of an edge or a face.

These are the configurations on which edge and face equations are checked
against decoration-induced Ptolemy assignments.
"""

from pgl_gluing.exceptions import TriangulationError
from pgl_gluing.models.triangulation import ConcreteTriangulation
from pgl_gluing.triangulation.parser import build_triangulation

_SWAP_23 = (0, 1, 3, 2)
_IDENTITY = (0, 1, 2, 3)


def edge_local_model(k: int) -> ConcreteTriangulation:
    """k simplices glued cyclically around their common edge 01.

    Face 2 of simplex i is glued to face 3 of simplex i+1 by (23), so
    vertex 3 of simplex i is vertex 2 of simplex i+1. Faces 0 and 1 stay
    open.

    Args:
        k: Number of simplices around the edge, k >= 1

    Raises:
        TriangulationError: If k < 1
    """
    if k < 1:
        raise TriangulationError(f"edge local model needs k >= 1, got {k}")

    neighbors = [[None, None, (i + 1) % k, (i - 1) % k] for i in range(k)]
    gluings = [[None, None, _SWAP_23, _SWAP_23] for _ in range(k)]
    return build_triangulation(
        neighbors,  # type: ignore[arg-type]
        gluings,  # type: ignore[arg-type]
        name=f"edge_local_{k}",
        allow_open=True,
    )


def face_local_model() -> ConcreteTriangulation:
    """Two simplices glued along face 012 by the identity; eps = (+1, -1)."""
    neighbors = [[None, None, None, 1], [None, None, None, 0]]
    gluings = [[None, None, None, _IDENTITY], [None, None, None, _IDENTITY]]
    return build_triangulation(
        neighbors,  # type: ignore[arg-type]
        gluings,  # type: ignore[arg-type]
        name="face_local",
        allow_open=True,
    )
