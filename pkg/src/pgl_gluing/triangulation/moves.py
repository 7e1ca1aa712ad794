"""Pachner 2-3 moves on concrete triangulations.

The two simplices A and B sharing a face are replaced by three simplices
around the edge joining their apexes. With the shared face spanned by
u0 < u1 < u2 in A, new simplex k has vertices (apex of A, apex of B,
u_{k+1}, u_{k+2}); it meets the old faces of A and B opposite u_k.
"""

from typing import Optional

from pgl_gluing.exceptions import TriangulationError
from pgl_gluing.models.permutation import Perm4
from pgl_gluing.models.triangulation import ConcreteTriangulation
from pgl_gluing.triangulation.parser import build_triangulation
from pgl_gluing.utils.logging import get_logger

logger = get_logger(__name__)

# Face 2 of new simplex k is glued to face 3 of new simplex k+1
_INTERNAL = Perm4(image=(0, 1, 3, 2))


def two_three_move(triangulation: ConcreteTriangulation, tet: int, face: int) -> ConcreteTriangulation:
    """Apply a 2-3 move across a face.

    The untouched simplices keep their order; the three new simplices are
    appended. Peripheral curves are not carried over.

    Args:
        triangulation: Closed triangulation
        tet: Simplex A
        face: Face of A shared with a different simplex B

    Returns:
        Triangulation with one more simplex

    Raises:
        TriangulationError: If the face is open or glued to A itself
    """
    pairing = triangulation.pairing(tet, face)
    if pairing is None:
        raise TriangulationError(f"tet {tet} face {face} is open")
    a, b = tet, pairing.to_tet
    if a == b:
        raise TriangulationError(f"tet {tet} face {face} is glued to its own simplex")

    pi = pairing.perm
    apex_a, apex_b = face, pairing.to_face
    u = [v for v in range(4) if v != apex_a]

    survivors = [i for i in range(triangulation.num_tet) if i not in (a, b)]
    index = {old: new for new, old in enumerate(survivors)}
    base = len(survivors)

    # Old (tet, face) -> (new tet, vertex map old -> new)
    location: dict[tuple[int, int], tuple[int, Perm4]] = {}
    for old in survivors:
        for f in range(4):
            location[(old, f)] = (index[old], Perm4.identity())
    for k in range(3):
        first, second = u[(k + 1) % 3], u[(k + 2) % 3]
        image_a = [0, 0, 0, 0]
        image_a[apex_a], image_a[u[k]], image_a[first], image_a[second] = 0, 1, 2, 3
        location[(a, u[k])] = (base + k, Perm4(image=tuple(image_a)))  # type: ignore[arg-type]
        image_b = [0, 0, 0, 0]
        image_b[apex_b], image_b[pi(u[k])], image_b[pi(first)], image_b[pi(second)] = 1, 0, 2, 3
        location[(b, pi(u[k]))] = (base + k, Perm4(image=tuple(image_b)))  # type: ignore[arg-type]

    size = base + 3
    neighbors: list[list[Optional[int]]] = [[None] * 4 for _ in range(size)]
    gluings: list[list[Optional[list[int]]]] = [[None] * 4 for _ in range(size)]

    for p in triangulation.all_pairings():
        if (p.from_tet, p.from_face) in ((a, apex_a), (b, apex_b)):
            continue
        source, nu_source = location[(p.from_tet, p.from_face)]
        target, nu_target = location[(p.to_tet, p.to_face)]
        new_face = nu_source(p.from_face)
        perm = nu_target * p.perm * nu_source.inverse()
        neighbors[source][new_face] = target
        gluings[source][new_face] = list(perm.image)

    for k in range(3):
        following = base + (k + 1) % 3
        preceding = base + (k + 2) % 3
        neighbors[base + k][2], gluings[base + k][2] = following, list(_INTERNAL.image)
        neighbors[base + k][3], gluings[base + k][3] = preceding, list(_INTERNAL.image)

    if triangulation.curves:
        logger.warning("2-3 move drops %d peripheral curves", len(triangulation.curves))
    name = f"{triangulation.name}+23" if triangulation.name else ""
    return build_triangulation(neighbors, gluings, name=name)
