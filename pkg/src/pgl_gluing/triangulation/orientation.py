"""Orientation signs of the simplices of a concrete triangulation.

Two simplices whose ordering-orientations both agree with the manifold
orientation meet along a face through an odd permutation, so across every
pairing eps(from) * eps(to) = -sign(perm).
"""

from collections import deque
from typing import Optional, Sequence

from pgl_gluing.exceptions import NonOrientableError
from pgl_gluing.models.triangulation import ConcreteTriangulation, FacePairing
from pgl_gluing.utils.logging import get_logger

logger = get_logger(__name__)


def propagate_orientation(
    num_tet: int,
    pairings: Sequence[Sequence[Optional[FacePairing]]],
) -> tuple[int, ...]:
    """Assign orientation signs by BFS over the face-pairing graph.

    The first simplex of each connected component gets +1.

    Args:
        num_tet: Number of simplices
        pairings: Pairing across each face (None for open faces)

    Returns:
        Tuple of signs, one per simplex

    Raises:
        NonOrientableError: If the propagation rule is contradictory
    """
    eps: list[int] = [0] * num_tet

    for root in range(num_tet):
        if eps[root]:
            continue
        eps[root] = 1
        queue = deque([root])

        while queue:
            tet = queue.popleft()
            for pairing in pairings[tet]:
                if pairing is None:
                    continue
                expected = -pairing.perm.sign * eps[tet]
                other = pairing.to_tet
                if eps[other] == 0:
                    eps[other] = expected
                    queue.append(other)
                elif eps[other] != expected:
                    raise NonOrientableError(
                        f"non-orientable triangulation: tet {tet} face {pairing.from_face} "
                        f"forces eps[{other}] = {expected}, but it is {eps[other]}"
                    )

    logger.debug("Orientation signs: %s", eps)
    return tuple(eps)


def orientation_signs(triangulation: ConcreteTriangulation) -> tuple[int, ...]:
    """Recompute orientation signs of a triangulation from its pairings.

    Args:
        triangulation: Concrete triangulation

    Returns:
        Signs with +1 on the first simplex of each component

    Raises:
        NonOrientableError: If no consistent assignment exists
    """
    return propagate_orientation(triangulation.num_tet, triangulation.pairings)


def is_consistent(triangulation: ConcreteTriangulation) -> bool:
    """Whether the stored signs satisfy the propagation rule on every pairing."""
    eps = triangulation.eps
    return all(
        eps[p.from_tet] * eps[p.to_tet] == -p.perm.sign for p in triangulation.all_pairings()
    )
