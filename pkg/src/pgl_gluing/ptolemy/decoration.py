"""Decorations of a single simplex and their Ptolemy coordinates.

c_t is the determinant of the n x n matrix formed by the first t_i columns
of g_i for i = 0..3, concatenated in vertex order.
"""

from typing import Mapping, Optional, Sequence

import numpy as np

from pgl_gluing.cocycle.matrices import q1
from pgl_gluing.cocycle.natural import middle_label, short_label
from pgl_gluing.exceptions import NonGenericDecorationError, ValidationError
from pgl_gluing.lattice.points import LatticePoint, is_vertex_point, lattice_points
from pgl_gluing.models.permutation import Perm4
from pgl_gluing.ptolemy.pullback import PtolemyAssignment
from pgl_gluing.utils.logging import get_logger

logger = get_logger(__name__)

Decoration = tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]


def _check_decoration(gs: Sequence[np.ndarray]) -> int:
    if len(gs) != 4:
        raise ValidationError(f"a decoration has 4 matrices, got {len(gs)}")
    n = gs[0].shape[0]
    for g in gs:
        if g.shape != (n, n):
            raise ValidationError(f"decoration matrices must all be {n}x{n}, got {g.shape}")
    return n


def decoration_to_ptolemy(gs: Sequence[np.ndarray], tol: float = 1e-8) -> PtolemyAssignment:
    """Ptolemy assignment of a decoration.

    Vertex points are set to 1.

    Args:
        gs: Four n x n matrices g_0..g_3
        tol: Relative genericity threshold against the product of column norms

    Returns:
        c_t for every point of level n

    Raises:
        NonGenericDecorationError: If some determinant is below threshold
    """
    n = _check_decoration(gs)
    c: PtolemyAssignment = {}
    for t in lattice_points(n):
        if is_vertex_point(t):
            c[t] = 1 + 0j
            continue
        columns = np.hstack([gs[i][:, : t[i]] for i in range(4)])
        value = complex(np.linalg.det(columns))
        threshold = tol * float(np.prod(np.linalg.norm(columns, axis=0)))
        if abs(value) <= threshold:
            raise NonGenericDecorationError(
                f"non-generic decoration: determinant {abs(value):.3e} at {t}"
            )
        c[t] = value
    return c


def pullback_decoration(sigma: Perm4, gs: Sequence[np.ndarray]) -> Decoration:
    """(g_{sigma(0)}, ..., g_{sigma(3)})."""
    return (gs[sigma(0)], gs[sigma(1)], gs[sigma(2)], gs[sigma(3)])


def random_decoration(n: int, rng: Optional[np.random.Generator] = None) -> Decoration:
    """Four matrices with entries uniform in the unit disc, scaled to det 1.

    Args:
        n: Size
        rng: numpy Generator (default_rng(0) if omitted)
    """
    rng = rng if rng is not None else np.random.default_rng(0)
    matrices = []
    for _ in range(4):
        radius = np.sqrt(rng.uniform(0, 1, size=(n, n)))
        angle = rng.uniform(0, 2 * np.pi, size=(n, n))
        g = radius * np.exp(1j * angle)
        g = g / np.linalg.det(g) ** (1 / n)
        matrices.append(g)
    return (matrices[0], matrices[1], matrices[2], matrices[3])


def decoration_from_shapes(
    z: Mapping[tuple[LatticePoint, LatticePoint], complex],
    n: int,
) -> Decoration:
    """A decoration realizing a shape assignment.

    (I, q_1, beta^{012} q_1, gamma^{012} beta^{013} q_1); mu of its Ptolemy
    assignment recovers z.
    """
    flip = q1(n)
    return (
        np.eye(n, dtype=complex),
        flip,
        middle_label(z, n, (0, 1, 2)) @ flip,
        short_label(z, n, (0, 1, 2)) @ middle_label(z, n, (0, 1, 3)) @ flip,
    )
