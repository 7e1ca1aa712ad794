"""Single-simplex Ptolemy and shape assignments and their pullbacks.

A Ptolemy assignment on one simplex maps every point of level n to a complex
number (vertex points to 1). A shape assignment maps (s, e), with s a
subsimplex and e an edge midpoint, to a complex number.
"""

from typing import Mapping

from pgl_gluing.exceptions import DegenerateShapeError
from pgl_gluing.lattice.points import (
    EDGES,
    LatticePoint,
    ShapeRole,
    act,
    edge_role,
    identification_sign,
    subsimplices,
)
from pgl_gluing.models.permutation import Perm4

PtolemyAssignment = dict[LatticePoint, complex]
ShapeAssignment = dict[tuple[LatticePoint, LatticePoint], complex]

__all__ = [
    "PtolemyAssignment",
    "ShapeAssignment",
    "identification_sign",
    "pullback_ptolemy",
    "pullback_shape",
    "shape_assignment",
    "shape_coordinates",
    "shape_relation_residual",
]


def _role_value(z: complex, role: ShapeRole) -> complex:
    if role == ShapeRole.Z:
        return z
    if role == ShapeRole.Z_PRIME:
        return 1 / (1 - z)
    return 1 - 1 / z


def shape_assignment(n: int, coords: Mapping[LatticePoint, complex]) -> ShapeAssignment:
    """Expand shape coordinates z^{1100}_s to all six edges of every subsimplex.

    Args:
        n: Level
        coords: z^{1100}_s for every subsimplex s

    Returns:
        Assignment with z' = 1/(1-z) and z'' = 1 - 1/z

    Raises:
        DegenerateShapeError: If some coordinate is 0 or 1
    """
    result: ShapeAssignment = {}
    for s in subsimplices(n):
        z = complex(coords[s])
        if z == 0 or z == 1:
            raise DegenerateShapeError(f"shape coordinate {z} at {s} is degenerate")
        for e in EDGES:
            result[(s, e)] = _role_value(z, edge_role(e))
    return result


def shape_coordinates(n: int, assignment: Mapping[tuple[LatticePoint, LatticePoint], complex]) -> dict[LatticePoint, complex]:
    """The stored coordinates z^{1100}_s of an assignment."""
    return {s: assignment[(s, (1, 1, 0, 0))] for s in subsimplices(n)}


def shape_relation_residual(n: int, assignment: Mapping[tuple[LatticePoint, LatticePoint], complex]) -> float:
    """Largest violation of the shape parameter relations.

    Checks z^e = z^{1111-e}, z' (1 - z) = 1 and z'' z = -(1 - z).
    """
    worst = 0.0
    for s in subsimplices(n):
        values = {e: assignment[(s, e)] for e in EDGES}
        z = values[(1, 1, 0, 0)]
        zp = values[(0, 1, 1, 0)]
        zpp = values[(1, 0, 1, 0)]
        worst = max(
            worst,
            abs(values[(0, 0, 1, 1)] - z),
            abs(values[(1, 0, 0, 1)] - zp),
            abs(values[(0, 1, 0, 1)] - zpp),
            abs(zp * (1 - z) - 1),
            abs(zpp * z + (1 - z)),
        )
    return worst


def pullback_ptolemy(sigma: Perm4, c: Mapping[LatticePoint, complex]) -> PtolemyAssignment:
    """(sigma* c)_t = sign(sigma, t) c_{sigma(t)}."""
    return {t: identification_sign(sigma, t) * c[act(sigma, t)] for t in c}


def pullback_shape(sigma: Perm4, z: Mapping[tuple[LatticePoint, LatticePoint], complex]) -> ShapeAssignment:
    """(sigma* z)^e_s = (z^{sigma(e)}_{sigma(s)})^{sgn sigma}."""
    sign = sigma.sign
    return {(s, e): z[(act(sigma, s), act(sigma, e))] ** sign for (s, e) in z}
