"""Integral points of the standard simplex.

Points of level n are 4-tuples of non-negative integers summing to n. All
enumerations are in lexicographic order.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import product
from math import comb

from pgl_gluing.exceptions import LatticeError
from pgl_gluing.models.permutation import Perm4

LatticePoint = tuple[int, int, int, int]


class PointKind(str, Enum):
    """Position of an integral point relative to the simplex."""
    VERTEX = "vertex"
    EDGE = "edge"
    FACE = "face"
    INTERIOR = "interior"


class ShapeRole(str, Enum):
    """Which shape parameter an edge of a subsimplex carries."""
    Z = "z"
    Z_PRIME = "z'"
    Z_DOUBLE_PRIME = "z''"


E1100: LatticePoint = (1, 1, 0, 0)
E0011: LatticePoint = (0, 0, 1, 1)
E0110: LatticePoint = (0, 1, 1, 0)
E1001: LatticePoint = (1, 0, 0, 1)
E1010: LatticePoint = (1, 0, 1, 0)
E0101: LatticePoint = (0, 1, 0, 1)

# Edge midpoints of the subsimplex, opposite edges adjacent
EDGES: tuple[LatticePoint, ...] = (E1100, E0011, E0110, E1001, E1010, E0101)

_ROLES: dict[LatticePoint, ShapeRole] = {
    E1100: ShapeRole.Z,
    E0011: ShapeRole.Z,
    E0110: ShapeRole.Z_PRIME,
    E1001: ShapeRole.Z_PRIME,
    E1010: ShapeRole.Z_DOUBLE_PRIME,
    E0101: ShapeRole.Z_DOUBLE_PRIME,
}

_CANONICAL: dict[ShapeRole, LatticePoint] = {
    ShapeRole.Z: E1100,
    ShapeRole.Z_PRIME: E0110,
    ShapeRole.Z_DOUBLE_PRIME: E1010,
}


@dataclass(frozen=True)
class PointEnumeration:
    """All, non-vertex and interior points of one level."""

    level: int
    all: list[LatticePoint]
    non_vertex: list[LatticePoint]
    interior: list[LatticePoint]


def _check_level(n: int, minimum: int = 0) -> None:
    if n < minimum:
        raise LatticeError(f"level must be >= {minimum}, got {n}")


@lru_cache(maxsize=None)
def _points(n: int) -> tuple[LatticePoint, ...]:
    return tuple(
        p for p in product(range(n + 1), repeat=4) if sum(p) == n  # type: ignore[misc]
    )


def lattice_points(n: int) -> list[LatticePoint]:
    """Return all integral points of level n in lexicographic order.

    Args:
        n: Level, n >= 0

    Returns:
        C(n+3, 3) points

    Raises:
        LatticeError: If n < 0
    """
    _check_level(n)
    return list(_points(n))


def subsimplices(n: int) -> list[LatticePoint]:
    """Return the subsimplex positions s of level n - 2.

    Raises:
        LatticeError: If n < 2
    """
    _check_level(n, 2)
    return lattice_points(n - 2)


def enumerate_points(n: int) -> PointEnumeration:
    """Enumerate the integral points of level n, classified.

    Args:
        n: Level, n >= 2

    Returns:
        PointEnumeration with all, non-vertex and interior points

    Raises:
        LatticeError: If n < 2
    """
    _check_level(n, 2)
    points = lattice_points(n)
    enumeration = PointEnumeration(
        level=n,
        all=points,
        non_vertex=[p for p in points if classify(p) != PointKind.VERTEX],
        interior=[p for p in points if classify(p) == PointKind.INTERIOR],
    )
    assert len(enumeration.all) == comb(n + 3, 3)
    return enumeration


def level(t: LatticePoint) -> int:
    """Sum of the coordinates."""
    return sum(t)


def classify(t: LatticePoint) -> PointKind:
    """Classify a point by its number of nonzero coordinates.

    Raises:
        LatticeError: If a coordinate is negative or the point is zero
    """
    if len(t) != 4 or min(t) < 0:
        raise LatticeError(f"not a lattice point: {t}")
    nonzero = sum(1 for x in t if x)
    if nonzero == 0:
        raise LatticeError("the origin has no kind")
    return (PointKind.VERTEX, PointKind.EDGE, PointKind.FACE, PointKind.INTERIOR)[nonzero - 1]


def act(sigma: Perm4, t: LatticePoint) -> LatticePoint:
    """Apply sigma to a point: the coordinate at vertex v moves to sigma(v).

    Equivalently sigma(x)_i = x_{sigma^-1(i)}; this is a left action.
    """
    image = [0, 0, 0, 0]
    for v in range(4):
        image[sigma.image[v]] = t[v]
    return (image[0], image[1], image[2], image[3])


def add(a: LatticePoint, b: LatticePoint) -> LatticePoint:
    """Coordinatewise sum."""
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])


def sub(a: LatticePoint, b: LatticePoint) -> LatticePoint:
    """Coordinatewise difference (may leave the simplex)."""
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3])


def scale(k: int, a: LatticePoint) -> LatticePoint:
    """Integer multiple of a point."""
    return (k * a[0], k * a[1], k * a[2], k * a[3])


def unit(v: int) -> LatticePoint:
    """The vertex point of level 1 at vertex v."""
    e = [0, 0, 0, 0]
    e[v] = 1
    return (e[0], e[1], e[2], e[3])


def is_nonnegative(t: LatticePoint) -> bool:
    """Whether all coordinates are >= 0."""
    return min(t) >= 0


def is_vertex_point(t: LatticePoint) -> bool:
    """Whether exactly one coordinate is nonzero."""
    return sum(1 for x in t if x) == 1


def face_of(t: LatticePoint) -> int:
    """Return the face (opposite vertex) containing a face point.

    Raises:
        LatticeError: If t is not a face point
    """
    if classify(t) != PointKind.FACE:
        raise LatticeError(f"{point_label(t)} is not a face point")
    return t.index(0)


def edge_role(e: LatticePoint) -> ShapeRole:
    """Shape parameter carried by an edge midpoint of the subsimplex.

    Raises:
        LatticeError: If e is not one of the six edge midpoints
    """
    try:
        return _ROLES[e]
    except KeyError:
        raise LatticeError(f"not an edge of the subsimplex: {e}") from None


def canonical_edge(e: LatticePoint) -> LatticePoint:
    """Representative of {e, 1111 - e} among 1100, 0110, 1010."""
    return _CANONICAL[edge_role(e)]


def point_label(t: LatticePoint) -> str:
    """Compact label, e.g. (2,1,0,0) -> '2100'; comma separated above 9."""
    if max(t) > 9:
        return ",".join(str(x) for x in t)
    return "".join(str(x) for x in t)


def parse_label(label: str) -> LatticePoint:
    """Inverse of point_label.

    Raises:
        LatticeError: If the label does not describe four coordinates
    """
    parts = label.split(",") if "," in label else list(label)
    if len(parts) != 4 or not all(p.strip().isdigit() for p in parts):
        raise LatticeError(f"bad point label: {label!r}")
    a, b, c, d = (int(p) for p in parts)
    return (a, b, c, d)


def identification_sign(sigma: Perm4, t: LatticePoint) -> int:
    """Sign relating Ptolemy coordinates identified through sigma.

    This is the parity of the shuffle sigma induces on the odd entries of t,
    (-1)^(sum of t_i * t_j over pairs i < j with sigma(i) > sigma(j)).
    """
    exponent = 0
    for i in range(4):
        for j in range(i + 1, 4):
            if sigma.image[i] > sigma.image[j]:
                exponent += t[i] * t[j]
    return -1 if exponent % 2 else 1
