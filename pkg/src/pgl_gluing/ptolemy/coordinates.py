"""X-coordinates, diamond coordinates and ratio coordinates of one simplex."""

from itertools import permutations
from typing import Mapping

from pgl_gluing.exceptions import CoordinateDomainError, LatticeError
from pgl_gluing.lattice.points import (
    EDGES,
    LatticePoint,
    PointKind,
    add,
    classify,
    is_nonnegative,
    point_label,
    scale,
    sub,
    unit,
)
from pgl_gluing.models.permutation import Perm4

VertexTriple = tuple[int, int, int]


def orientation_sign(v0: int, v1: int, v2: int) -> int:
    """+1 iff (v0, v1, v2, v3) is an even permutation of 0123."""
    v3 = 6 - v0 - v1 - v2
    return Perm4(image=(v0, v1, v2, v3)).sign


def order_sign(v0: int, v1: int, v2: int) -> int:
    """+1 iff (v0, v1, v2) is an even reordering of its sorted triple."""
    inversions = (v0 > v1) + (v0 > v2) + (v1 > v2)
    return -1 if inversions % 2 else 1


def _face_point(t: LatticePoint) -> int:
    try:
        kind = classify(t)
    except LatticeError:
        kind = None
    if kind != PointKind.FACE:
        raise CoordinateDomainError(f"{t} is not a face point")
    return t.index(0)


def x_coordinate_from_ptolemy(c: Mapping[LatticePoint, complex], t: LatticePoint) -> complex:
    """X_t as the product of c_{t+v0-v1}^{eps(v0v1v2)} over the face's vertex orders.

    Raises:
        CoordinateDomainError: If t is not a face point
    """
    face = _face_point(t)
    vertices = [v for v in range(4) if v != face]
    value = 1 + 0j
    for v0, v1, v2 in permutations(vertices):
        factor = c[sub(add(t, unit(v0)), unit(v1))]
        value *= factor ** orientation_sign(v0, v1, v2)
    return value


def x_coordinate_from_shapes(z: Mapping[tuple[LatticePoint, LatticePoint], complex], t: LatticePoint) -> complex:
    """X_t = -prod over decompositions t = s + e of z^e_s.

    Raises:
        CoordinateDomainError: If t is not a face point
    """
    _face_point(t)
    value = -1 + 0j
    for (s, e), shape in z.items():
        if add(s, e) == t:
            value *= shape
    return value


def x_coordinate_terms(t: LatticePoint) -> list[tuple[LatticePoint, LatticePoint]]:
    """The (s, e) pairs with s + e = t and s >= 0, for a face point t."""
    _face_point(t)
    return [(sub(t, e), e) for e in EDGES if is_nonnegative(sub(t, e))]


def diamond(c: Mapping[LatticePoint, complex], triple: VertexTriple, alpha: LatticePoint) -> complex:
    """Diamond coordinate d^{v0v1v2}_alpha.

    d = -eps_<(v0v1v2) c_{a+2v0} c_{a+v1+v2} / (c_{a+v0+v1} c_{a+v0+v2})

    Args:
        c: Single-simplex Ptolemy assignment
        triple: Ordered face vertices v0v1v2
        alpha: Point of level n - 2 on that face

    Raises:
        CoordinateDomainError: If alpha does not lie on the face
    """
    v0, v1, v2 = triple
    v3 = 6 - v0 - v1 - v2
    if alpha[v3] != 0 or not is_nonnegative(alpha):
        raise CoordinateDomainError(
            f"{point_label(alpha)} is not on the face {v0}{v1}{v2}"
        )
    e0, e1, e2 = unit(v0), unit(v1), unit(v2)
    numerator = c[add(alpha, scale(2, e0))] * c[add(add(alpha, e1), e2)]
    denominator = c[add(add(alpha, e0), e1)] * c[add(add(alpha, e0), e2)]
    return -order_sign(v0, v1, v2) * numerator / denominator


def diamond_at(c: Mapping[LatticePoint, complex], triple: VertexTriple, n: int, k: int, i: int) -> complex:
    """d_{k,i} = d^{v0v1v2}_{(i-1)v0 + (n-i-k)v1 + (k-1)v2}."""
    v0, v1, v2 = triple
    alpha = add(add(scale(i - 1, unit(v0)), scale(n - i - k, unit(v1))), scale(k - 1, unit(v2)))
    return diamond(c, triple, alpha)


def ratio(c: Mapping[LatticePoint, complex], v0: int, v1: int, k: int, n: int) -> complex:
    """Ratio coordinate e^{v0v1}_{k v0 + l v1} with k + l = n - 1.

    e = (-1)^l c_{k v0 + (l+1) v1} / c_{(k+1) v0 + l v1}

    Raises:
        CoordinateDomainError: If k is outside 0..n-1
    """
    if not 0 <= k <= n - 1 or v0 == v1:
        raise CoordinateDomainError(f"no ratio coordinate at k={k} on edge {v0}{v1} for n={n}")
    l = n - 1 - k
    e0, e1 = unit(v0), unit(v1)
    numerator = c[add(scale(k, e0), scale(l + 1, e1))]
    denominator = c[add(scale(k + 1, e0), scale(l, e1))]
    return (-1) ** l * numerator / denominator


def x_from_diamonds(c: Mapping[LatticePoint, complex], triple: VertexTriple, t: LatticePoint) -> complex:
    """X_t = (d_{t-v0-v1} / d_{t-v0-v2})^{eps(v0v1v2)} for t on the face v0v1v2."""
    v0, v1, v2 = triple
    first = sub(sub(t, unit(v0)), unit(v1))
    second = sub(sub(t, unit(v0)), unit(v2))
    value = diamond(c, triple, first) / diamond(c, triple, second)
    return value ** orientation_sign(v0, v1, v2)
