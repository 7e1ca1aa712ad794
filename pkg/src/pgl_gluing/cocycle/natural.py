"""Natural cocycles on the doubly truncated simplex.

Vertices of the doubly truncated simplex are ordered triples v0v1v2 of
distinct vertices. From v0v1v2 there are three edges:

    long   v0v1v2 -> v1v0v2   labeled alpha^{v0v1v2}
    middle v0v1v2 -> v0v2v1   labeled beta^{v0v1v2}
    short  v0v1v2 -> v0v1v3   labeled gamma^{v0v1v2}

The PGL cocycle is built from shapes, the SL cocycle from a Ptolemy
assignment; the two differ by the coboundary of tau = prod H_i(d_{1,i}).
"""

from dataclasses import dataclass
from enum import Enum
from itertools import permutations
from typing import Mapping, Optional

import numpy as np

from pgl_gluing.cocycle.matrices import (
    d_pm1,
    h,
    inverse,
    pgl_equal,
    product,
    q,
    q1,
    x_elem,
)
from pgl_gluing.exceptions import DegenerateShapeError, RelationResidualError
from pgl_gluing.lattice.points import LatticePoint, add, scale, unit
from pgl_gluing.ptolemy.coordinates import (
    diamond_at,
    orientation_sign,
    ratio,
    x_coordinate_from_shapes,
)
from pgl_gluing.ptolemy.pullback import shape_relation_residual
from pgl_gluing.utils.logging import get_logger

logger = get_logger(__name__)

VertexTriple = tuple[int, int, int]
TRIPLES: tuple[VertexTriple, ...] = tuple(permutations(range(4), 3))  # type: ignore[assignment]


class EdgeKind(str, Enum):
    """Edge types of the doubly truncated simplex."""
    LONG = "long"
    MIDDLE = "middle"
    SHORT = "short"


def missing(triple: VertexTriple) -> int:
    """The vertex v3 not in the triple."""
    return 6 - sum(triple)


def edge_target(triple: VertexTriple, kind: EdgeKind) -> VertexTriple:
    """End vertex of the edge of a kind leaving triple."""
    v0, v1, v2 = triple
    if kind == EdgeKind.LONG:
        return (v1, v0, v2)
    if kind == EdgeKind.MIDDLE:
        return (v0, v2, v1)
    return (v0, v1, missing(triple))


def edge_kind(start: VertexTriple, end: VertexTriple) -> Optional[EdgeKind]:
    """Kind of the edge start -> end, or None if they are not adjacent."""
    for kind in EdgeKind:
        if edge_target(start, kind) == end:
            return kind
    return None


@dataclass
class DoublyTruncatedCocycle:
    """Edge labels of one doubly truncated simplex, keyed by start vertex."""

    n: int
    alpha: dict[VertexTriple, np.ndarray]
    beta: dict[VertexTriple, np.ndarray]
    gamma: dict[VertexTriple, np.ndarray]

    def label(self, start: VertexTriple, end: VertexTriple) -> np.ndarray:
        """Label of the directed edge start -> end.

        Raises:
            ValueError: If start and end are not joined by an edge
        """
        kind = edge_kind(start, end)
        if kind is None:
            raise ValueError(f"no edge from {start} to {end}")
        return {EdgeKind.LONG: self.alpha, EdgeKind.MIDDLE: self.beta, EdgeKind.SHORT: self.gamma}[
            kind
        ][start]


def _level_point(coefficients: Mapping[int, int]) -> LatticePoint:
    point: LatticePoint = (0, 0, 0, 0)
    for vertex, k in coefficients.items():
        point = add(point, scale(k, unit(vertex)))
    return point


def edge_shape(z: Mapping[tuple[LatticePoint, LatticePoint], complex], n: int, v0: int, v1: int, i: int) -> complex:
    """z_i = z^{v0+v1}_{(i-1)v0 + (n-1-i)v1}."""
    s = _level_point({v0: i - 1, v1: n - 1 - i})
    e = add(unit(v0), unit(v1))
    return z[(s, e)]


def face_x(z: Mapping[tuple[LatticePoint, LatticePoint], complex], n: int, triple: VertexTriple, k: int, i: int) -> complex:
    """X_{k,i} = X at k v2 + i v0 + (n-k-i) v1."""
    v0, v1, v2 = triple
    return x_coordinate_from_shapes(z, _level_point({v2: k, v0: i, v1: n - k - i}))


def middle_label(z: Mapping[tuple[LatticePoint, LatticePoint], complex], n: int, triple: VertexTriple) -> np.ndarray:
    """beta^{v0v1v2} = prod_k (prod_i x_i(1) prod_i H_i(X_{k,i}^eps)) d_pm1."""
    eps = orientation_sign(*triple)
    factors: list[np.ndarray] = []
    for k in range(1, n):
        factors.extend(x_elem(i, 1, n) for i in range(1, n - k + 1))
        factors.extend(h(i, face_x(z, n, triple, k, i) ** eps, n) for i in range(1, n - k))
    factors.append(d_pm1(n))
    return product(factors, n)


def short_label(z: Mapping[tuple[LatticePoint, LatticePoint], complex], n: int, triple: VertexTriple) -> np.ndarray:
    """gamma^{v0v1v2} = prod_i H_i(z_i^-eps)."""
    v0, v1, _ = triple
    eps = orientation_sign(*triple)
    return product([h(i, edge_shape(z, n, v0, v1, i) ** -eps, n) for i in range(1, n)], n)


def pgl_cocycle_from_shapes(
    z: Mapping[tuple[LatticePoint, LatticePoint], complex],
    n: int,
    tol: float = 1e-9,
) -> DoublyTruncatedCocycle:
    """Natural (PGL, B, H)-cocycle of a shape assignment on one simplex.

    Args:
        z: Shape assignment z^e_s
        n: Level
        tol: Allowed violation of the shape relations

    Returns:
        Labels of all 72 directed edges

    Raises:
        RelationResidualError: If the shape relations fail beyond tol
        DegenerateShapeError: If an X-coordinate or shape vanishes
    """
    residual = shape_relation_residual(n, z)
    if residual > tol:
        raise RelationResidualError(f"shape relation residual {residual:.3e} exceeds {tol:.1e}")
    if any(value == 0 for value in z.values()):
        raise DegenerateShapeError("vanishing shape parameter")

    try:
        beta = {t: middle_label(z, n, t) for t in TRIPLES}
        gamma = {t: short_label(z, n, t) for t in TRIPLES}
    except ZeroDivisionError as e:
        raise DegenerateShapeError(f"vanishing X-coordinate: {e}") from e
    alpha = {t: q1(n) for t in TRIPLES}
    return DoublyTruncatedCocycle(n=n, alpha=alpha, beta=beta, gamma=gamma)


def sl_long_label(c: Mapping[LatticePoint, complex], n: int, triple: VertexTriple) -> np.ndarray:
    """alpha~ = q(e_{(n-1)v0}, ..., e_{(n-1)v1}) from ratio coordinates."""
    v0, v1, _ = triple
    return q([ratio(c, v0, v1, k, n) for k in range(n - 1, -1, -1)])


def sl_middle_label(c: Mapping[LatticePoint, complex], n: int, triple: VertexTriple) -> np.ndarray:
    """beta~ = prod over k, then i, of x_i(d_{k,i})."""
    factors = [
        x_elem(i, diamond_at(c, triple, n, k, i), n) for k in range(1, n) for i in range(1, n - k + 1)
    ]
    return product(factors, n)


def tau(c: Mapping[LatticePoint, complex], n: int, triple: VertexTriple) -> np.ndarray:
    """tau^{v0v1v2} = prod_i H_i(d_{1,i})."""
    return product([h(i, diamond_at(c, triple, n, 1, i), n) for i in range(1, n)], n)


def sl_cocycle_from_ptolemy(c: Mapping[LatticePoint, complex], n: int) -> DoublyTruncatedCocycle:
    """Natural (SL, N)-cocycle of a single-simplex Ptolemy assignment.

    Short edges are labeled by the identity.

    Raises:
        DegenerateShapeError: If a Ptolemy coordinate used by a label vanishes
    """
    try:
        alpha = {t: sl_long_label(c, n, t) for t in TRIPLES}
        beta = {t: sl_middle_label(c, n, t) for t in TRIPLES}
    except ZeroDivisionError as e:
        raise DegenerateShapeError(f"vanishing Ptolemy coordinate: {e}") from e
    gamma = {t: np.eye(n, dtype=complex) for t in TRIPLES}
    return DoublyTruncatedCocycle(n=n, alpha=alpha, beta=beta, gamma=gamma)


def coboundary(taus: Mapping[VertexTriple, np.ndarray], cocycle: DoublyTruncatedCocycle) -> DoublyTruncatedCocycle:
    """Act by a 0-cochain: label(a -> b) becomes tau_a^-1 label(a -> b) tau_b."""

    def act(labels: dict[VertexTriple, np.ndarray], kind: EdgeKind) -> dict[VertexTriple, np.ndarray]:
        return {
            t: inverse(taus[t]) @ m @ taus[edge_target(t, kind)] for t, m in labels.items()
        }

    return DoublyTruncatedCocycle(
        n=cocycle.n,
        alpha=act(cocycle.alpha, EdgeKind.LONG),
        beta=act(cocycle.beta, EdgeKind.MIDDLE),
        gamma=act(cocycle.gamma, EdgeKind.SHORT),
    )


def tau_cochain(c: Mapping[LatticePoint, complex], n: int) -> dict[VertexTriple, np.ndarray]:
    """tau at every vertex of the doubly truncated simplex."""
    return {t: tau(c, n, t) for t in TRIPLES}


def cocycles_agree(a: DoublyTruncatedCocycle, b: DoublyTruncatedCocycle, tol: float = 1e-8) -> bool:
    """Whether all labels agree in PGL."""
    return all(
        pgl_equal(a.alpha[t], b.alpha[t], tol)
        and pgl_equal(a.beta[t], b.beta[t], tol)
        and pgl_equal(a.gamma[t], b.gamma[t], tol)
        for t in TRIPLES
    )
