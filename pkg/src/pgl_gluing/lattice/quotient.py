"""Integral points of a triangulation.

An integral point is a class of (tet, t) pairs: points on a glued face are
identified with their images under the pairing permutation. Ptolemy
coordinates of identified pairs differ by an identification sign, so the
union-find tracks a parity alongside each parent link.
"""

from dataclasses import dataclass, field
from functools import lru_cache

from pydantic import BaseModel, ConfigDict, Field

from pgl_gluing.exceptions import LatticeError
from pgl_gluing.lattice.points import (
    LatticePoint,
    PointKind,
    act,
    classify,
    identification_sign,
    lattice_points,
    point_label,
)
from pgl_gluing.models.triangulation import ConcreteTriangulation
from pgl_gluing.utils.logging import get_logger

logger = get_logger(__name__)

PointRef = tuple[int, LatticePoint]


class IntegralPointClass(BaseModel):
    """An integral point of a triangulation.

    reps are sorted; reps[0] is the representative. signs[i] relates the
    Ptolemy coordinate at reps[i] to the one at the representative.
    """

    index: int = Field(..., ge=0, description="Position in the sorted class list")
    kind: PointKind = Field(..., description="vertex, edge, face or interior")
    reps: tuple[PointRef, ...] = Field(..., description="Sorted (tet, point) pairs")
    signs: tuple[int, ...] = Field(..., description="Identification sign of each rep")

    model_config = ConfigDict(frozen=True, extra="forbid")

    @property
    def representative(self) -> PointRef:
        """Lexicographically least (tet, point)."""
        return self.reps[0]

    @property
    def label(self) -> str:
        """Label of the representative, e.g. '1200_0'."""
        tet, t = self.representative
        return f"{point_label(t)}_{tet}"


class _SignedUnionFind:
    """Union-find where value(x) = parity[x] * value(parent[x])."""

    def __init__(self, size: int) -> None:
        self.parent = list(range(size))
        self.parity = [1] * size

    def find(self, x: int) -> tuple[int, int]:
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        root = x
        # Compress, accumulating parity from the root down
        for node in reversed(path):
            parent = self.parent[node]
            if parent != root:
                self.parity[node] *= self.parity[parent]
            self.parent[node] = root
        return root, 1 if not path else self.parity[path[0]]

    def union(self, x: int, y: int, sign: int) -> bool:
        """Impose value(x) = sign * value(y); False on a parity conflict."""
        rx, px = self.find(x)
        ry, py = self.find(y)
        if rx == ry:
            return px * py == sign
        # Smaller root wins so representatives stay deterministic
        if rx < ry:
            rx, ry = ry, rx
        self.parent[rx] = ry
        self.parity[rx] = px * sign * py
        return True


@dataclass
class PointQuotient:
    """All integral points of a triangulation at one level."""

    level: int
    classes: list[IntegralPointClass]
    lookup: dict[PointRef, tuple[int, int]] = field(repr=False)

    def class_of(self, tet: int, t: LatticePoint) -> tuple[int, int]:
        """(class index, identification sign) of a pair.

        Raises:
            LatticeError: If (tet, t) is not a point of the triangulation
        """
        try:
            return self.lookup[(tet, t)]
        except KeyError:
            raise LatticeError(f"no point {point_label(t)} on tet {tet} at level {self.level}") from None

    def non_vertex(self) -> list[IntegralPointClass]:
        """Classes of kind edge, face or interior, in class order."""
        return [c for c in self.classes if c.kind != PointKind.VERTEX]

    def count(self, kind: PointKind) -> int:
        """Number of classes of a kind."""
        return sum(1 for c in self.classes if c.kind == kind)


@lru_cache(maxsize=32)
def point_quotient(triangulation: ConcreteTriangulation, n: int) -> PointQuotient:
    """Identify the integral points of every simplex across face pairings.

    Args:
        triangulation: Valid triangulation
        n: Level, n >= 2

    Returns:
        PointQuotient with classes ordered by representative

    Raises:
        LatticeError: If n < 2 or identification signs conflict
    """
    if n < 2:
        raise LatticeError(f"level must be >= 2, got {n}")

    points = lattice_points(n)
    position = {t: i for i, t in enumerate(points)}
    size = len(points)

    def node(tet: int, t: LatticePoint) -> int:
        return tet * size + position[t]

    uf = _SignedUnionFind(triangulation.num_tet * size)
    for pairing in triangulation.all_pairings():
        face = pairing.from_face
        for t in points:
            if t[face] != 0:
                continue
            sign = identification_sign(pairing.perm, t)
            target = act(pairing.perm, t)
            if not uf.union(node(pairing.from_tet, t), node(pairing.to_tet, target), sign):
                raise LatticeError(
                    f"conflicting identification signs at {point_label(t)} on tet "
                    f"{pairing.from_tet}, level {n}"
                )

    members: dict[int, list[tuple[PointRef, int]]] = {}
    for tet in range(triangulation.num_tet):
        for t in points:
            root, parity = uf.find(node(tet, t))
            members.setdefault(root, []).append(((tet, t), parity))

    groups = sorted((sorted(m) for m in members.values()), key=lambda m: m[0][0])
    classes: list[IntegralPointClass] = []
    lookup: dict[PointRef, tuple[int, int]] = {}
    for index, group in enumerate(groups):
        rep_parity = group[0][1]
        signs = tuple(parity * rep_parity for _, parity in group)
        reps = tuple(ref for ref, _ in group)
        classes.append(
            IntegralPointClass(
                index=index,
                kind=classify(reps[0][1]),
                reps=reps,
                signs=signs,
            )
        )
        for ref, sign in zip(reps, signs):
            lookup[ref] = (index, sign)

    logger.debug(
        "Level %d quotient of %s: %d classes",
        n,
        triangulation.name or "<unnamed>",
        len(classes),
    )
    return PointQuotient(level=n, classes=classes, lookup=lookup)


def quotient(triangulation: ConcreteTriangulation, n: int) -> list[IntegralPointClass]:
    """Integral point classes of a triangulation, ordered by representative."""
    return point_quotient(triangulation, n).classes
