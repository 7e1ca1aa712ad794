"""Concrete triangulation models.

A concrete triangulation identifies every simplex with the standard ordered
simplex. Face f of a simplex is the face opposite vertex f; the pairing across
it is recorded as a Perm4 taking vertices of the simplex to vertices of its
neighbor.
"""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from pgl_gluing.exceptions import UnknownCurveError
from pgl_gluing.models.permutation import Perm4

VertexTriple = tuple[int, int, int]


class CurveStepKind(str, Enum):
    """Edge type of the doubly truncated simplex used by a curve step."""
    SHORT = "short"    # v0v1v2 -> v0v1v3
    MIDDLE = "middle"  # v0v1v2 -> v0v2v1


class CurveStep(BaseModel):
    """One edge of a peripheral edge path.

    The step traverses the edge labeled at (tet, triple): forwards when
    direction is +1, backwards (ending at the triple) when it is -1.
    """

    model_config = ConfigDict(frozen=True, extra="forbid", populate_by_name=True)

    tet: int = Field(..., ge=0, description="Simplex index")
    triple: VertexTriple = Field(..., description="Ordered distinct vertices v0v1v2")
    kind: CurveStepKind = Field(..., description="short or middle edge")
    direction: int = Field(default=1, alias="dir", description="+1 or -1")

    @field_validator("triple")
    @classmethod
    def validate_triple(cls, v: VertexTriple) -> VertexTriple:
        """Vertices must be distinct elements of 0..3."""
        if len(set(v)) != 3 or not all(0 <= x <= 3 for x in v):
            raise ValueError(f"invalid vertex triple: {v}")
        return v

    @field_validator("direction")
    @classmethod
    def validate_direction(cls, v: int) -> int:
        """Direction is a sign."""
        if v not in (1, -1):
            raise ValueError(f"direction must be +1 or -1, got {v}")
        return v

    @property
    def missing_vertex(self) -> int:
        """The vertex v3 not in the triple."""
        return 6 - sum(self.triple)

    def target(self) -> VertexTriple:
        """Vertex triple at the other end of the labeled edge."""
        v0, v1, v2 = self.triple
        if self.kind == CurveStepKind.SHORT:
            return (v0, v1, self.missing_vertex)
        return (v0, v2, v1)

    def endpoints(self) -> tuple[VertexTriple, VertexTriple]:
        """(start, end) triples in traversal order."""
        if self.direction == 1:
            return self.triple, self.target()
        return self.target(), self.triple


class PeripheralCurve(BaseModel):
    """A closed edge path on the boundary decomposition."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str = Field(..., description="Curve label, e.g. 'mu'")
    steps: tuple[CurveStep, ...] = Field(..., description="Ordered steps")

    @property
    def middle_steps(self) -> int:
        """Number of middle-edge steps."""
        return sum(1 for s in self.steps if s.kind == CurveStepKind.MIDDLE)


class FacePairing(BaseModel):
    """Gluing of face from_face of from_tet to a face of to_tet."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    from_tet: int = Field(..., ge=0, description="Source simplex")
    from_face: int = Field(..., ge=0, le=3, description="Face opposite this vertex")
    to_tet: int = Field(..., ge=0, description="Target simplex")
    perm: Perm4 = Field(..., description="Vertex map from source to target")

    @property
    def to_face(self) -> int:
        """The face of to_tet receiving the glued face."""
        return self.perm(self.from_face)

    def reverse(self) -> "FacePairing":
        """The same gluing seen from the target simplex."""
        return FacePairing(
            from_tet=self.to_tet,
            from_face=self.to_face,
            to_tet=self.from_tet,
            perm=self.perm.inverse(),
        )


class ConcreteTriangulation(BaseModel):
    """A triangulation with per-simplex vertex orderings.

    Built and validated by pgl_gluing.triangulation.parser; instances are
    immutable.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str = Field(default="", description="Label")
    num_tet: int = Field(..., ge=1, description="Number of simplices")
    pairings: tuple[tuple[Optional[FacePairing], ...], ...] = Field(
        ...,
        description="Pairing across each face, None for open faces",
    )
    eps: tuple[int, ...] = Field(..., description="Orientation sign of each simplex")
    curves: tuple[PeripheralCurve, ...] = Field(default=(), description="Peripheral curves")

    def pairing(self, tet: int, face: int) -> Optional[FacePairing]:
        """Pairing across a face, or None if the face is open."""
        return self.pairings[tet][face]

    def all_pairings(self) -> list[FacePairing]:
        """Every glued (tet, face) in index order; each gluing appears twice."""
        return [p for row in self.pairings for p in row if p is not None]

    @property
    def is_closed(self) -> bool:
        """Whether every face is glued."""
        return all(p is not None for row in self.pairings for p in row)

    @property
    def is_oriented(self) -> bool:
        """Whether all ordering-orientations agree with the manifold orientation."""
        return all(e == 1 for e in self.eps)

    @property
    def is_ordered(self) -> bool:
        """Whether every pairing preserves the vertex order on its face."""
        for p in self.all_pairings():
            face = [v for v in range(4) if v != p.from_face]
            images = [p.perm(v) for v in face]
            if images != sorted(images):
                return False
        return True

    def curve(self, name: str) -> PeripheralCurve:
        """Look up a peripheral curve by name.

        Raises:
            UnknownCurveError: If no curve has this name
        """
        for c in self.curves:
            if c.name == name:
                return c
        raise UnknownCurveError(f"no peripheral curve named {name!r} on {self.name or 'triangulation'}")


class CurveStepRecord(BaseModel):
    """File record of a curve step."""

    tet: int
    triple: list[int]
    kind: str
    dir: int = 1


class CurveRecord(BaseModel):
    """File record of a peripheral curve."""

    name: str
    steps: list[CurveStepRecord]


class TetrahedronRecord(BaseModel):
    """File record of one simplex: neighbor and gluing across each face."""

    neighbors: list[Optional[int]] = Field(..., min_length=4, max_length=4)
    gluings: list[Optional[list[int]]] = Field(..., min_length=4, max_length=4)


class TriangulationFile(BaseModel):
    """JSON schema of a triangulation file."""

    model_config = ConfigDict(extra="forbid")

    name: str = ""
    num_tetrahedra: int = Field(..., ge=1)
    tetrahedra: list[TetrahedronRecord]
    peripheral_curves: list[CurveRecord] = Field(default_factory=list)
