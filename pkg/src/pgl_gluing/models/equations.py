"""Equation models: gluing, cusp and Ptolemy.

Shape variables are indexed by (tet, s, e) with s a subsimplex position and e
one of the six edge midpoints; only the role of e (z, z' or z'') matters
numerically, but e is kept for notation.
"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from pgl_gluing.lattice.points import (
    LatticePoint,
    PointKind,
    ShapeRole,
    edge_role,
    point_label,
)


class ShapeTerm(BaseModel):
    """A factor (z^e_{s,tet})^exponent."""

    tet: int = Field(..., ge=0)
    s: LatticePoint = Field(..., description="Subsimplex position")
    e: LatticePoint = Field(..., description="Edge midpoint of the subsimplex")
    exponent: int

    model_config = ConfigDict(frozen=True, extra="forbid")

    @property
    def role(self) -> ShapeRole:
        """z, z' or z''."""
        return edge_role(self.e)

    def render(self) -> str:
        """Text form, e.g. 'z_{1200,0}^{1100}' or 'z_{1200,0}^{1100}^-1'."""
        base = f"z_{{{point_label(self.s)},{self.tet}}}^{{{point_label(self.e)}}}"
        return base if self.exponent == 1 else f"{base}^{self.exponent}"


class XTerm(BaseModel):
    """A factor (X_{t,tet})^exponent for a face point t."""

    tet: int = Field(..., ge=0)
    t: LatticePoint = Field(..., description="Face point")
    exponent: int

    model_config = ConfigDict(frozen=True, extra="forbid")

    def render(self) -> str:
        """Text form, e.g. 'X_{1011,0}'."""
        base = f"X_{{{point_label(self.t)},{self.tet}}}"
        return base if self.exponent == 1 else f"{base}^{self.exponent}"


class GluingEquation(BaseModel):
    """prod over terms of z^exponent = rhs_sign at one integral point.

    a, b, c hold the exponents of z, z' and z'' per column (tet, s), with
    orientation signs already applied.
    """

    point: int = Field(..., ge=0, description="Index of the integral point class")
    label: str = Field(..., description="Representative label")
    kind: PointKind
    terms: tuple[ShapeTerm, ...]
    a: tuple[int, ...] = Field(..., description="Exponents of z per column")
    b: tuple[int, ...] = Field(..., description="Exponents of z' per column")
    c: tuple[int, ...] = Field(..., description="Exponents of z'' per column")
    rhs_sign: int = 1

    model_config = ConfigDict(frozen=True, extra="forbid")

    def render(self) -> str:
        """Text form in subscript/superscript notation."""
        lhs = " * ".join(t.render() for t in self.terms) or "1"
        return f"{lhs} = {self.rhs_sign}"


class CuspEquation(BaseModel):
    """Level-l cusp equation of a peripheral curve.

    shape_terms times x_terms equals rhs_sign; a, b, c are the expanded
    exponents of z, z' and z'' per column after writing every X as minus a
    product of shapes.
    """

    curve: str
    level: int = Field(..., ge=1)
    shape_terms: tuple[ShapeTerm, ...]
    x_terms: tuple[XTerm, ...]
    rhs_sign: int = 1
    a: Optional[tuple[int, ...]] = None
    b: Optional[tuple[int, ...]] = None
    c: Optional[tuple[int, ...]] = None
    expanded_sign: int = Field(default=1, description="rhs_sign after expanding X factors")

    model_config = ConfigDict(frozen=True, extra="forbid")

    def render(self) -> str:
        """Text form; shape factors first, then X factors."""
        factors = [t.render() for t in self.shape_terms] + [x.render() for x in self.x_terms]
        return f"{' * '.join(factors) or '1'} = {self.rhs_sign}"


class PtolemyFactor(BaseModel):
    """One coordinate c_t of a relation, resolved to its integral point."""

    tet: int
    t: LatticePoint
    point: int = Field(..., ge=0, description="Ptolemy variable index")
    sign: int = Field(..., description="Identification sign against the representative")

    model_config = ConfigDict(frozen=True, extra="forbid")

    def render(self) -> str:
        return f"c_{{{point_label(self.t)},{self.tet}}}"


class PtolemyRelation(BaseModel):
    """c_{s+1001}c_{s+0110} + c_{s+1100}c_{s+0011} = c_{s+1010}c_{s+0101}.

    Each pair is (first, second); the relation on class values carries the
    product of the two identification signs in each term.
    """

    tet: int
    s: LatticePoint
    first: tuple[PtolemyFactor, PtolemyFactor]
    second: tuple[PtolemyFactor, PtolemyFactor]
    third: tuple[PtolemyFactor, PtolemyFactor]

    model_config = ConfigDict(frozen=True, extra="forbid")

    def term_sign(self, term: int) -> int:
        """Sign of the first, second or third term (0, 1, 2) on class values."""
        pair = (self.first, self.second, self.third)[term]
        return pair[0].sign * pair[1].sign

    def render(self) -> str:
        """Text form on simplex coordinates."""

        def product(pair: tuple[PtolemyFactor, PtolemyFactor]) -> str:
            return f"{pair[0].render()} * {pair[1].render()}"

        return f"{product(self.first)} + {product(self.second)} = {product(self.third)}"
