"""Exception hierarchy for pgl_gluing.

Validation errors describe bad input (exit code 1 on the CLI), numerical
errors describe data that is well formed but numerically unusable (exit code 2).
"""


class GluingError(Exception):
    """Base class for all pgl_gluing errors."""

    exit_code: int = 1


class ValidationError(GluingError):
    """Input violates a structural requirement."""

    exit_code = 1


class TriangulationError(ValidationError):
    """Malformed or inconsistent triangulation data."""


class FaceGluingError(TriangulationError):
    """A face is unpaired, multiply glued, or paired inconsistently."""


class NonOrientableError(TriangulationError):
    """Orientation signs cannot be propagated consistently."""


class BrokenPathError(ValidationError):
    """A peripheral curve is not a closed edge path."""


class UnknownCurveError(ValidationError):
    """No peripheral curve has the requested name."""


class LatticeError(ValidationError):
    """Lattice point or level outside the admissible range."""


class OddExponentError(ValidationError):
    """A gluing row has an odd z'' exponent sum."""


class NonGenericDecorationError(ValidationError):
    """A decoration produces a vanishing Ptolemy coordinate."""


class CoordinateDomainError(ValidationError):
    """A point passed to a coordinate function is not of the required kind."""


class NumericalError(GluingError):
    """Numerical failure on well-formed input."""

    exit_code = 2


class DegenerateShapeError(NumericalError):
    """A shape coordinate is too close to 0 or 1."""


class RelationResidualError(NumericalError):
    """Ptolemy or shape relations fail beyond tolerance."""


class SingularMatrixError(NumericalError):
    """A matrix that must be invertible is singular."""


class RankDeficiencyError(NumericalError):
    """The reduced Neumann-Zagier system does not have full rank."""


class FlatteningError(NumericalError):
    """No integer flattening solves the linear system."""
