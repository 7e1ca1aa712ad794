"""Residual systems in logarithmic form.

Each row is a multiplicative equation M(x) = 1; its residual is the
principal logarithm of M(x), so |residual| does not depend on branches, and
the Jacobian is the derivative of log M, which is branch free.
"""

from dataclasses import dataclass, field
from typing import Mapping, Optional, Protocol, Sequence

import numpy as np

from pgl_gluing.cusp.generator import cusp_nz_rows, generate_cusp
from pgl_gluing.exceptions import ValidationError
from pgl_gluing.gluing.nz import nz_matrices
from pgl_gluing.models.equations import PtolemyRelation
from pgl_gluing.models.nz import NZMatrices
from pgl_gluing.models.triangulation import ConcreteTriangulation, PeripheralCurve
from pgl_gluing.ptolemy.relations import generate_relations, variable_classes
from pgl_gluing.utils.logging import get_logger

logger = get_logger(__name__)

# Start points are drawn from this annulus
_MIN_RADIUS = 0.1
_MAX_RADIUS = 10.0


def wrap_log(values: np.ndarray) -> np.ndarray:
    """Bring imaginary parts into (-pi, pi]."""
    imag = np.pi - np.mod(np.pi - values.imag, 2 * np.pi)
    return values.real + 1j * imag


def _annulus(rng: np.random.Generator, size: int) -> np.ndarray:
    radius = np.exp(rng.uniform(np.log(_MIN_RADIUS), np.log(_MAX_RADIUS), size=size))
    angle = rng.uniform(0, 2 * np.pi, size=size)
    return radius * np.exp(1j * angle)


class ResidualSystem(Protocol):
    """What newton_solve needs from a system."""

    size: int
    row_labels: list[str]

    def residual(self, x: np.ndarray) -> np.ndarray: ...

    def jacobian(self, x: np.ndarray) -> np.ndarray: ...

    def random_start(self, rng: np.random.Generator) -> np.ndarray: ...

    def degenerate(self, x: np.ndarray, radius: float) -> bool: ...


@dataclass
class GluingSystem:
    """Rows sign * prod z^A (1-z)^B = 1 in the shape coordinates z."""

    nz: NZMatrices
    size: int = field(init=False)
    row_labels: list[str] = field(init=False)

    def __post_init__(self) -> None:
        self.size = int(self.nz.a.shape[1])
        self.row_labels = list(self.nz.row_labels)
        self._phase = np.where(self.nz.signs < 0, 1j * np.pi, 0)

    @classmethod
    def from_triangulation(
        cls,
        triangulation: ConcreteTriangulation,
        n: int,
        curves: Optional[Sequence[PeripheralCurve]] = None,
    ) -> "GluingSystem":
        """Gluing rows plus the cusp rows of the given curves.

        Args:
            triangulation: Triangulation
            n: Level
            curves: Curves whose cusp equations are appended; defaults to
                all curves of the triangulation, pass [] for gluing rows only
        """
        nz = nz_matrices(triangulation, n)
        chosen = triangulation.curves if curves is None else curves
        for curve in chosen:
            equations = generate_cusp(triangulation, n, curve)
            a, b, signs = cusp_nz_rows(equations)
            nz = nz.append(a, b, signs, [f"{curve.name} level {eq.level}" for eq in equations])
        logger.info("Gluing system at n=%d: %d rows, %d unknowns", n, nz.a.shape[0], nz.a.shape[1])
        return cls(nz)

    def residual(self, x: np.ndarray) -> np.ndarray:
        """Principal log of every row."""
        raw = self.nz.a @ np.log(x) + self.nz.b @ np.log(1 - x) + self._phase
        return wrap_log(raw)

    def jacobian(self, x: np.ndarray) -> np.ndarray:
        """d row_i / d z_j = A_ij / z_j - B_ij / (1 - z_j)."""
        return self.nz.a / x[np.newaxis, :] - self.nz.b / (1 - x)[np.newaxis, :]

    def random_start(self, rng: np.random.Generator) -> np.ndarray:
        """Annulus sample with points near 1 resampled."""
        x = _annulus(rng, self.size)
        near_one = np.abs(x - 1) < _MIN_RADIUS
        while near_one.any():
            x[near_one] = _annulus(rng, int(near_one.sum()))
            near_one = np.abs(x - 1) < _MIN_RADIUS
        return x

    def degenerate(self, x: np.ndarray, radius: float) -> bool:
        """Whether some coordinate is within radius of 0 or 1."""
        return bool(np.any(np.abs(x) <= radius) or np.any(np.abs(1 - x) <= radius))


@dataclass
class PtolemySystem:
    """Relations T1 + T2 = T3 written as (T1 + T2) / T3 = 1.

    Variables listed in fixed keep their value; the unknowns are the
    remaining Ptolemy variables in variable order.
    """

    relations: list[PtolemyRelation]
    num_variables: int
    fixed: Mapping[int, complex] = field(default_factory=dict)
    size: int = field(init=False)
    row_labels: list[str] = field(init=False)

    def __post_init__(self) -> None:
        for index in self.fixed:
            if not 0 <= index < self.num_variables:
                raise ValidationError(f"fixed variable {index} out of range 0..{self.num_variables - 1}")
        self.free = [i for i in range(self.num_variables) if i not in self.fixed]
        self.size = len(self.free)
        self.row_labels = [f"tet {r.tet} s {''.join(map(str, r.s))}" for r in self.relations]

    @classmethod
    def from_triangulation(
        cls,
        triangulation: ConcreteTriangulation,
        n: int,
        fixed: Optional[Mapping[int, complex]] = None,
    ) -> "PtolemySystem":
        """Relations of a triangulation with selected variables held fixed."""
        relations = generate_relations(triangulation, n)
        count = len(variable_classes(triangulation, n))
        return cls(relations, count, dict(fixed or {}))

    def expand(self, x: np.ndarray) -> np.ndarray:
        """All variable values from the unknowns."""
        values = np.empty(self.num_variables, dtype=complex)
        for index, value in self.fixed.items():
            values[index] = value
        values[self.free] = x
        return values

    def _terms(self, values: np.ndarray) -> list[tuple[complex, complex, complex]]:
        terms = []
        for rel in self.relations:
            pairs = (rel.first, rel.second, rel.third)
            terms.append(
                tuple(  # type: ignore[arg-type]
                    rel.term_sign(k) * values[pair[0].point] * values[pair[1].point]
                    for k, pair in enumerate(pairs)
                )
            )
        return terms

    def residual(self, x: np.ndarray) -> np.ndarray:
        """log((T1 + T2) / T3) per relation."""
        values = self.expand(x)
        ratios = np.array([(t1 + t2) / t3 for t1, t2, t3 in self._terms(values)], dtype=complex)
        return wrap_log(np.log(ratios))

    def jacobian(self, x: np.ndarray) -> np.ndarray:
        """d/dx of log(T1 + T2) - log(T3)."""
        values = self.expand(x)
        column = {index: j for j, index in enumerate(self.free)}
        jac = np.zeros((len(self.relations), self.size), dtype=complex)
        for i, (rel, (t1, t2, t3)) in enumerate(zip(self.relations, self._terms(values))):
            numerator = t1 + t2
            for term, value, scale in ((rel.first, t1, numerator), (rel.second, t2, numerator), (rel.third, t3, -t3)):
                for factor in term:
                    j = column.get(factor.point)
                    if j is not None:
                        # d(term)/dx = term / x for a linear factor
                        jac[i, j] += value / values[factor.point] / scale
        return jac

    def random_start(self, rng: np.random.Generator) -> np.ndarray:
        """Annulus sample."""
        return _annulus(rng, self.size)

    def degenerate(self, x: np.ndarray, radius: float) -> bool:
        """Whether some Ptolemy variable is within radius of 0."""
        return bool(np.any(np.abs(x) <= radius))
