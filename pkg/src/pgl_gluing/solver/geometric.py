"""Solving entry points: the geometric solution and Ptolemy solutions."""

from typing import Mapping, Optional

import numpy as np

from pgl_gluing.exceptions import NumericalError, ValidationError
from pgl_gluing.lattice.quotient import point_quotient
from pgl_gluing.lattice.points import subsimplices
from pgl_gluing.models.solve import SolveConfig, SolveResult
from pgl_gluing.models.triangulation import ConcreteTriangulation, PeripheralCurve
from pgl_gluing.solver.hnf import integer_rank
from pgl_gluing.solver.newton import newton_solve
from pgl_gluing.solver.systems import GluingSystem, PtolemySystem
from pgl_gluing.utils.logging import get_logger

logger = get_logger(__name__)


def is_positively_oriented(triangulation: ConcreteTriangulation, z: np.ndarray) -> bool:
    """Im(z_tet^eps_tet) > 0 for every simplex of an n = 2 solution."""
    return all(
        (value if eps == 1 else 1 / value).imag > 0 for value, eps in zip(z, triangulation.eps)
    )


def geometric_solution(
    triangulation: ConcreteTriangulation,
    meridian: PeripheralCurve,
    longitude: PeripheralCurve,
    config: Optional[SolveConfig] = None,
    n: int = 2,
) -> np.ndarray:
    """Shape vector of the geometric representation at level n.

    Solves the n = 2 gluing and cusp system, keeps the positively oriented
    solution and gives every subsimplex of a simplex that simplex's shape.

    Raises:
        NumericalError: If no positively oriented solution is found
    """
    system = GluingSystem.from_triangulation(triangulation, 2, [meridian, longitude])
    result = newton_solve(system, config)
    oriented = [z for z in result.solutions if is_positively_oriented(triangulation, z)]
    if not oriented:
        raise NumericalError(
            f"no positively oriented n=2 solution among {len(result.solutions)} solutions"
        )
    if len(oriented) > 1:
        logger.warning("%d positively oriented solutions, using the first", len(oriented))
    shapes = oriented[0]
    per_tet = len(subsimplices(n))
    return np.repeat(shapes, per_tet)


def diagonal_character(t: tuple[int, ...], n: int) -> list[int]:
    """Exponents of d_1..d_{n-1} by which diag(d) scales c_t."""
    return [sum(1 for x in t if x >= i) for i in range(1, n)]


def default_fixed_classes(triangulation: ConcreteTriangulation, n: int) -> dict[int, complex]:
    """n - 1 Ptolemy variables whose characters are independent, set to 1.

    The diagonal subgroup acts on c_t through diagonal_character(t); fixing
    variables with independent characters leaves a finite residual action.
    """
    fixed: dict[int, complex] = {}
    characters: list[list[int]] = []
    for position, point_class in enumerate(point_quotient(triangulation, n).non_vertex()):
        if len(fixed) == n - 1:
            break
        candidate = characters + [diagonal_character(point_class.representative[1], n)]
        if integer_rank(candidate) == len(candidate):
            characters = candidate
            fixed[position] = 1 + 0j
    return fixed


def solve_ptolemy(
    triangulation: ConcreteTriangulation,
    n: int,
    config: Optional[SolveConfig] = None,
    fixed: Optional[Mapping[int, complex]] = None,
) -> SolveResult:
    """Solve the Ptolemy relations with selected variables held fixed.

    Solutions are full vectors over all Ptolemy variables.

    Args:
        triangulation: Triangulation
        n: Level
        config: Solver parameters
        fixed: Variable index to value; default_fixed_classes if omitted
    """
    chosen = default_fixed_classes(triangulation, n) if fixed is None else dict(fixed)
    if any(value == 0 for value in chosen.values()):
        raise ValidationError("fixed Ptolemy variables must be nonzero")
    system = PtolemySystem.from_triangulation(triangulation, n, chosen)
    result = newton_solve(system, config)
    result.solutions = [system.expand(x) for x in result.solutions]
    return result
