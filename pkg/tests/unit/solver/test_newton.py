"""Unit tests for residual systems and the Newton solver."""

import cmath

import numpy as np
import pytest

from pgl_gluing.exceptions import ValidationError
from pgl_gluing.gluing.nz import nz_matrices
from pgl_gluing.gluing.verify import verify_solution
from pgl_gluing.lattice.points import lattice_points
from pgl_gluing.models.nz import NZMatrices
from pgl_gluing.models.solve import SolveConfig
from pgl_gluing.ptolemy.decoration import decoration_to_ptolemy
from pgl_gluing.solver.geometric import (
    default_fixed_classes,
    diagonal_character,
    geometric_solution,
    is_positively_oriented,
    solve_ptolemy,
)
from pgl_gluing.solver.newton import deduplicate, newton_solve
from pgl_gluing.solver.systems import GluingSystem, PtolemySystem, wrap_log
from pgl_gluing.triangulation.parser import build_triangulation

X = cmath.exp(1j * cmath.pi / 3)


def _single_simplex():
    return build_triangulation([[None] * 4], [[None] * 4], name="simplex", allow_open=True)


class TestSystems:
    """Test suite for residual systems."""

    def test_wrap_log(self):
        """Test imaginary parts land in (-pi, pi]."""
        wrapped = wrap_log(np.array([3j * np.pi, 0.5 - 2.5j * np.pi, 0j]))
        assert np.allclose(wrapped, [1j * np.pi, 0.5 - 0.5j * np.pi, 0])

    def test_gluing_rows_and_curves(self, figure_eight):
        """Test gluing rows plus one row per curve at n = 2."""
        system = GluingSystem.from_triangulation(figure_eight, 2)
        assert system.size == 2
        assert system.row_labels[-2:] == ["mu level 1", "lambda level 1"]
        assert len(GluingSystem.from_triangulation(figure_eight, 2, []).row_labels) == 2

    def test_gluing_residual_vanishes(self, figure_eight, geometric_n2):
        """Test the regular ideal shapes have zero log residual."""
        system = GluingSystem.from_triangulation(figure_eight, 2)
        assert np.allclose(system.residual(geometric_n2), 0, atol=1e-12)
        assert system.jacobian(geometric_n2).shape == (4, 2)

    def test_gluing_jacobian(self, figure_eight, rng):
        """Test the Jacobian against a finite difference."""
        system = GluingSystem.from_triangulation(figure_eight, 3, [])
        x = rng.uniform(0.3, 0.7, size=8) + 1j * rng.uniform(0.3, 0.7, size=8)
        step = np.zeros(8, dtype=complex)
        step[3] = 1e-7
        numeric = (system.residual(x + step) - system.residual(x)) / 1e-7
        assert np.allclose(numeric, system.jacobian(x)[:, 3], atol=1e-5)

    def test_random_starts_avoid_one(self, figure_eight, rng):
        """Test start points lie in the annulus away from 1."""
        system = GluingSystem.from_triangulation(figure_eight, 3)
        for _ in range(20):
            x = system.random_start(rng)
            assert np.all(np.abs(x) >= 0.1 - 1e-12)
            assert np.all(np.abs(x) <= 10 + 1e-12)
            assert np.all(np.abs(x - 1) >= 0.1)

    def test_fixed_out_of_range(self, figure_eight):
        """Test fixing a nonexistent Ptolemy variable fails."""
        with pytest.raises(ValidationError, match="fixed variable 9"):
            PtolemySystem.from_triangulation(figure_eight, 2, {9: 1})


class TestNewton:
    """Test suite for damped Newton from random starts."""

    def test_finds_regular_shapes(self, figure_eight):
        """Test the n = 2 gluing and cusp system has the regular ideal solution."""
        result = newton_solve(GluingSystem.from_triangulation(figure_eight, 2), SolveConfig(seed=3))
        assert result.success
        assert any(np.allclose(z, [X, X.conjugate()], atol=1e-6) for z in result.solutions)
        for z in result.solutions:
            assert verify_solution(nz_matrices(figure_eight, 2), z).passed

    def test_deterministic(self, figure_eight):
        """Test equal seeds give identical solution lists."""
        system = GluingSystem.from_triangulation(figure_eight, 2)
        config = SolveConfig(seed=11, restarts=16)
        first = newton_solve(system, config).solutions
        second = newton_solve(system, config).solutions
        assert len(first) == len(second)
        assert all(np.array_equal(a, b) for a, b in zip(first, second))

    def test_infeasible(self):
        """Test z = 1 only has a degenerate solution and nothing is returned."""
        nz = NZMatrices(
            a=np.array([[1]]),
            b=np.array([[0]]),
            signs=np.array([1]),
            columns=[(0, (0, 0, 0, 0))],
            row_labels=["z = 1"],
        )
        result = newton_solve(GluingSystem(nz), SolveConfig(restarts=8))
        assert not result.success
        assert "no solution found" in result.diagnostics
        assert result.attempts == 8

    def test_deduplicate(self):
        """Test nearby solutions collapse to the first."""
        points = [np.array([1.0 + 1j]), np.array([1.0 + 1j + 1e-9]), np.array([2.0 + 0j])]
        kept = deduplicate(points, 1e-6)
        assert len(kept) == 2
        assert kept[0] is points[0]

    def test_config_validation(self):
        """Test damping factors outside (0, 1] are rejected."""
        with pytest.raises(ValueError, match="damping factors"):
            SolveConfig(damping_schedule=[1.0, 1.5])

    def test_config_is_frozen(self):
        """Test solver settings are immutable and reject unknown fields."""
        config = SolveConfig(seed=3)
        with pytest.raises(ValueError, match="frozen"):
            config.seed = 4
        with pytest.raises(ValueError, match="Extra inputs are not permitted"):
            SolveConfig(seeds=3)


class TestGeometric:
    """Test suite for the geometric solution and Ptolemy solving."""

    def test_geometric_solution(self, figure_eight, meridian, longitude):
        """Test the positively oriented n = 2 solution is (x, conj x)."""
        z = geometric_solution(figure_eight, meridian, longitude, SolveConfig(seed=3))
        assert np.allclose(z, [X, X.conjugate()], atol=1e-8)

    def test_repeated_per_subsimplex(self, figure_eight, meridian, longitude):
        """Test each simplex's shape fills its subsimplices at n = 3."""
        z = geometric_solution(figure_eight, meridian, longitude, SolveConfig(seed=3), n=3)
        assert np.allclose(z, [X] * 4 + [X.conjugate()] * 4, atol=1e-8)

    def test_orientation(self, figure_eight):
        """Test negatively oriented simplices are read through 1/z."""
        assert is_positively_oriented(figure_eight, np.array([X, X.conjugate()]))
        assert not is_positively_oriented(figure_eight, np.array([X.conjugate(), X]))

    def test_diagonal_character(self):
        """Test the exponents of the diagonal action on c_2100 at n = 3."""
        assert diagonal_character((2, 1, 0, 0), 3) == [2, 1]

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_default_fixed_classes(self, figure_eight, n):
        """Test n - 1 variables are fixed to 1."""
        fixed = default_fixed_classes(figure_eight, n)
        assert len(fixed) == n - 1
        assert set(fixed.values()) == {1}

    def test_solve_single_relation(self, decorations):
        """Test one free Ptolemy variable is determined by its relation."""
        (gs,) = decorations(2, 1)
        c = decoration_to_ptolemy(gs)
        edges = [t for t in lattice_points(2) if max(t) == 1]
        values = {i: c[t] for i, t in enumerate(sorted(edges))}
        fixed = {i: v for i, v in values.items() if i != 1}
        result = solve_ptolemy(_single_simplex(), 2, SolveConfig(restarts=4), fixed)
        assert result.success
        assert result.solutions[0][1] == pytest.approx(values[1])

    def test_zero_fixed_value(self, figure_eight):
        """Test fixed Ptolemy variables must be nonzero."""
        with pytest.raises(ValidationError, match="nonzero"):
            solve_ptolemy(figure_eight, 2, fixed={0: 0})
