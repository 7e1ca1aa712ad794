"""End-to-end runs from a triangulation to the 1-loop invariant."""

from dataclasses import replace

import numpy as np
import pytest

from pgl_gluing.cusp.generator import generate_cusp
from pgl_gluing.cusp.verify import verify_cusp
from pgl_gluing.export.datum import datum_from_json, datum_to_json
from pgl_gluing.gluing.nz import check_symplectic, nz_matrices
from pgl_gluing.gluing.verify import verify_solution
from pgl_gluing.models.solve import SolveConfig
from pgl_gluing.solver.flattening import find_flattening
from pgl_gluing.solver.geometric import geometric_solution, is_positively_oriented
from pgl_gluing.solver.newton import newton_solve
from pgl_gluing.solver.nz_reduce import nz_reduce
from pgl_gluing.solver.one_loop import one_loop
from pgl_gluing.solver.systems import GluingSystem

pytestmark = pytest.mark.integration

HALF_SQRT3 = np.sqrt(3) / 2


def _tau(triangulation, meridian, z, strategy="last", n=2):
    reduced = nz_reduce(triangulation, n, meridian, strategy)
    assert reduced.residual(z) < 1e-8
    f, f2 = find_flattening(reduced.a, reduced.b, reduced.nu)
    return replace(reduced.datum(z), f=f, f2=f2)


class TestFigureEightPipeline:
    """Test suite for the figure-eight from shapes to tau."""

    def test_geometric_tau(self, figure_eight, meridian, longitude):
        """Test the geometric solution gives |tau| = sqrt(3)/2 for both reductions."""
        z = geometric_solution(figure_eight, meridian, longitude, SolveConfig(seed=3))
        for strategy in ("last", "first"):
            assert abs(one_loop(_tau(figure_eight, meridian, z, strategy))) == pytest.approx(HALF_SQRT3)

    @pytest.mark.parametrize("strategy", ["last", "first"])
    def test_geometric_tau_n3(self, figure_eight, meridian, longitude, strategy):
        """Test the lifted geometric solution gives |tau| = 21/2 at n = 3."""
        z = geometric_solution(figure_eight, meridian, longitude, SolveConfig(seed=3), n=3)
        assert verify_solution(nz_matrices(figure_eight, 3), z).passed
        tau = one_loop(_tau(figure_eight, meridian, z, strategy, n=3))
        assert abs(tau) == pytest.approx(10.5, abs=1e-4)

    def test_every_solution(self, figure_eight, meridian):
        """Test all solutions of the complete system share |tau| and one is oriented."""
        result = newton_solve(GluingSystem.from_triangulation(figure_eight, 2), SolveConfig(seed=5))
        assert result.success
        assert sum(is_positively_oriented(figure_eight, z) for z in result.solutions) == 1
        for z in result.solutions:
            assert verify_solution(nz_matrices(figure_eight, 2), z).passed
            assert verify_cusp(generate_cusp(figure_eight, 2, meridian), z).passed
            assert abs(one_loop(_tau(figure_eight, meridian, z))) == pytest.approx(HALF_SQRT3)

    def test_datum_file(self, figure_eight, meridian, geometric_n2):
        """Test a saved datum reproduces tau."""
        datum = _tau(figure_eight, meridian, geometric_n2)
        assert one_loop(datum_from_json(datum_to_json(datum))) == pytest.approx(one_loop(datum))


class TestLargerTriangulation:
    """Test suite for the five-simplex triangulation."""

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_symplectic(self, five_tet, n):
        """Test the gluing rows pair to zero after three 2-3 moves."""
        assert check_symplectic(nz_matrices(five_tet, n)) == []
