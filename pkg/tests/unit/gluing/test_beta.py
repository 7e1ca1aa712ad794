"""Unit tests for the chain maps and interior-equation determinacy."""

from math import comb

import pytest

from pgl_gluing.gluing.beta import beta_matrices, chain_composite
from pgl_gluing.gluing.internal import check_internal_determinacy
from pgl_gluing.ptolemy.decoration import decoration_to_ptolemy
from pgl_gluing.ptolemy.monomial import mu


class TestChainMaps:
    """Test suite for beta and beta*."""

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_shapes(self, figure_eight, n):
        """Test beta is 2m x points and beta* is variables x 2m."""
        beta, beta_star = beta_matrices(figure_eight, n)
        m = 2 * comb(n + 1, 3)
        assert beta.shape == (2 * m, m)
        assert beta_star.shape == (m, 2 * m)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_composite_vanishes(self, figure_eight, n):
        """Test beta* after beta is zero on the figure-eight."""
        assert not chain_composite(figure_eight, n).any()

    @pytest.mark.parametrize("n", [2, 3])
    def test_composite_vanishes_five_simplices(self, five_tet, n):
        """Test beta* after beta is zero after 2-3 moves."""
        assert not chain_composite(five_tet, n).any()


class TestInternalDeterminacy:
    """Test suite for recomputing z^{1100} from interior equations."""

    @pytest.mark.parametrize("n", [4, 5])
    def test_decoration_shapes_pass(self, decorations, n):
        """Test shapes of a decoration satisfy every interior equation."""
        for gs in decorations(n, 3):
            z = mu(decoration_to_ptolemy(gs), n)
            report = check_internal_determinacy(z, n, tol=1e-8)
            assert report.passed
            assert report.rows == comb(n - 1, 3)

    def test_perturbed_shape_fails(self, decorations):
        """Test changing a determined coordinate is detected."""
        (gs,) = decorations(4, 1)
        z = mu(decoration_to_ptolemy(gs), 4)
        z[((0, 0, 1, 1), (1, 1, 0, 0))] *= 1.1
        report = check_internal_determinacy(z, 4, tol=1e-8)
        assert not report.passed
        assert report.worst_row == "0011"

    def test_no_interior_at_n3(self, decorations):
        """Test n = 3 has no subsimplex with s2, s3 > 0."""
        (gs,) = decorations(3, 1)
        report = check_internal_determinacy(mu(decoration_to_ptolemy(gs), 3), 3)
        assert report.rows == 0
        assert report.passed
