"""Unit tests for Ptolemy relations, pullbacks and the monomial map."""

from math import comb

import numpy as np
import pytest

from pgl_gluing.exceptions import RelationResidualError, ValidationError
from pgl_gluing.gluing.generator import generate
from pgl_gluing.lattice.points import identification_sign, lattice_points, point_label, subsimplices
from pgl_gluing.lattice.quotient import point_quotient
from pgl_gluing.models.permutation import Perm4
from pgl_gluing.ptolemy.decoration import decoration_to_ptolemy, pullback_decoration
from pgl_gluing.ptolemy.monomial import mu, mu_exponent_matrix, mu_on_triangulation
from pgl_gluing.ptolemy.pullback import (
    pullback_ptolemy,
    pullback_shape,
    shape_assignment,
    shape_relation_residual,
)
from pgl_gluing.ptolemy.relations import (
    generate_relations,
    ptolemy_from_classes,
    single_relation_residual,
    variable_classes,
)
from pgl_gluing.triangulation.local_models import edge_local_model, face_local_model
from pgl_gluing.triangulation.parser import build_triangulation

E1100 = (1, 1, 0, 0)


def _single_simplex():
    return build_triangulation([[None] * 4], [[None] * 4], name="simplex", allow_open=True)


def _close(a, b, tol=1e-9):
    return all(abs(a[k] - b[k]) <= tol * max(1.0, abs(b[k])) for k in b)


class TestIdentificationSign:
    """Test suite for signs of identified coordinates."""

    def test_shuffle_of_odd_entries(self):
        """Test sigma taking (0,0,3,1) to (0,1,0,3) has sign -1."""
        sigma = Perm4(image=(0, 2, 3, 1))
        assert identification_sign(sigma, (0, 0, 3, 1)) == -1

    def test_identity(self):
        """Test the identity never flips a sign."""
        for t in lattice_points(4):
            assert identification_sign(Perm4.identity(), t) == 1

    def test_swap_of_odd_pair(self):
        """Test swapping 0 and 1 with t0 = t1 = 1 gives -1."""
        assert identification_sign(Perm4.transposition(0, 1), (1, 1, 2, 0)) == -1


class TestRelations:
    """Test suite for relation generation."""

    @pytest.mark.parametrize("n", [2, 3])
    def test_figure_eight_counts(self, figure_eight, n):
        """Test as many relations as variables on the figure-eight."""
        relations = generate_relations(figure_eight, n)
        assert len(relations) == 2 * comb(n + 1, 3)
        assert len(variable_classes(figure_eight, n)) == len(relations)

    def test_single_simplex_relation(self):
        """Test the relation of subsimplex 0130 at n = 5."""
        relations = generate_relations(_single_simplex(), 5)
        (relation,) = [r for r in relations if r.s == (0, 1, 3, 0)]
        assert relation.render() == (
            "c_{1131,0} * c_{0240,0} + c_{1230,0} * c_{0141,0} = c_{1140,0} * c_{0231,0}"
        )
        assert all(relation.term_sign(k) == 1 for k in range(3))

    def test_class_values_expand(self, figure_eight):
        """Test class values expand to one signed assignment per simplex."""
        values = [2.0 + 1j, 3.0 - 1j]
        assignments = ptolemy_from_classes(figure_eight, 2, values)
        assert len(assignments) == 2
        for c in assignments:
            assert c[(2, 0, 0, 0)] == 1
            assert {abs(c[t]) for t in lattice_points(2) if max(t) == 1} <= {abs(v) for v in values}

    def test_class_value_count(self, figure_eight):
        """Test the number of class values must match the variables."""
        with pytest.raises(ValidationError, match="expected 2 Ptolemy values"):
            ptolemy_from_classes(figure_eight, 2, [1.0])


class TestPullbacks:
    """Test suite for pullbacks of single-simplex assignments."""

    def test_identity(self, decorations):
        """Test pulling back by the identity changes nothing."""
        (gs,) = decorations(3, 1)
        c = decoration_to_ptolemy(gs)
        assert pullback_ptolemy(Perm4.identity(), c) == c

    def test_three_cycle_on_shapes(self, rng):
        """Test (123)* z at (0210, 0101) is z at (0021, 0110)."""
        coords = {s: complex(*rng.uniform(0.2, 0.8, size=2)) for s in subsimplices(5)}
        z = shape_assignment(5, coords)
        pulled = pullback_shape(Perm4.from_cycles((1, 2, 3)), z)
        assert pulled[((0, 2, 1, 0), (0, 1, 0, 1))] == z[((0, 0, 2, 1), (0, 1, 1, 0))]

    def test_composition(self, decorations):
        """Test tau* sigma* equals (sigma tau)* over all of S4."""
        (gs,) = decorations(3, 1)
        c = decoration_to_ptolemy(gs)
        sigma = Perm4.from_cycles((0, 2, 3, 1))
        for tau in Perm4.elements():
            assert _close(pullback_ptolemy(tau, pullback_ptolemy(sigma, c)), pullback_ptolemy(sigma * tau, c))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_decorations_commute_with_pullback(self, decorations, n):
        """Test C(g_sigma(0), ..., g_sigma(3)) = sigma* C(g) for all sigma."""
        (gs,) = decorations(n, 1)
        c = decoration_to_ptolemy(gs)
        for sigma in Perm4.elements():
            assert _close(decoration_to_ptolemy(pullback_decoration(sigma, gs)), pullback_ptolemy(sigma, c), 1e-8)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_pullback_preserves_relations(self, decorations, n):
        """Test pulled back assignments still satisfy the Ptolemy relations."""
        (gs,) = decorations(n, 1)
        c = decoration_to_ptolemy(gs)
        for sigma in Perm4.elements():
            assert single_relation_residual(n, pullback_ptolemy(sigma, c)) < 1e-9

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_mu_respects_pullback(self, decorations, n):
        """Test mu(sigma* c) = sigma* mu(c) for all sigma."""
        (gs,) = decorations(n, 1)
        c = decoration_to_ptolemy(gs)
        z = mu(c, n)
        for sigma in Perm4.elements():
            assert _close(mu(pullback_ptolemy(sigma, c), n), pullback_shape(sigma, z), 1e-8)


class TestMonomialMap:
    """Test suite for mu."""

    def test_small_example(self):
        """Test c_1001 = 3 and c_1010 = c_0101 = 2 give z = 3/4, z' = 4, z'' = -1/3."""
        c = {(1, 0, 0, 1): 3, (0, 1, 1, 0): 1, (1, 1, 0, 0): 1, (0, 0, 1, 1): 1, (1, 0, 1, 0): 2, (0, 1, 0, 1): 2}
        z = mu(c, 2)
        s = (0, 0, 0, 0)
        assert z[(s, E1100)] == pytest.approx(0.75)
        assert z[(s, (0, 1, 1, 0))] == pytest.approx(4)
        assert z[(s, (1, 0, 1, 0))] == pytest.approx(-1 / 3)
        assert z[(s, E1100)] * z[(s, (0, 1, 1, 0))] * z[(s, (1, 0, 1, 0))] == pytest.approx(-1)

    def test_relation_failure(self):
        """Test coordinates violating the relation are rejected."""
        c = {(1, 0, 0, 1): 3, (0, 1, 1, 0): 1, (1, 1, 0, 0): 1, (0, 0, 1, 1): 1, (1, 0, 1, 0): 2, (0, 1, 0, 1): 3}
        with pytest.raises(RelationResidualError, match="exceeds"):
            mu(c, 2)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_decoration_shapes(self, decorations, n):
        """Test mu of a decoration satisfies the shape relations."""
        for gs in decorations(n, 2):
            assert shape_relation_residual(n, mu(decoration_to_ptolemy(gs), n)) < 1e-9

    def test_exponent_matrix_shape(self, figure_eight):
        """Test rows for z and 1 - z of every column, one column per variable."""
        exponents, signs = mu_exponent_matrix(figure_eight, 3)
        assert exponents.shape == (16, 8)
        assert set(np.abs(signs).tolist()) == {1}
        full, _ = mu_exponent_matrix(figure_eight, 3, full=True)
        assert full.shape == (8 * 6, 8)

    @pytest.mark.parametrize("n", [2, 3])
    def test_on_triangulation(self, decorations, n):
        """Test class values on one simplex give the shapes z of mu."""
        (gs,) = decorations(n, 1)
        c = decoration_to_ptolemy(gs)
        simplex = _single_simplex()
        classes = point_quotient(simplex, n).classes
        values = [c[classes[i].representative[1]] for i in variable_classes(simplex, n)]
        z = mu(c, n)
        expected = [z[(s, E1100)] for s in subsimplices(n)]
        assert np.allclose(mu_on_triangulation(simplex, n, values), expected)


class TestLocalModels:
    """Test suite for edge and face equations on local models."""

    @staticmethod
    def _evaluate(equation, shapes):
        value = 1 + 0j
        for term in equation.terms:
            value *= shapes[term.tet][(term.s, term.e)] ** term.exponent
        return value

    @pytest.mark.parametrize("k", [3, 4, 5])
    @pytest.mark.parametrize("n", [2, 3])
    def test_central_edge_equations(self, rng, k, n):
        """Test shapes of a global decoration satisfy every central edge equation."""
        a, b = (rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)) for _ in range(2))
        ring = [rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)) for _ in range(k)]
        shapes = [mu(decoration_to_ptolemy((a, b, ring[i], ring[(i + 1) % k])), n) for i in range(k)]

        central = {f"{point_label((j, n - j, 0, 0))}_0" for j in range(1, n)}
        equations = [eq for eq in generate(edge_local_model(k), n) if eq.label in central]
        assert len(equations) == n - 1
        for equation in equations:
            assert len(equation.terms) == k
            assert self._evaluate(equation, shapes) == pytest.approx(1, abs=1e-9)

    def test_face_equations(self, rng):
        """Test shapes of a global decoration satisfy the equation at the glued face."""
        n = 3
        shared = [rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)) for _ in range(3)]
        tops = [rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)) for _ in range(2)]
        shapes = [mu(decoration_to_ptolemy((*shared, top)), n) for top in tops]

        (equation,) = [eq for eq in generate(face_local_model(), n) if eq.label == "1110_0"]
        assert len(equation.terms) == 6
        assert self._evaluate(equation, shapes) == pytest.approx(1, abs=1e-9)
