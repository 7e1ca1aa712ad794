"""Unit tests for gluing equation generation and the NZ form."""

from math import comb

import numpy as np
import pytest

from pgl_gluing.cusp.generator import generate_cusp
from pgl_gluing.exceptions import OddExponentError, ValidationError
from pgl_gluing.gluing.generator import column_signs, generate, shape_columns
from pgl_gluing.gluing.nz import (
    check_symplectic,
    nz_matrices,
    pairing_matrix,
    symplectic_pairing,
    to_nz,
)
from pgl_gluing.lattice.points import PointKind, parse_label
from pgl_gluing.models.equations import GluingEquation


class TestGenerate:
    """Test suite for gluing equation generation."""

    @pytest.mark.parametrize("n, count", [(2, 2), (3, 8), (4, 20), (5, 40)])
    def test_figure_eight_counts(self, figure_eight, n, count):
        """Test 2 / 8 / 20 / 40 equations for n = 2..5."""
        assert len(generate(figure_eight, n)) == count

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_five_simplex_counts(self, five_tet, n):
        """Test t C(n+1,3) equations on five simplices."""
        assert len(generate(five_tet, n)) == 5 * comb(n + 1, 3)

    def test_kinds_at_n4(self, figure_eight):
        """Test edge, face and interior equations at n = 4."""
        kinds = [eq.kind for eq in generate(figure_eight, 4)]
        assert kinds.count(PointKind.EDGE) == 6
        assert kinds.count(PointKind.FACE) == 12
        assert kinds.count(PointKind.INTERIOR) == 2

    def test_columns(self, figure_eight):
        """Test columns are (tet, s) with s lexicographic."""
        columns = shape_columns(figure_eight, 3)
        assert columns[:4] == [(0, (0, 0, 0, 1)), (0, (0, 0, 1, 0)), (0, (0, 1, 0, 0)), (0, (1, 0, 0, 0))]
        assert len(columns) == 8
        assert column_signs(figure_eight, 3) == [figure_eight.eps[0]] * 4 + [figure_eight.eps[1]] * 4

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_every_shape_used_once(self, figure_eight, n):
        """Test each column contributes z, z' and z'' twice each with its sign."""
        equations = generate(figure_eight, n)
        eps = np.array(column_signs(figure_eight, n))
        for field in ("a", "b", "c"):
            total = np.sum([getattr(eq, field) for eq in equations], axis=0)
            assert np.array_equal(total, 2 * eps)

    def test_interior_equation_terms(self, figure_eight):
        """Test an interior point collects all six edges of its simplex."""
        interior = [eq for eq in generate(figure_eight, 4) if eq.kind == PointKind.INTERIOR]
        for eq in interior:
            assert len(eq.terms) == 6
            assert {t.tet for t in eq.terms} == {int(eq.label.split("_")[1])}

    def test_render(self, figure_eight):
        """Test equations render as products equal to their sign."""
        text = generate(figure_eight, 2)[0].render()
        assert text.startswith("z_{")
        assert text.endswith("= 1")

    def test_deterministic(self, figure_eight):
        """Test repeated generation gives equal equations."""
        assert generate(figure_eight, 3) == generate(figure_eight, 3)


class TestNZForm:
    """Test suite for (A|B) and the symplectic pairing."""

    def test_shape(self, figure_eight):
        """Test (A|B) is r x 2r."""
        for n in (2, 3, 4, 5):
            r = 2 * comb(n + 1, 3)
            assert nz_matrices(figure_eight, n).matrix().shape == (r, 2 * r)

    def test_n2_rows(self, figure_eight):
        """Test the two n = 2 rows are (-2,-2 | 1,1) and its negative."""
        rows = sorted(nz_matrices(figure_eight, 2).matrix().tolist())
        assert rows == [[-2, -2, 1, 1], [2, 2, -1, -1]]

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_column_sums_vanish(self, figure_eight, n):
        """Test the rows of A and of B sum to zero."""
        nz = nz_matrices(figure_eight, n)
        assert not nz.a.sum(axis=0).any()
        assert not nz.b.sum(axis=0).any()
        assert set(nz.signs.tolist()) == {1}

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_symplectic_figure_eight(self, figure_eight, n):
        """Test all row pairings vanish on the figure-eight."""
        assert check_symplectic(nz_matrices(figure_eight, n)) == []

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_symplectic_five_simplices(self, five_tet, n):
        """Test all row pairings vanish on five simplices."""
        assert check_symplectic(nz_matrices(five_tet, n)) == []

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_oriented_coordinates_agree(self, figure_eight, n):
        """Test the plain pairing in oriented coordinates equals the weighted one."""
        nz = nz_matrices(figure_eight, n)
        assert np.array_equal(
            pairing_matrix(nz.oriented(), weighted=False), pairing_matrix(nz, weighted=True)
        )

    def test_pairing_is_antisymmetric(self, figure_eight):
        """Test the pairing matrix is antisymmetric."""
        m = pairing_matrix(nz_matrices(figure_eight, 3), weighted=False)
        assert (m == -m.T).all()

    def test_weighted_pairing_values(self):
        """Test weights change the pairing of (-2,-2|1,1) and (-1,-1|1,1)."""
        v, w = [-2, -2, 1, 1], [-1, -1, 1, 1]
        assert symplectic_pairing(v, w) == -2
        assert symplectic_pairing(v, w, weights=[1, -1]) == 0

    def test_pairing_length_mismatch(self):
        """Test vectors of different lengths cannot be paired."""
        with pytest.raises(ValidationError, match="cannot pair"):
            symplectic_pairing([1, 0], [1, 0, 0, 0])

    def test_odd_exponent(self):
        """Test a row with odd z'' exponent sum is rejected."""
        equation = GluingEquation(
            point=0, label="1100_0", kind=PointKind.EDGE, terms=(), a=(0,), b=(0,), c=(1,)
        )
        with pytest.raises(OddExponentError, match="odd z'' exponent sum 1"):
            to_nz([equation])

    def test_no_equations(self):
        """Test converting an empty system fails."""
        with pytest.raises(ValidationError, match="no equations"):
            to_nz([])


# Figure-eight equations at n = 4 as products of z^e_s on simplex 0 and
# w^e_s = (z^e_s on simplex 1)^-1, written "e/s".
FIGURE_EIGHT_N4 = [
    "z0110/2000 z1010/1100 z1100/1010 w0011/2000 w1010/1001 w1001/1010",
    "z0110/1100 z1010/0200 z1100/0110 w0011/1010 w1001/0020 w1010/0011",
    "z0110/1010 z1010/0110 z1100/0020 w0011/1001 w1001/0011 w1010/0002",
    "z0101/2000 z1001/1100 z1100/1001 w0011/0200 w0101/0110 w0110/0101",
    "z0101/1100 z1001/0200 z1100/0101 w0011/0110 w0101/0020 w0110/0011",
    "z0101/1001 z1001/0101 z1100/0002 w0011/0101 w0101/0011 w0110/0002",
    "z0011/0200 z0101/0110 z0110/0101 w0101/2000 w1001/1100 w1100/1001",
    "z0011/0110 z0101/0020 z0110/0011 w0101/1100 w1001/0200 w1100/0101",
    "z0011/0101 z0101/0011 z0110/0002 w0101/1001 w1001/0101 w1100/0002",
    "z0011/2000 z1001/1010 z1010/1001 w0110/2000 w1010/1100 w1100/1010",
    "z0011/1010 z1001/0020 z1010/0011 w0110/1100 w1010/0200 w1100/0110",
    "z0011/1001 z1001/0011 z1010/0002 w0110/1010 w1010/0110 w1100/0020",
    "z1010/2000 z0110/0200 z0101/0200 w1100/2000 w1001/2000 w0011/0020",
    "z1010/1010 z0110/0110 z0101/0101 w1100/1100 w1001/1001 w0011/0011",
    "z1010/0020 z0110/0020 z0101/0002 w1100/0200 w1001/0002 w0011/0002",
    "z1100/2000 z1001/2000 z0011/0020 w1010/2000 w0110/0200 w0101/0200",
    "z1100/1100 z1001/1001 z0011/0011 w1010/1010 w0110/0110 w0101/0101",
    "z1100/0200 z1001/0002 z0011/0002 w1010/0020 w0110/0020 w0101/0002",
    "z0011/1100 z0101/1010 z0110/1001 z1001/0110 z1010/0101 z1100/0011",
    "w0011/1100 w0101/1010 w0110/1001 w1001/0110 w1010/0101 w1100/0011",
]


def _parse_terms(text):
    terms = set()
    for token in text.split():
        e, s = token[1:].split("/")
        tet, exponent = (0, 1) if token[0] == "z" else (1, -1)
        terms.add((tet, parse_label(s), parse_label(e), exponent))
    return frozenset(terms)


class TestFigureEightTable:
    """Test suite comparing n = 4 figure-eight equations with the known list."""

    def test_gluing_equations(self, figure_eight):
        """Test the generated equations are exactly the listed ones."""
        generated = {
            frozenset((t.tet, t.s, t.e, t.exponent) for t in eq.terms)
            for eq in generate(figure_eight, 4)
        }
        assert generated == {_parse_terms(text) for text in FIGURE_EIGHT_N4}

    def test_meridian_levels(self, figure_eight, meridian):
        """Test the mu equations at n = 4 use z^{1010} and X at the listed points."""
        first, second, third = generate_cusp(figure_eight, 4, meridian)
        for eq, s, xs in (
            (first, "0020", {"1021", "1012"}),
            (second, "1010", {"2011"}),
            (third, "2000", set()),
        ):
            assert {(t.tet, t.s, t.e) for t in eq.shape_terms} == {
                (tet, parse_label(s), parse_label("1010")) for tet in (0, 1)
            }
            assert {(x.tet, x.t) for x in eq.x_terms} == {
                (tet, parse_label(t)) for tet in (0, 1) for t in xs
            }
