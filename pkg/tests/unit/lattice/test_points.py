"""Unit tests for integral points of the simplex."""

from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pgl_gluing.exceptions import LatticeError
from pgl_gluing.lattice.points import (
    EDGES,
    PointKind,
    ShapeRole,
    act,
    canonical_edge,
    classify,
    edge_role,
    enumerate_points,
    face_of,
    identification_sign,
    lattice_points,
    parse_label,
    point_label,
    subsimplices,
)
from pgl_gluing.models.permutation import Perm4

perms = st.sampled_from(Perm4.elements())
points = st.integers(min_value=0, max_value=4).flatmap(
    lambda n: st.sampled_from(lattice_points(n + 1))
)


class TestEnumeration:
    """Test suite for point enumeration."""

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_counts(self, n):
        """Test C(n+3,3) points, 4 vertices and C(n-1,3) interior points."""
        enumeration = enumerate_points(n)
        assert len(enumeration.all) == comb(n + 3, 3)
        assert len(enumeration.non_vertex) == comb(n + 3, 3) - 4
        assert len(enumeration.interior) == comb(n - 1, 3)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_subsimplex_count(self, n):
        """Test there are C(n+1,3) subsimplices."""
        assert len(subsimplices(n)) == comb(n + 1, 3)

    def test_lexicographic_order(self):
        """Test subsimplices at n = 3 are ordered 0001, 0010, 0100, 1000."""
        assert subsimplices(3) == [(0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0)]

    def test_level_too_small(self):
        """Test subsimplices need n >= 2."""
        with pytest.raises(LatticeError, match=">= 2"):
            subsimplices(1)


class TestClassification:
    """Test suite for point kinds and labels."""

    def test_kinds(self):
        """Test vertex, edge, face and interior points."""
        assert classify((3, 0, 0, 0)) == PointKind.VERTEX
        assert classify((2, 1, 0, 0)) == PointKind.EDGE
        assert classify((1, 1, 1, 0)) == PointKind.FACE
        assert classify((1, 1, 1, 1)) == PointKind.INTERIOR

    def test_invalid_point(self):
        """Test negative coordinates are rejected."""
        with pytest.raises(LatticeError, match="not a lattice point"):
            classify((2, -1, 0, 0))

    def test_face_of(self):
        """Test a face point lies on the face opposite its zero coordinate."""
        assert face_of((1, 0, 1, 1)) == 1
        with pytest.raises(LatticeError, match="not a face point"):
            face_of((1, 1, 1, 1))

    def test_edge_roles(self):
        """Test opposite edges carry the same shape parameter."""
        assert edge_role((1, 1, 0, 0)) == edge_role((0, 0, 1, 1)) == ShapeRole.Z
        assert edge_role((0, 1, 1, 0)) == edge_role((1, 0, 0, 1)) == ShapeRole.Z_PRIME
        assert edge_role((1, 0, 1, 0)) == edge_role((0, 1, 0, 1)) == ShapeRole.Z_DOUBLE_PRIME
        for e in EDGES:
            assert edge_role(canonical_edge(e)) == edge_role(e)

    def test_labels(self):
        """Test compact and comma separated labels parse back."""
        assert point_label((2, 1, 0, 0)) == "2100"
        assert point_label((10, 0, 0, 1)) == "10,0,0,1"
        assert parse_label("2100") == (2, 1, 0, 0)
        assert parse_label("10,0,0,1") == (10, 0, 0, 1)
        with pytest.raises(LatticeError, match="bad point label"):
            parse_label("21")


class TestAction:
    """Test suite for the S4 action on points."""

    def test_moves_coordinates(self):
        """Test the coordinate at v moves to sigma(v)."""
        sigma = Perm4(image=(1, 2, 3, 0))
        assert act(sigma, (3, 2, 1, 0)) == (0, 3, 2, 1)

    @given(perms, perms, points)
    def test_left_action(self, sigma, tau, t):
        """Test act(sigma tau, t) = act(sigma, act(tau, t))."""
        assert act(sigma * tau, t) == act(sigma, act(tau, t))

    @given(perms, points)
    def test_preserves_level_and_kind(self, sigma, t):
        """Test the action keeps the level and the point kind."""
        image = act(sigma, t)
        assert sum(image) == sum(t)
        assert classify(image) == classify(t)

    @given(perms, perms, points)
    def test_sign_is_cocycle(self, sigma, tau, t):
        """Test sign(sigma tau, t) = sign(sigma, tau t) sign(tau, t)."""
        assert identification_sign(sigma * tau, t) == identification_sign(
            sigma, act(tau, t)
        ) * identification_sign(tau, t)

    def test_even_entries_have_sign_one(self):
        """Test points with all entries even are never sign-flipped."""
        for sigma in Perm4.elements():
            assert identification_sign(sigma, (2, 0, 2, 0)) == 1
