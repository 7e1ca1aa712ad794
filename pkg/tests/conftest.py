"""Pytest configuration and shared fixtures."""

import cmath

import numpy as np
import pytest

from pgl_gluing.models.triangulation import ConcreteTriangulation
from pgl_gluing.ptolemy.decoration import random_decoration
from pgl_gluing.triangulation.fixtures import load_fixture
from pgl_gluing.triangulation.moves import two_three_move

SQRT3 = cmath.sqrt(3)
SQRT7 = cmath.sqrt(7)


@pytest.fixture(scope="session")
def figure_eight() -> ConcreteTriangulation:
    """The bundled two-simplex figure-eight knot complement with mu and lambda."""
    return load_fixture("figure_eight")


@pytest.fixture(scope="session")
def meridian(figure_eight):
    """The meridian curve mu of the figure-eight."""
    return figure_eight.curve("mu")


@pytest.fixture(scope="session")
def longitude(figure_eight):
    """The longitude curve lambda of the figure-eight."""
    return figure_eight.curve("lambda")


@pytest.fixture(scope="session")
def five_tet(figure_eight) -> ConcreteTriangulation:
    """A five-simplex triangulation of the figure-eight complement.

    Three 2-3 moves: the first across face 0 of simplex 0, then across
    face 2 of the last simplex, which is always glued to another new one.
    """
    tri = two_three_move(figure_eight, 0, 0)
    tri = two_three_move(tri, tri.num_tet - 1, 2)
    tri = two_three_move(tri, tri.num_tet - 1, 2)
    assert tri.num_tet == 5
    return tri


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator so random data is reproducible."""
    return np.random.default_rng(20240917)


@pytest.fixture
def decorations(rng):
    """Factory for lists of random generic decorations."""

    def make(n: int, count: int):
        return [random_decoration(n, rng) for _ in range(count)]

    return make


def _columns(z: list[complex], w: list[complex]) -> np.ndarray:
    # Columns per simplex are ordered 0001, 0010, 0100, 1000, i.e. z_3..z_0
    return np.array(list(reversed(z)) + list(reversed(w)), dtype=complex)


def _component_one(r: complex) -> np.ndarray:
    z = [r + 1.5, r / 2 + 0.5, -r / 2 + 0.25, -r + 1]
    w = [-r - 0.5, 2 * r + 2, -2 * r + 1, r]
    return _columns(z, w)


def _component_two(r: complex) -> np.ndarray:
    z = [1 - r, r, r, 1 - r]
    w = [r, 1 - r, 1 - r, r]
    return _columns(z, w)


def _component_three(r: complex) -> np.ndarray:
    z = [r - 1.5, -2 * r + 4, 2 * r - 1, -r + 1]
    w = [-r + 2.5, -r / 2 + 1, r / 2 - 0.25, r]
    return _columns(z, w)


def _component_four(r: complex) -> np.ndarray:
    return _columns([1 - r] * 4, [r] * 4)


@pytest.fixture(scope="session")
def n3_components() -> dict[str, list[np.ndarray]]:
    """The four known n = 3 figure-eight solution components, both roots each.

    Each is parametrized by a root r of a quadratic; shapes of simplex 0 are
    affine in r, simplex 1 carries r itself at 0001.
    """
    roots_7 = [(-1 + s * 1j * SQRT7.real) / 4 for s in (1, -1)]
    roots_3 = [(1 + s * 1j * SQRT3.real) / 2 for s in (1, -1)]
    roots_7b = [(5 + s * 1j * SQRT7.real) / 4 for s in (1, -1)]
    return {
        "one": [_component_one(r) for r in roots_7],
        "two": [_component_two(r) for r in roots_3],
        "three": [_component_three(r) for r in roots_7b],
        "four": [_component_four(r) for r in roots_3],
    }


@pytest.fixture(scope="session")
def geometric_n2() -> np.ndarray:
    """The positively oriented n = 2 figure-eight solution (x, conj(x))."""
    x = cmath.exp(1j * cmath.pi / 3)
    return np.array([x, x.conjugate()])
