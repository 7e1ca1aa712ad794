"""Bundled triangulation files."""

from pathlib import Path

from pgl_gluing.models.triangulation import ConcreteTriangulation
from pgl_gluing.triangulation.parser import load_triangulation

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


def list_fixtures() -> list[str]:
    """Names of the bundled triangulations, sorted."""
    return sorted(p.stem for p in DATA_DIR.glob("*.json"))


def fixture_path(name: str) -> Path:
    """Path of a bundled triangulation file.

    Raises:
        FileNotFoundError: If no fixture has this name
    """
    path = DATA_DIR / f"{name}.json"
    if not path.exists():
        raise FileNotFoundError(
            f"No bundled triangulation named {name!r}; available: {', '.join(list_fixtures())}"
        )
    return path


def load_fixture(name: str) -> ConcreteTriangulation:
    """Load a bundled triangulation by name, e.g. 'figure_eight'."""
    return load_triangulation(fixture_path(name))
