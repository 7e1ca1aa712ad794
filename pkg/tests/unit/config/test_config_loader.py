"""Unit tests for configuration loading."""

import pytest
from pydantic import ValidationError

from pgl_gluing.config.loader import SolverSettings, load_config, save_config


class TestLoadConfig:
    """Test suite for load_config."""

    @pytest.fixture(autouse=True)
    def clean_env(self, monkeypatch):
        """Remove environment overrides."""
        for name in ("PGL_GLUING_TOL", "PGL_GLUING_SEED", "PGL_GLUING_WORKERS"):
            monkeypatch.delenv(name, raising=False)

    def test_defaults(self):
        """Test default settings."""
        settings = SolverSettings()
        assert settings.restarts == 64
        assert settings.damping_schedule[0] == 1.0

    def test_from_file(self, tmp_path):
        """Test values are read from YAML."""
        path = tmp_path / "config.yaml"
        path.write_text("restarts: 8\nseed: 5\n")
        settings = load_config(str(path))
        assert settings.restarts == 8
        assert settings.seed == 5

    def test_empty_file(self, tmp_path):
        """Test an empty file gives defaults."""
        path = tmp_path / "config.yaml"
        path.write_text("")
        assert load_config(str(path)) == SolverSettings()

    def test_missing_file(self, tmp_path):
        """Test an explicit missing path raises."""
        with pytest.raises(FileNotFoundError, match="Config file not found"):
            load_config(str(tmp_path / "nope.yaml"))

    def test_unknown_key(self, tmp_path):
        """Test unknown keys are rejected."""
        path = tmp_path / "config.yaml"
        path.write_text("colour: blue\n")
        with pytest.raises(ValidationError):
            load_config(str(path))

    def test_environment_wins(self, tmp_path, monkeypatch):
        """Test environment variables override the file."""
        path = tmp_path / "config.yaml"
        path.write_text("seed: 5\ntolerance: 1.0e-6\n")
        monkeypatch.setenv("PGL_GLUING_SEED", "9")
        monkeypatch.setenv("PGL_GLUING_TOL", "1e-11")
        monkeypatch.setenv("PGL_GLUING_WORKERS", "2")
        settings = load_config(str(path))
        assert settings.seed == 9
        assert settings.tolerance == 1e-11
        assert settings.max_workers == 2

    def test_save_and_load(self, tmp_path):
        """Test a saved configuration loads back equal."""
        settings = SolverSettings(restarts=12, damping_schedule=[1.0, 0.5])
        path = tmp_path / "nested" / "config.yaml"
        save_config(settings, str(path))
        assert load_config(str(path)) == settings


class TestSolveConfig:
    """Test suite for deriving solver parameters."""

    def test_fields_carry_over(self):
        """Test settings map onto SolveConfig."""
        config = SolverSettings(tolerance=1e-7, restarts=3, seed=4).solve_config()
        assert config.tol == 1e-7
        assert config.restarts == 3
        assert config.seed == 4

    def test_overrides(self):
        """Test keyword overrides replace configured values."""
        assert SolverSettings(seed=4).solve_config(seed=10).seed == 10
