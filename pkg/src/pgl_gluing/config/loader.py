"""Configuration management for pgl_gluing.

Loads and validates configuration from .pgl-gluing/config.yaml
"""

import os
from pathlib import Path
from typing import Optional

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field

from pgl_gluing.models.solve import SolveConfig


class SolverSettings(BaseModel):
    """Main configuration for pgl_gluing."""

    # Verification
    tolerance: float = Field(default=1e-9, gt=0, description="Default residual tolerance")
    genericity_tolerance: float = Field(
        default=1e-8,
        gt=0,
        description="Relative determinant threshold for generic decorations",
    )

    # Newton solver
    newton_max_iterations: int = Field(default=60, ge=1, description="Newton steps per restart")
    restarts: int = Field(default=64, ge=1, description="Random restarts per solve")
    seed: int = Field(default=0, description="Seed for random starting points")
    damping_schedule: list[float] = Field(
        default_factory=lambda: [1.0, 0.5, 0.25, 0.125, 0.0625, 0.03125],
        description="Step factors tried in order until the residual decreases",
    )
    dedup_radius: float = Field(default=1e-6, gt=0, description="Max-norm radius for duplicates")

    # Performance
    max_workers: int = Field(default=4, ge=1, description="Parallel Newton restarts")

    # Logging
    log_level: str = Field(default="WARNING", description="Package log level")

    model_config = ConfigDict(extra="forbid")

    def solve_config(self, **overrides: object) -> SolveConfig:
        """Derive the solver configuration.

        Args:
            **overrides: Field values replacing the configured ones

        Returns:
            SolveConfig for newton_solve
        """
        values: dict[str, object] = {
            "tol": self.tolerance,
            "max_iterations": self.newton_max_iterations,
            "restarts": self.restarts,
            "seed": self.seed,
            "damping_schedule": list(self.damping_schedule),
            "dedup_radius": self.dedup_radius,
            "max_workers": self.max_workers,
        }
        values.update(overrides)
        return SolveConfig(**values)


def _env_overrides() -> dict[str, object]:
    overrides: dict[str, object] = {}
    if os.getenv("PGL_GLUING_TOL"):
        overrides["tolerance"] = float(os.environ["PGL_GLUING_TOL"])
    if os.getenv("PGL_GLUING_SEED"):
        overrides["seed"] = int(os.environ["PGL_GLUING_SEED"])
    if os.getenv("PGL_GLUING_WORKERS"):
        overrides["max_workers"] = int(os.environ["PGL_GLUING_WORKERS"])
    return overrides


def load_config(config_path: Optional[str] = None) -> SolverSettings:
    """Load configuration from file or use defaults.

    Args:
        config_path: Path to config.yaml file. If None, looks for .pgl-gluing/config.yaml

    Returns:
        SolverSettings instance

    Raises:
        FileNotFoundError: If the specified config file doesn't exist
        yaml.YAMLError: If the config file is invalid YAML
    """
    load_dotenv()

    if config_path is None:
        # Look for config in standard locations
        possible_paths = [
            Path.cwd() / ".pgl-gluing" / "config.yaml",
            Path.home() / ".pgl-gluing" / "config.yaml",
        ]
        for path in possible_paths:
            if path.exists():
                config_path = str(path)
                break
    elif not Path(config_path).exists():
        raise FileNotFoundError(f"Config file not found: {config_path}")

    config_data: dict[str, object] = {}
    if config_path is not None:
        with open(config_path, "r") as f:
            config_data = yaml.safe_load(f) or {}

    # Environment wins over files
    config_data.update(_env_overrides())

    return SolverSettings(**config_data)


def save_config(config: SolverSettings, config_path: str) -> None:
    """Save configuration to file.

    Args:
        config: Configuration to save
        config_path: Path to save config file
    """
    path = Path(config_path)
    path.parent.mkdir(parents=True, exist_ok=True)

    with open(config_path, "w") as f:
        yaml.dump(config.model_dump(), f, default_flow_style=False)
