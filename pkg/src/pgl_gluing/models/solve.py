"""Solver configuration and result models."""

from dataclasses import dataclass, field

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator


class SolveConfig(BaseModel):
    """Parameters of a randomized Newton solve.

    Identical configurations (in particular identical seeds) produce
    identical solution lists.
    """

    tol: float = Field(default=1e-9, gt=0, description="Residual tolerance")
    max_iterations: int = Field(default=60, ge=1, description="Newton steps per restart")
    restarts: int = Field(default=64, ge=1, description="Number of random starts")
    seed: int = Field(default=0, description="Seed of the start-point generator")
    damping_schedule: list[float] = Field(
        default_factory=lambda: [1.0, 0.5, 0.25, 0.125, 0.0625, 0.03125],
        description="Step factors tried in order",
    )
    dedup_radius: float = Field(default=1e-6, gt=0, description="Max-norm duplicate radius")
    max_workers: int = Field(default=4, ge=1, description="Concurrent restarts")
    degeneracy_radius: float = Field(
        default=1e-6,
        gt=0,
        description="Solutions with a coordinate this close to 0 or 1 are rejected",
    )

    model_config = ConfigDict(frozen=True, extra="forbid")

    @field_validator("damping_schedule")
    @classmethod
    def validate_damping(cls, v: list[float]) -> list[float]:
        """Damping factors must lie in (0, 1]."""
        if not v or any(not 0 < f <= 1 for f in v):
            raise ValueError("damping factors must lie in (0, 1]")
        return v


@dataclass
class SolveResult:
    """Outcome of newton_solve."""

    solutions: list[np.ndarray]
    attempts: int
    converged: int
    rejected: int
    diagnostics: list[str] = field(default_factory=list)

    @property
    def success(self) -> bool:
        """Whether at least one solution was found."""
        return bool(self.solutions)
