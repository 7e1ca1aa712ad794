"""Residual classification for verification reports.

Grades multiplicative residuals of gluing, cusp and Ptolemy systems.
"""

from enum import Enum
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field


class ResidualLevel(str, Enum):
    """Residual categories."""
    EXACT = "exact"        # <= 1e-14
    PASS = "pass"          # <= tolerance
    MARGINAL = "marginal"  # <= 1000 * tolerance
    FAIL = "fail"


class ResidualReport(BaseModel):
    """Outcome of evaluating a system of equations at a point."""

    max_residual: float = Field(..., description="Largest residual over all rows")
    tolerance: float = Field(..., description="Tolerance used for the pass decision")
    passed: bool = Field(..., description="Whether max_residual <= tolerance")
    level: ResidualLevel = Field(..., description="Residual category")
    worst_row: Optional[str] = Field(None, description="Label of the row attaining the maximum")
    rows: int = Field(default=0, description="Number of rows evaluated")

    model_config = ConfigDict(frozen=True, extra="forbid")


def get_residual_level(residual: float, tolerance: float) -> ResidualLevel:
    """Convert a residual to a categorical level.

    Args:
        residual: Non-negative residual
        tolerance: Pass threshold

    Returns:
        ResidualLevel enum value
    """
    if residual <= 1e-14:
        return ResidualLevel.EXACT
    if residual <= tolerance:
        return ResidualLevel.PASS
    if residual <= 1000 * tolerance:
        return ResidualLevel.MARGINAL
    return ResidualLevel.FAIL


def build_report(residuals: list[float], labels: list[str], tolerance: float) -> ResidualReport:
    """Summarize per-row residuals.

    Args:
        residuals: Residual of each row
        labels: Row labels, parallel to residuals
        tolerance: Pass threshold

    Returns:
        ResidualReport for the worst row (an empty system passes trivially)
    """
    if not residuals:
        return ResidualReport(
            max_residual=0.0,
            tolerance=tolerance,
            passed=True,
            level=ResidualLevel.EXACT,
            rows=0,
        )

    values = np.asarray(residuals, dtype=float)
    # non-finite rows always fail
    bad = np.flatnonzero(~np.isfinite(values))
    worst = int(bad[0]) if bad.size else int(np.argmax(values))
    value = float(values[worst])
    return ResidualReport(
        max_residual=value,
        tolerance=tolerance,
        passed=value <= tolerance,
        level=get_residual_level(value, tolerance),
        worst_row=labels[worst],
        rows=len(residuals),
    )
