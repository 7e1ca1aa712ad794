"""Square Neumann-Zagier system from the gluing and meridian cusp rows.

With a single torus cusp the gluing rows have rank r - (n - 1). Dropping
n - 1 rows that do not lower the rank and appending the n - 1 meridian rows
gives an r x r system, written in z and z'' through 1 - z = -z z''.
"""

from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from pgl_gluing.cusp.generator import cusp_nz_rows, generate_cusp
from pgl_gluing.exceptions import RankDeficiencyError, ValidationError
from pgl_gluing.gluing.nz import nz_matrices
from pgl_gluing.models.nz import NZDatum
from pgl_gluing.models.triangulation import ConcreteTriangulation, PeripheralCurve
from pgl_gluing.solver.hnf import integer_rank
from pgl_gluing.utils.logging import get_logger

logger = get_logger(__name__)

Strategy = Literal["last", "first"]


@dataclass(frozen=True)
class ReducedNZ:
    """Rows prod z^A z''^B = (-1)^nu."""

    a: np.ndarray
    b: np.ndarray
    nu: np.ndarray
    row_labels: list[str]
    dropped: list[str]

    @property
    def size(self) -> int:
        """Number of rows."""
        return int(self.a.shape[0])

    def residual(self, z: Sequence[complex]) -> float:
        """max |prod z^A z''^B - (-1)^nu| over rows."""
        values = np.asarray(z, dtype=complex)
        z2 = 1 - 1 / values
        products = np.prod(values[np.newaxis, :] ** self.a * z2[np.newaxis, :] ** self.b, axis=1)
        return float(np.max(np.abs(products - (-1.0) ** self.nu)))

    def datum(self, z: Sequence[complex]) -> NZDatum:
        """NZDatum at a shape solution, without flattening."""
        return NZDatum(
            a=self.a.copy(),
            b=self.b.copy(),
            nu=self.nu.copy(),
            z=np.asarray(z, dtype=complex),
            row_labels=list(self.row_labels),
        )


def to_z_double_prime(a: np.ndarray, b: np.ndarray, signs: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Rewrite z^A (1-z)^B = sign as z^(A+B) z''^B = (-1)^nu.

    nu = sum(B) plus 1 for rows with sign -1.
    """
    nu = b.sum(axis=1) + (signs < 0).astype(np.int64)
    return a + b, b.copy(), nu.astype(np.int64)


def _drop_dependent(matrix: np.ndarray, count: int, strategy: Strategy) -> list[int]:
    """Indices of count rows whose removal keeps the rank."""
    rank = integer_rank(matrix)
    keep = list(range(matrix.shape[0]))
    order = keep[::-1] if strategy == "last" else keep[:]
    dropped: list[int] = []
    for index in order:
        if len(dropped) == count:
            break
        trial = [i for i in keep if i != index]
        if integer_rank(matrix[trial]) == rank:
            keep = trial
            dropped.append(index)
    return sorted(dropped)


def nz_reduce(
    triangulation: ConcreteTriangulation,
    n: int,
    meridian: PeripheralCurve,
    strategy: Strategy = "last",
) -> ReducedNZ:
    """Square NZ system with n - 1 dependent rows replaced by meridian rows.

    Args:
        triangulation: Triangulation with one torus cusp
        n: Level
        meridian: Curve whose cusp rows are appended
        strategy: "last" drops dependent rows scanning from the bottom,
            "first" from the top

    Returns:
        ReducedNZ of size r = num_tet * C(n+1, 3)

    Raises:
        RankDeficiencyError: If n - 1 dependent rows cannot be found or the
            result is not of full rank
    """
    if strategy not in ("last", "first"):
        raise ValidationError(f"unknown row removal strategy: {strategy}")

    nz = nz_matrices(triangulation, n)
    dropped = _drop_dependent(nz.matrix(), n - 1, strategy)
    if len(dropped) != n - 1:
        raise RankDeficiencyError(f"found {len(dropped)} dependent gluing rows, need {n - 1}")
    keep = [i for i in range(nz.a.shape[0]) if i not in dropped]

    cusp = generate_cusp(triangulation, n, meridian)
    cusp_a, cusp_b, cusp_signs = cusp_nz_rows(cusp)
    a = np.vstack([nz.a[keep], cusp_a]).astype(np.int64)
    b = np.vstack([nz.b[keep], cusp_b]).astype(np.int64)
    signs = np.concatenate([nz.signs[keep], cusp_signs]).astype(np.int64)
    labels = [nz.row_labels[i] for i in keep] + [f"{meridian.name} level {eq.level}" for eq in cusp]

    a_dg, b_dg, nu = to_z_double_prime(a, b, signs)
    size = a.shape[1]
    if a.shape[0] != size:
        raise RankDeficiencyError(f"reduced system is {a.shape[0]}x{size}, not square")
    rank = integer_rank(np.hstack([a_dg, b_dg]))
    if rank != size:
        raise RankDeficiencyError(f"reduced system has rank {rank}, expected {size}")

    logger.info(
        "Reduced NZ system at n=%d: dropped %s, appended %d %s rows",
        n,
        [nz.row_labels[i] for i in dropped],
        len(cusp),
        meridian.name,
    )
    return ReducedNZ(
        a=a_dg,
        b=b_dg,
        nu=nu,
        row_labels=labels,
        dropped=[nz.row_labels[i] for i in dropped],
    )
