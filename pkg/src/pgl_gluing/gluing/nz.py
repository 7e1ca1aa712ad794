"""Neumann-Zagier form of the gluing equations and the symplectic pairing."""

from typing import Optional, Sequence

import numpy as np

from pgl_gluing.exceptions import OddExponentError, ValidationError
from pgl_gluing.gluing.generator import column_signs, generate, shape_columns
from pgl_gluing.models.equations import GluingEquation
from pgl_gluing.models.nz import Column, NZMatrices
from pgl_gluing.models.triangulation import ConcreteTriangulation
from pgl_gluing.utils.logging import get_logger

logger = get_logger(__name__)


def to_nz(
    equations: Sequence[GluingEquation],
    columns: Optional[list[Column]] = None,
    column_eps: Optional[Sequence[int]] = None,
) -> NZMatrices:
    """Rewrite z^A' z'^B' z''^C' = 1 as z^A (1-z)^B = 1.

    A = A' - C' and B = C' - B'; the sign (-1)^sum(C') must be +1.

    Args:
        equations: Gluing equations over a common column set
        columns: Column keys (defaults to positional indices)
        column_eps: Orientation sign per column

    Returns:
        NZMatrices with one row per equation

    Raises:
        OddExponentError: If some row has odd sum of z'' exponents
    """
    if not equations:
        raise ValidationError("no equations to convert")

    a_prime = np.array([eq.a for eq in equations], dtype=np.int64)
    b_prime = np.array([eq.b for eq in equations], dtype=np.int64)
    c_prime = np.array([eq.c for eq in equations], dtype=np.int64)

    for eq, row in zip(equations, c_prime):
        if int(row.sum()) % 2:
            raise OddExponentError(
                f"odd z'' exponent sum {int(row.sum())} at point {eq.label}"
            )

    width = a_prime.shape[1]
    if columns is None:
        columns = [(i, (0, 0, 0, 0)) for i in range(width)]
    eps = np.asarray(column_eps if column_eps is not None else [1] * width, dtype=np.int64)

    return NZMatrices(
        a=a_prime - c_prime,
        b=c_prime - b_prime,
        signs=np.array([eq.rhs_sign for eq in equations], dtype=np.int64),
        columns=list(columns),
        row_labels=[eq.label for eq in equations],
        column_eps=eps,
    )


def nz_matrices(triangulation: ConcreteTriangulation, n: int) -> NZMatrices:
    """Generate and convert the gluing equations of a triangulation."""
    return to_nz(
        generate(triangulation, n),
        shape_columns(triangulation, n),
        column_signs(triangulation, n),
    )


def symplectic_pairing(
    v: Sequence[int],
    w: Sequence[int],
    weights: Optional[Sequence[int]] = None,
) -> int:
    """v J w^T with J = [[0, I], [-I, 0]], optionally weighted per column.

    With weights eps the pairing is sum_j eps_j (v_j w_{m+j} - v_{m+j} w_j),
    the plain form in oriented coordinates.

    Raises:
        ValidationError: If the lengths differ or are odd
    """
    if len(v) != len(w) or len(v) % 2:
        raise ValidationError(f"cannot pair vectors of lengths {len(v)} and {len(w)}")
    m = len(v) // 2
    eps = [1] * m if weights is None else list(weights)
    if len(eps) != m:
        raise ValidationError(f"expected {m} weights, got {len(eps)}")
    return sum(
        int(eps[j]) * (int(v[j]) * int(w[m + j]) - int(v[m + j]) * int(w[j])) for j in range(m)
    )


def pairing_matrix(nz: NZMatrices, weighted: bool = True) -> np.ndarray:
    """All row pairings as an integer matrix.

    Args:
        nz: Matrices to pair
        weighted: Weight columns by orientation sign

    Returns:
        Antisymmetric r x r matrix of pairings
    """
    a = nz.a.astype(object)
    b = nz.b.astype(object)
    eps = nz.column_eps if weighted else np.ones(a.shape[1], dtype=np.int64)
    weight = np.diag(eps.astype(object))
    # Python ints keep the products exact
    return a @ weight @ b.T - b @ weight @ a.T


def check_symplectic(nz: NZMatrices, weighted: bool = True) -> list[tuple[str, str, int]]:
    """Row pairs with nonzero pairing.

    Returns:
        (label, label, value) for every pair i < j that fails; empty when
        all rows Poisson commute
    """
    pairings = pairing_matrix(nz, weighted)
    failures = []
    rows = pairings.shape[0]
    for i in range(rows):
        for j in range(i + 1, rows):
            value = int(pairings[i, j])
            if value:
                failures.append((nz.row_labels[i], nz.row_labels[j], value))
    logger.debug("Symplectic check: %d failing pairs of %d rows", len(failures), rows)
    return failures
