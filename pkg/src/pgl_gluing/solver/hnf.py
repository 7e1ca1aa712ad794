"""Exact integer linear algebra.

hermite_solve brings M to a lower column echelon form H = M U by unimodular
column operations (extended gcd on pairs of columns), solves H y = b by
forward substitution and returns x = U y.
"""

from typing import Optional, Sequence

import numpy as np
from sympy import Matrix

from pgl_gluing.utils.logging import get_logger

logger = get_logger(__name__)

IntMatrix = list[list[int]]


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Bezout coefficients (x, y, g) with x a + y b = g and g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -x0, -y0, -a
    return x0, y0, a


def integer_rank(m: np.ndarray | Sequence[Sequence[int]]) -> int:
    """Exact rank of an integer matrix."""
    rows = np.asarray(m, dtype=object).tolist()
    if not rows or not rows[0]:
        return 0
    return int(Matrix(rows).rank())


def _combine(h: IntMatrix, u: IntMatrix, i: int, p: int, j: int) -> None:
    """Column operation zeroing h[i][j] against the pivot column p."""
    a, b = h[i][p], h[i][j]
    x, y, g = extended_gcd(a, b)
    # [[x, -b/g], [y, a/g]] has determinant 1
    ag, bg = a // g, b // g
    for matrix in (h, u):
        for row in matrix:
            left, right = row[p], row[j]
            row[p] = x * left + y * right
            row[j] = -bg * left + ag * right


def column_hermite(m: np.ndarray | Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix, list[tuple[int, int]]]:
    """Column Hermite form with its transform.

    Returns:
        (H, U, pivots) with H = M U, U unimodular, and pivots the
        (row, column) positions of the echelon pivots; pivots are positive
        and entries left of a pivot lie in [0, pivot)
    """
    h: IntMatrix = [[int(v) for v in row] for row in np.asarray(m, dtype=object).tolist()]
    rows = len(h)
    cols = len(h[0]) if rows else 0
    u: IntMatrix = [[int(r == c) for c in range(cols)] for r in range(cols)]
    pivots: list[tuple[int, int]] = []

    column = 0
    for i in range(rows):
        if column >= cols:
            break
        for j in range(column + 1, cols):
            if h[i][j] != 0:
                _combine(h, u, i, column, j)
        if h[i][column] == 0:
            continue
        if h[i][column] < 0:
            for matrix in (h, u):
                for row in matrix:
                    row[column] = -row[column]
        pivot = h[i][column]
        for k in range(column):
            quotient = h[i][k] // pivot
            if quotient:
                for matrix in (h, u):
                    for row in matrix:
                        row[k] -= quotient * row[column]
        pivots.append((i, column))
        column += 1
    return h, u, pivots


def hermite_solve(m: np.ndarray | Sequence[Sequence[int]], b: Sequence[int]) -> Optional[list[int]]:
    """Integer solution of M x = b, or None if there is none.

    Free coordinates of the echelon system are set to 0, which makes the
    result deterministic.
    """
    h, u, pivots = column_hermite(m)
    rhs = [int(v) for v in b]
    cols = len(u)
    y = [0] * cols
    pivot_at = dict(pivots)

    for i, row in enumerate(h):
        partial = sum(row[k] * y[k] for k in range(cols) if row[k])
        if i in pivot_at:
            c = pivot_at[i]
            remainder = rhs[i] - (partial - row[c] * y[c])
            if remainder % row[c]:
                logger.debug("No integer solution: row %d not divisible by pivot %d", i, row[c])
                return None
            y[c] = remainder // row[c]
        elif partial != rhs[i]:
            logger.debug("No integer solution: row %d inconsistent", i)
            return None

    return [sum(u[r][k] * y[k] for k in range(cols)) for r in range(cols)]
