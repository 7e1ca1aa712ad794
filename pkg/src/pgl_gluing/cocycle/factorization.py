"""Factorization of middle-edge labels.

A normalized middle label is U_1 D_1 U_2 D_2 ... U_{n-1} D_{n-1} d_pm1 with
U_k = x_1(1)...x_{n-k}(1) and D_k = prod_i H_i(a_{k,i}). Peeling U_1 and
d_pm1 leaves D_1 diag(R', 1), where R' has the same shape one size down and
last column all ones; this recovers every a_{k,i}.
"""

import numpy as np

from pgl_gluing.cocycle.matrices import d_pm1, inverse, product, x_elem
from pgl_gluing.exceptions import SingularMatrixError


def factor_middle_edge(beta: np.ndarray, n: int, tol: float = 1e-8) -> dict[tuple[int, int], complex]:
    """Recover the H-arguments a_{k,i} of a middle-edge label.

    Args:
        beta: Middle label (any scalar multiple)
        n: Size
        tol: Allowed deviation of the remainder from the identity

    Returns:
        {(k, i): a_{k,i}} for 1 <= k <= n-1, 1 <= i <= n-k-1

    Raises:
        SingularMatrixError: If beta does not have the factorized form
    """
    corner = beta[n - 1, n - 1]
    if corner == 0:
        raise SingularMatrixError("middle label has zero corner entry")
    remainder = (beta / corner) @ inverse(d_pm1(n))

    arguments: dict[tuple[int, int], complex] = {}
    size = n
    for k in range(1, n):
        unipotent = product([x_elem(i, 1, size) for i in range(1, size)], size)
        m = inverse(unipotent) @ remainder[:size, :size]
        if size == 2:
            remainder = m
            break
        diagonal = m[: size - 1, size - 2].copy()
        if np.any(diagonal == 0):
            raise SingularMatrixError("middle label is not in factorized form")
        for i in range(1, size - 1):
            arguments[(k, i)] = complex(diagonal[i - 1] / diagonal[i])
        full_diagonal = np.concatenate([diagonal, [1]])
        remainder = np.diag(1 / full_diagonal) @ m
        size -= 1

    deviation = float(np.max(np.abs(remainder[:size, :size] - np.eye(size))))
    if deviation > tol:
        raise SingularMatrixError(
            f"middle label is not in factorized form (remainder off by {deviation:.3e})"
        )
    return arguments


def diagonal_entries(arguments: dict[tuple[int, int], complex], n: int) -> list[complex]:
    """beta_ll = (-1)^(n-l) prod_{i=l}^{n-2} prod_{k=1}^{n-1-i} a_{k,i} for l = 1..n."""
    entries = []
    for l in range(1, n + 1):
        value = complex((-1) ** (n - l))
        for i in range(l, n - 1):
            for k in range(1, n - i):
                value *= arguments[(k, i)]
        entries.append(value)
    return entries
