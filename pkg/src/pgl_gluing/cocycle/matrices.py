"""Elementary matrices and projective comparison.

Indices of x_i and H_i are 1-based as in the usual notation:
x_i(t) = I + t E_{i,i+1} and H_i(x) = d(x, ..., x, 1, ..., 1) with i copies of x.
"""

from typing import Sequence

import numpy as np

from pgl_gluing.exceptions import SingularMatrixError


def q(values: Sequence[complex]) -> np.ndarray:
    """Counter-diagonal matrix q(a_1, ..., a_n): a_1 bottom left, a_n top right."""
    n = len(values)
    m = np.zeros((n, n), dtype=complex)
    for row in range(n):
        m[row, n - 1 - row] = values[n - 1 - row]
    return m


def d(values: Sequence[complex]) -> np.ndarray:
    """Diagonal matrix d(a_1, ..., a_n)."""
    return np.diag(np.asarray(values, dtype=complex))


def q1(n: int) -> np.ndarray:
    """q(1, ..., 1); an involution."""
    return q([1] * n)


def d_pm1(n: int) -> np.ndarray:
    """d((-1)^(n-k) for k = 1..n)."""
    return d([(-1) ** (n - k) for k in range(1, n + 1)])


def h(i: int, x: complex, n: int) -> np.ndarray:
    """H_i(x)."""
    return d([x] * i + [1] * (n - i))


def x_elem(i: int, t: complex, n: int) -> np.ndarray:
    """x_i(t) = I + t E_{i,i+1}."""
    m = np.eye(n, dtype=complex)
    m[i - 1, i] = t
    return m


def product(matrices: Sequence[np.ndarray], n: int) -> np.ndarray:
    """Ordered product, accumulated left to right."""
    result = np.eye(n, dtype=complex)
    for m in matrices:
        result = result @ m
    return result


def inverse(m: np.ndarray) -> np.ndarray:
    """Matrix inverse.

    Raises:
        SingularMatrixError: If m is singular
    """
    try:
        return np.linalg.inv(m)
    except np.linalg.LinAlgError as e:
        raise SingularMatrixError(f"singular {m.shape[0]}x{m.shape[0]} matrix") from e


def normalize_pgl(m: np.ndarray) -> np.ndarray:
    """Representative of m in PGL: divide by the first entry of maximal modulus.

    Raises:
        SingularMatrixError: If m is zero
    """
    flat = np.abs(m).ravel()
    peak = flat.max()
    if peak == 0:
        raise SingularMatrixError("zero matrix has no projective class")
    index = int(np.argmax(flat >= peak * (1 - 1e-12)))
    return m / m.ravel()[index]


def pgl_equal(a: np.ndarray, b: np.ndarray, tol: float = 1e-8) -> bool:
    """Whether a b^-1 is a scalar multiple of the identity within tol.

    Raises:
        SingularMatrixError: If b is singular
    """
    c = normalize_pgl(a @ inverse(b))
    n = c.shape[0]
    scalar = np.trace(c) / n
    if abs(scalar) <= tol:
        return False
    return float(np.max(np.abs(c - scalar * np.eye(n)))) <= tol


def is_unipotent(m: np.ndarray, tol: float = 1e-6, projective: bool = True) -> bool:
    """Whether all eigenvalues of m lie within tol of 1 (up to a scalar if projective).

    N = m/lambda - I must also be nilpotent within tol.
    """
    n = m.shape[0]
    scalar = np.trace(m) / n if projective else 1.0
    if abs(scalar) == 0:
        return False
    nil = m / scalar - np.eye(n)
    power = np.linalg.matrix_power(nil, n)
    bound = tol * max(1.0, float(np.max(np.abs(nil)))) ** n
    if float(np.max(np.abs(power))) > bound:
        return False
    return eigenvalue_deviation(m, projective) <= tol


def eigenvalue_deviation(m: np.ndarray, projective: bool = True) -> float:
    """max |eigenvalue / lambda - 1|, with lambda = trace/n when projective."""
    n = m.shape[0]
    scalar = np.trace(m) / n if projective else 1.0
    eigenvalues = np.linalg.eigvals(m / scalar)
    return float(np.max(np.abs(eigenvalues - 1)))
