"""The chain maps beta and beta*.

beta sends an integral point to its gluing row; in the basis of z and 1 - z
coordinates it is (A|B)^T. beta* sends a shape coordinate to the exponents of
its Ptolemy monomial, the transpose of the exponent matrix of mu.
"""

import numpy as np

from pgl_gluing.gluing.nz import nz_matrices
from pgl_gluing.models.triangulation import ConcreteTriangulation
from pgl_gluing.ptolemy.monomial import mu_exponent_matrix
from pgl_gluing.utils.logging import get_logger

logger = get_logger(__name__)


def beta_matrices(triangulation: ConcreteTriangulation, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Integer matrices of beta and beta*.

    Returns:
        (beta, beta_star) of shapes (2m, points) and (variables, 2m), where m
        is the number of columns (tet, s)
    """
    nz = nz_matrices(triangulation, n)
    beta = nz.matrix().T
    exponents, _ = mu_exponent_matrix(triangulation, n)
    beta_star = exponents.T
    logger.debug("beta %s, beta* %s at n=%d", beta.shape, beta_star.shape, n)
    return beta, beta_star


def chain_composite(triangulation: ConcreteTriangulation, n: int) -> np.ndarray:
    """beta* composed with beta, computed in Python integers."""
    beta, beta_star = beta_matrices(triangulation, n)
    return beta_star.astype(object) @ beta.astype(object)
