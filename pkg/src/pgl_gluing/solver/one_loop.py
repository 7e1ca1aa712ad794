"""The 1-loop invariant of an enhanced Neumann-Zagier datum.

    tau = 1/2 det(A diag(z'') + B diag(z)^-1) prod z^f'' z''^-f

defined up to sign.
"""

import numpy as np

from pgl_gluing.exceptions import SingularMatrixError, ValidationError
from pgl_gluing.models.nz import NZDatum
from pgl_gluing.utils.logging import get_logger

logger = get_logger(__name__)


def one_loop(datum: NZDatum) -> complex:
    """tau of a datum with a flattening.

    Raises:
        ValidationError: If the datum has no flattening
        SingularMatrixError: If some shape is 0 or 1
    """
    if datum.f is None or datum.f2 is None:
        raise ValidationError("datum has no flattening")
    z = np.asarray(datum.z, dtype=complex)
    if np.any(z == 0) or np.any(z == 1):
        raise SingularMatrixError("diag(z) or diag(z'') is singular")

    z2 = 1 - 1 / z
    matrix = datum.a * z2[np.newaxis, :] + datum.b / z[np.newaxis, :]
    monomial = np.prod(z ** datum.f2 * z2 ** (-datum.f))
    tau = complex(0.5 * np.linalg.det(matrix) * monomial)
    logger.info("1-loop invariant of a size %d datum: %.10g%+.10gi", datum.size, tau.real, tau.imag)
    return tau
