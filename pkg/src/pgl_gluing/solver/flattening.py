"""Integer flattenings of a square NZ system."""

import numpy as np

from pgl_gluing.exceptions import FlatteningError, ValidationError
from pgl_gluing.solver.hnf import hermite_solve
from pgl_gluing.utils.logging import get_logger

logger = get_logger(__name__)


def find_flattening(a: np.ndarray, b: np.ndarray, nu: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Integer (f, f'') with A f + B f'' = nu.

    Args:
        a: Exponents of z
        b: Exponents of z''
        nu: Sign exponents

    Returns:
        (f, f'') as int64 vectors

    Raises:
        FlatteningError: If nu is not in the integer image of (A|B)
    """
    if a.shape != b.shape or a.shape[0] != len(nu):
        raise ValidationError(f"incompatible shapes {a.shape}, {b.shape}, {len(nu)}")
    solution = hermite_solve(np.hstack([a, b]), [int(v) for v in nu])
    if solution is None:
        raise FlatteningError("no integer flattening: nu is not in the image of (A|B)")
    width = a.shape[1]
    f = np.array(solution[:width], dtype=np.int64)
    f2 = np.array(solution[width:], dtype=np.int64)
    assert np.array_equal(a @ f + b @ f2, np.asarray(nu, dtype=np.int64))
    logger.debug("Flattening with |f|_1 = %d, |f''|_1 = %d", int(np.abs(f).sum()), int(np.abs(f2).sum()))
    return f, f2
