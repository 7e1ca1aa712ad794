"""Internal-equation determinacy on a single simplex.

For s with s2, s3 > 0 the interior equation at t = s + 1100 involves
z^{1100}_s and five coordinates with smaller s2 + s3, so it determines
z^{1100}_s from them.
"""

from typing import Mapping

from pgl_gluing.lattice.points import EDGES, LatticePoint, point_label, sub, subsimplices
from pgl_gluing.utils.logging import get_logger
from pgl_gluing.utils.residuals import ResidualReport, build_report

logger = get_logger(__name__)

_E1100: LatticePoint = (1, 1, 0, 0)


def check_internal_determinacy(
    shapes: Mapping[tuple[LatticePoint, LatticePoint], complex],
    n: int,
    tol: float = 1e-9,
) -> ResidualReport:
    """Recompute z^{1100}_s from the interior equation and compare.

    Args:
        shapes: Six-edge shape assignment of one simplex
        n: Level
        tol: Relative pass threshold

    Returns:
        ResidualReport with one row per subsimplex s with s2, s3 > 0
    """
    residuals = []
    labels = []
    for s in subsimplices(n):
        if s[2] == 0 or s[3] == 0:
            continue
        t = (s[0] + 1, s[1] + 1, s[2], s[3])
        others = 1 + 0j
        for e in EDGES:
            if e != _E1100:
                others *= shapes[(sub(t, e), e)]
        stored = shapes[(s, _E1100)]
        recomputed = 1 / others
        residuals.append(abs(recomputed - stored) / max(1.0, abs(stored)))
        labels.append(point_label(s))

    logger.debug("Checked %d interior equations at n=%d", len(residuals), n)
    return build_report(residuals, labels, tol)
