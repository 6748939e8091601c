"""
Discrete check of pucci_minus(D^2 u) <= 0 with centered second differences.
"""
import logging

import numpy as np

from heps.core.pucci import pucci_minus_field
from heps.lab.grid import GridFunction
from heps.models import Ellipticity

logger = logging.getLogger(__name__)

RELATIVE_TOL = 1e-6


def discrete_hessian(u: GridFunction):
    """(uxx, uxy, uyy) on the interior nodes, each of shape (ny - 2, nx - 2)."""
    v = u.values
    h2 = u.h * u.h
    uxx = (v[1:-1, 2:] - 2.0 * v[1:-1, 1:-1] + v[1:-1, :-2]) / h2
    uyy = (v[2:, 1:-1] - 2.0 * v[1:-1, 1:-1] + v[:-2, 1:-1]) / h2
    uxy = (v[2:, 2:] - v[2:, :-2] - v[:-2, 2:] + v[:-2, :-2]) / (4.0 * h2)
    return uxx, uxy, uyy


def _kink_exclusion(u: GridFunction) -> np.ndarray:
    """Interior nodes whose 3x3 stencil contains the kink node."""
    excluded = np.zeros((u.ny - 2, u.nx - 2), dtype=bool)
    if u.kink is None:
        return excluded
    kx, ky = u.kink
    if not (u.xmin <= kx <= u.xmax and u.ymin <= ky <= u.ymax):
        return excluded
    kj, ki = u.node_at(kx, ky)
    # interior index (j - 1, i - 1) sees nodes j-1..j+1, i-1..i+1
    j_lo, j_hi = max(kj - 2, 0), min(kj, u.ny - 3)
    i_lo, i_hi = max(ki - 2, 0), min(ki, u.nx - 3)
    excluded[j_lo:j_hi + 1, i_lo:i_hi + 1] = True
    return excluded


def supersolution_check(u: GridFunction, ell: Ellipticity) -> float:
    """
    Fraction of interior nodes where pucci_minus of the discrete Hessian is at most
    1e-6 * max(1, largest Hessian entry). Nodes whose stencil touches the grid's
    recorded kink are left out of both counts.
    """
    uxx, uxy, uyy = discrete_hessian(u)
    keep = ~_kink_exclusion(u)
    total = int(keep.sum())
    if total == 0:
        return 1.0
    scale = max(
        1.0,
        float(np.abs(uxx[keep]).max()),
        float(np.abs(uxy[keep]).max()),
        float(np.abs(uyy[keep]).max()),
    )
    values = pucci_minus_field(uxx, uxy, uyy, ell)
    ok = (values <= RELATIVE_TOL * scale) & keep
    fraction = int(ok.sum()) / total
    logger.debug("supersolution_check %r ell=%r: %s/%s nodes", u, ell, int(ok.sum()), total)
    return fraction
