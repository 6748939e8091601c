"""
Sliding-paraboloid measure estimate, checked on a grid.

For every node x0 of F (a subset of {u > Gamma_u^a}) the paraboloid of opening
b = (1 + delta) a tangent to Gamma_u^a at x0 is slid up until it touches u. The
new contact |A_b(u) \\ A_a(u)| is compared with c(ell) (1 + 1/delta)^-2 |F|.
"""
import logging
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from heps.core import c_of
from heps.errors import InvalidInputError
from heps.lab.contact import contact_set, contact_tolerance
from heps.lab.envelope import a_envelope
from heps.lab.grid import GridFunction
from heps.lab.supersolution import supersolution_check
from heps.models import Ellipticity, LemmaCheckReport, Paraboloid

logger = logging.getLogger(__name__)

SCORE_CHUNK = 4_000_000
INTERIOR_BAND = 2

NodeSet = Union[np.ndarray, Iterable[Tuple[int, int]]]


def bound_factor(ell: Ellipticity, delta: float) -> float:
    """c(ell) (1 + 1/delta)^-2"""
    return c_of(ell) / (1.0 + 1.0 / delta) ** 2


def _as_mask(u: GridFunction, nodes: NodeSet) -> np.ndarray:
    if isinstance(nodes, np.ndarray) and nodes.dtype == bool:
        if nodes.shape != u.values.shape:
            raise InvalidInputError(f"F mask has shape {nodes.shape}, grid is {u.values.shape}")
        return nodes.copy()
    mask = np.zeros(u.values.shape, dtype=bool)
    for j, i in nodes:
        if not (0 <= j < u.ny and 0 <= i < u.nx):
            raise InvalidInputError(f"F node {(j, i)} lies outside the grid")
        mask[j, i] = True
    return mask


def tangent_paraboloids(gamma: GridFunction, nodes: np.ndarray, opening: float) -> List[Paraboloid]:
    """Paraboloids of the given opening tangent to gamma at each node of the mask."""
    grad_y, grad_x = np.gradient(gamma.values, gamma.h)
    x, y = gamma.coordinates()
    return [
        Paraboloid.tangent_at(opening, (px, py), value, (gx, gy))
        for px, py, value, gx, gy in zip(
            x[nodes].tolist(), y[nodes].tolist(), gamma.values[nodes].tolist(),
            grad_x[nodes].tolist(), grad_y[nodes].tolist(),
        )
    ]


def slide_paraboloid(u: GridFunction, paraboloid: Paraboloid) -> Tuple[Paraboloid, Tuple[int, int]]:
    """Lift the paraboloid by min(u - P) and return it with the (row, column) node it touches."""
    x, y = u.coordinates()
    gap = u.values - paraboloid(x, y)
    flat = int(np.argmin(gap))
    return paraboloid.lifted(float(gap.ravel()[flat])), divmod(flat, u.nx)


def touching_points(u: GridFunction, paraboloids: Sequence[Paraboloid], candidates: np.ndarray
                    ) -> np.ndarray:
    """
    Flat index where u - P is smallest for each paraboloid P, all of one opening.

    Only ``candidates`` (a superset of the lower-hull nodes of u + (b/2)|x|^2) are
    scanned; ties go to the smallest row-major index.
    """
    if not paraboloids:
        return np.empty(0, dtype=np.int64)
    opening = paraboloids[0].opening
    x, y = u.coordinates()
    flat_index = np.flatnonzero(candidates.ravel())
    cx = x.ravel()[flat_index]
    cy = y.ravel()[flat_index]
    w = u.values.ravel()[flat_index] + 0.5 * opening * (cx * cx + cy * cy)
    s = np.array([p.slope for p in paraboloids])

    out = np.empty(len(s), dtype=np.int64)
    step = max(1, SCORE_CHUNK // max(len(flat_index), 1))
    for start in range(0, len(s), step):
        chunk = s[start:start + step]
        scores = np.outer(chunk[:, 0], cx) + np.outer(chunk[:, 1], cy) - w
        out[start:start + step] = flat_index[np.argmax(scores, axis=1)]
    return out


def lemma_check(u: GridFunction, ell: Ellipticity, a: float, delta: float,
                F: Optional[NodeSet] = None) -> LemmaCheckReport:
    if not a > 0:
        raise InvalidInputError(f"opening a must be positive, got {a!r}")
    if not delta > 0:
        raise InvalidInputError(f"delta must be positive, got {delta!r}")

    b = (1.0 + delta) * a
    gamma = a_envelope(u, a)
    above = (u.values - gamma.values) > contact_tolerance(a, u.h)
    if F is None:
        f_mask = above
    else:
        f_mask = _as_mask(u, F)
        if np.any(f_mask & ~above):
            raise InvalidInputError("F must lie inside {u > Gamma_u^a}")

    mask_a = contact_set(u, a).mask
    mask_b = contact_set(u, b).mask
    area = u.cell_area
    measure_f = int(f_mask.sum()) * area
    measure_new = int(np.count_nonzero(mask_b & ~mask_a)) * area
    bound = bound_factor(ell, delta) * measure_f
    fraction = supersolution_check(u, ell)
    if fraction < 1.0:
        logger.warning("u fails the discrete supersolution test on %.4f of the interior", 1.0 - fraction)

    if measure_f == 0:
        return LemmaCheckReport(
            a=a, delta=delta, c=c_of(ell), measure_F=0.0, measure_new_contact=measure_new,
            bound=0.0, slack=0.0, touching_points=0, satisfied=True, interior_ok=True,
            supersolution_fraction=fraction,
        )

    paraboloids = tangent_paraboloids(gamma, f_mask, b)
    touched = np.unique(touching_points(u, paraboloids, mask_b))
    tj, ti = np.divmod(touched, u.nx)
    band = INTERIOR_BAND
    interior_ok = bool(
        np.all((ti >= band) & (ti <= u.nx - 1 - band) & (tj >= band) & (tj <= u.ny - 1 - band))
    )

    slack = len(touched) * area
    satisfied = measure_new >= bound - slack
    logger.info(
        "lemma_check a=%r delta=%r: |F|=%r new=%r bound=%r touching=%s interior_ok=%s",
        a, delta, measure_f, measure_new, bound, len(touched), interior_ok,
    )
    return LemmaCheckReport(
        a=a, delta=delta, c=c_of(ell), measure_F=measure_f, measure_new_contact=measure_new,
        bound=bound, slack=slack, touching_points=len(touched), satisfied=satisfied,
        interior_ok=interior_ok, supersolution_fraction=fraction,
    )
