"""
Contact sets A_a(u), the curvature function Theta and its level-set measures.
"""
import logging
import math
from typing import Optional, Tuple

import numpy as np
from scipy.optimize import linprog

from heps.config import settings
from heps.errors import DomainTooSmallError, InvalidInputError
from heps.lab.envelope import a_envelope
from heps.lab.grid import GridFunction
from heps.models import ContactSet

logger = logging.getLogger(__name__)

HIGHS_OPTIONS = {"primal_feasibility_tolerance": 1e-10, "dual_feasibility_tolerance": 1e-10}


def contact_tolerance(a: float, h: float, factor: Optional[float] = None) -> float:
    factor = settings.HEPS_CONTACT_TOL_FACTOR if factor is None else factor
    return factor * (1.0 + a) * h * h


def contact_set(u: GridFunction, a: float, method: str = "hull") -> ContactSet:
    """Nodes where u - Gamma_u^a <= factor (1 + a) h^2."""
    if a < 0:
        raise InvalidInputError(f"opening must be nonnegative, got {a!r}")
    envelope = a_envelope(u, a, method=method)
    tol = contact_tolerance(a, u.h)
    mask = (u.values - envelope.values) <= tol
    return ContactSet(opening=a, mask=mask, tol=tol)


def max_opening(u: GridFunction) -> float:
    """Largest opening the grid resolves: 4 range(u) / h^2."""
    return 4.0 * float(u.values.max() - u.values.min()) / (u.h * u.h)


def _theta_lp(u: GridFunction, node: Tuple[int, int], a_max: float) -> float:
    """
    Smallest A with a paraboloid of opening -A below u (up to the contact
    tolerance) and touching at the node, as one linear program in (A, y).
    """
    x, y = u.coordinates()
    x0, y0 = u.position(node)
    dx = (x - x0).ravel()
    dy = (y - y0).ravel()
    du = (u.values - u.values[node]).ravel()
    factor = settings.HEPS_CONTACT_TOL_FACTOR
    h2 = u.h * u.h
    # u(x) >= u0 - factor (1 + A) h^2 + y.d - (A/2)|d|^2
    a_ub = np.column_stack([-(0.5 * (dx * dx + dy * dy) + factor * h2), dx, dy])
    b_ub = du + factor * h2
    result = linprog(
        c=[1.0, 0.0, 0.0],
        A_ub=a_ub,
        b_ub=b_ub,
        bounds=[(0.0, a_max), (None, None), (None, None)],
        method="highs",
        options=HIGHS_OPTIONS,
    )
    if result.status == 2:
        return math.inf
    if result.status != 0:
        raise InvalidInputError(f"curvature program failed at node {node}: {result.message}")
    return max(float(result.x[0]), 0.0)


def _theta_bisection(u: GridFunction, node: Tuple[int, int], a_max: float) -> float:
    if not contact_set(u, a_max).mask[node]:
        return math.inf
    lo, hi = 0.0, a_max
    if contact_set(u, 0.0).mask[node]:
        return 0.0
    for _ in range(settings.HEPS_THETA_ITERATIONS):
        mid = 0.5 * (lo + hi)
        if contact_set(u, mid).mask[node]:
            hi = mid
        else:
            lo = mid
    return hi


def theta(u: GridFunction, node: Tuple[int, int], method: str = "lp") -> float:
    """
    inf{A >= 0 : node in contact_set(u, A)} on [0, A_max]; +inf when no contact
    is resolved below A_max / 2.

    ``lp`` solves for the infimum directly; ``bisection`` halves [0, A_max] over
    full contact-set computations and is meant for small grids.
    """
    if not u.is_interior(node):
        raise InvalidInputError(f"node {node} is not an interior node")
    a_max = max_opening(u)
    if method == "lp":
        value = _theta_lp(u, node, a_max)
    elif method == "bisection":
        value = _theta_bisection(u, node, a_max)
    else:
        raise InvalidInputError(f"unknown theta method '{method}' (use 'lp' or 'bisection')")
    if value > 0.5 * a_max:
        return math.inf
    return value


def half_ball_mask(u: GridFunction) -> np.ndarray:
    """Interior nodes of B_{1/2}; fails if the box does not contain the ball."""
    if u.xmin > -0.5 or u.ymin > -0.5 or u.xmax < 0.5 or u.ymax < 0.5:
        raise DomainTooSmallError(
            f"grid box [{u.xmin!r}, {u.xmax!r}] x [{u.ymin!r}, {u.ymax!r}] does not contain B_1/2"
        )
    return (u.squared_norm() < 0.25) & u.interior_mask()


def level_measure(u: GridFunction, t: float) -> float:
    """
    h^2 * #{interior nodes of B_{1/2} with Theta > t}.

    Theta > t exactly when the node is outside the (closed, nested) contact set at
    opening t, so one envelope per threshold suffices.
    """
    if not t > 0:
        raise InvalidInputError(f"threshold must be positive, got {t!r}")
    ball = half_ball_mask(u)
    outside = ~contact_set(u, t).mask
    count = int(np.count_nonzero(ball & outside))
    return count * u.cell_area
