"""
Brute-force convex envelope: one supporting-plane LP per node.

Quadratic in the node count, so only meant for small grids (33 x 33 is a few
seconds) as a cross-check of the hull and Legendre paths.
"""
import logging

import numpy as np
from scipy.optimize import linprog

from heps.errors import InvalidInputError
from heps.lab.contact import HIGHS_OPTIONS
from heps.lab.grid import GridFunction

logger = logging.getLogger(__name__)

MAX_ORACLE_NODES = 10_000


def supporting_plane_value(points: np.ndarray, values: np.ndarray, target) -> float:
    """max over planes p.x + r lying below values at points of p.target + r."""
    a_ub = np.column_stack([points, np.ones(len(points))])
    result = linprog(
        c=[-target[0], -target[1], -1.0],
        A_ub=a_ub,
        b_ub=values,
        bounds=[(None, None)] * 3,
        method="highs",
        options=HIGHS_OPTIONS,
    )
    if result.status != 0:
        raise InvalidInputError(f"supporting-plane program failed at {target}: {result.message}")
    return -float(result.fun)


def supporting_plane_envelope(v: GridFunction) -> GridFunction:
    """Convex envelope node by node, boundary pinned to v like convex_envelope."""
    if v.nx * v.ny > MAX_ORACLE_NODES:
        raise InvalidInputError(
            f"oracle limited to {MAX_ORACLE_NODES} nodes, grid has {v.nx * v.ny}"
        )
    x, y = v.coordinates()
    points = np.column_stack([x.ravel(), y.ravel()])
    flat = v.values.ravel()
    env = np.array([min(supporting_plane_value(points, flat, p), f) for p, f in zip(points, flat)])
    env = env.reshape(v.values.shape)
    boundary = v.boundary_mask()
    env[boundary] = v.values[boundary]
    return v.with_values(env)
