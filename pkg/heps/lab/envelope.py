"""
Discrete convex and a-convex envelopes.

Two algorithms:

* ``hull`` (default): lower convex hull of the lifted nodes (i, j, v) by qhull,
  then every lower facet is rasterized back onto the nodes it covers. Exact up to
  round-off; agrees with the supporting-plane oracle.
* ``legendre``: biconjugate through two discrete Legendre-Fenchel transforms, each
  done axis by axis with the linear-time hull walk. Slope grid spans [-S, S]^2 at
  the spatial resolution, so the error is O(h) in general and zero for separable
  convex inputs.

Boundary values are pinned to the input on both paths.
"""
import logging
import warnings
from typing import Tuple

import numpy as np
from scipy.spatial import ConvexHull

from heps.errors import InvalidInputError
from heps.lab.grid import GridFunction

logger = logging.getLogger(__name__)

EDGE_EPS = 1e-9
TRIANGLE_CHUNK = 400_000


def _row_spans(ti: np.ndarray, tj: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """For each triangle and each grid row it meets, the covered x-interval."""
    jlo = np.ceil(tj.min(axis=1) - EDGE_EPS).astype(np.int64)
    jhi = np.floor(tj.max(axis=1) + EDGE_EPS).astype(np.int64)
    nrows = jhi - jlo + 1
    tid = np.repeat(np.arange(len(ti)), nrows)
    offsets = np.arange(nrows.sum()) - np.repeat(np.cumsum(nrows) - nrows, nrows)
    row = np.repeat(jlo, nrows) + offsets

    candidates = []
    for a, b in ((0, 1), (1, 2), (2, 0)):
        ia, ja = ti[tid, a], tj[tid, a]
        ib, jb = ti[tid, b], tj[tid, b]
        dj = jb - ja
        slanted = dj != 0
        inside = slanted & (row >= np.minimum(ja, jb)) & (row <= np.maximum(ja, jb))
        safe_dj = np.where(slanted, dj, 1.0)
        cross = ia + (row - ja) * (ib - ia) / safe_dj
        candidates.append(np.where(inside, cross, np.nan))
        flat = (~slanted) & (row == ja)
        candidates.append(np.where(flat, ia, np.nan))
        candidates.append(np.where(flat, ib, np.nan))
    stacked = np.stack(candidates)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        xl = np.nanmin(stacked, axis=0)
        xr = np.nanmax(stacked, axis=0)
    # degenerate spans (all-NaN) cover nothing
    xl = np.where(np.isnan(xl), 1.0, xl)
    xr = np.where(np.isnan(xr), 0.0, xr)
    return tid, row, xl, xr


def _hull_envelope(values: np.ndarray) -> np.ndarray:
    ny, nx = values.shape
    jj, ii = np.mgrid[0:ny, 0:nx]
    points = np.column_stack([ii.ravel(), jj.ravel(), values.ravel()]).astype(float)
    spread = float(values.max() - values.min())
    # a lid point above the data keeps the hull full-dimensional for affine inputs
    lid = np.array([[(nx - 1) / 2.0, (ny - 1) / 2.0, float(values.max()) + spread + 1.0]])
    hull = ConvexHull(np.vstack([points, lid]))

    equations = hull.equations
    normal_norm = np.linalg.norm(equations[:, :3], axis=1)
    lower = equations[:, 2] < -1e-12 * normal_norm
    lid_index = len(points)
    lower &= ~np.any(hull.simplices == lid_index, axis=1)
    simplices = hull.simplices[lower]
    planes = equations[lower]

    flat = np.full(nx * ny, -np.inf)
    for start in range(0, len(simplices), TRIANGLE_CHUNK):
        tri = simplices[start:start + TRIANGLE_CHUNK]
        plane = planes[start:start + TRIANGLE_CHUNK]
        ti = points[tri, 0]
        tj = points[tri, 1]
        tid, row, xl, xr = _row_spans(ti, tj)
        ilo = np.ceil(xl - EDGE_EPS).astype(np.int64)
        ihi = np.floor(xr + EDGE_EPS).astype(np.int64)
        count = np.maximum(ihi - ilo + 1, 0)
        pid = np.repeat(np.arange(len(count)), count)
        col = np.repeat(ilo, count) + (np.arange(count.sum()) - np.repeat(np.cumsum(count) - count, count))
        rows = row[pid]
        t = tid[pid]
        z = -(plane[t, 0] * col + plane[t, 1] * rows + plane[t, 3]) / plane[t, 2]
        np.maximum.at(flat, rows * nx + col, z)

    env = flat.reshape(ny, nx)
    uncovered = ~np.isfinite(env)
    if uncovered.any():
        logger.debug("hull rasterization left %s nodes uncovered; using input values", int(uncovered.sum()))
        env[uncovered] = values[uncovered]
    on_hull = np.unique(simplices)
    env.ravel()[on_hull] = values.ravel()[on_hull]
    return np.minimum(env, values)


def legendre_transform_1d(xs: np.ndarray, f: np.ndarray, slopes: np.ndarray) -> np.ndarray:
    """
    max_i (s x_i - f_i) for every s in the ascending ``slopes``.

    Lower hull of (x_i, f_i) by monotone chain, then one pass over the slopes.
    """
    hull = []
    for k in range(len(xs)):
        while len(hull) >= 2:
            a, b = hull[-2], hull[-1]
            # drop b when it lies on or above the chord a -> k
            if (f[b] - f[a]) * (xs[k] - xs[a]) >= (f[k] - f[a]) * (xs[b] - xs[a]):
                hull.pop()
            else:
                break
        hull.append(k)
    out = np.empty(len(slopes))
    p = 0
    last = len(hull) - 1
    for m, s in enumerate(slopes):
        while p < last and (f[hull[p + 1]] - f[hull[p]]) <= s * (xs[hull[p + 1]] - xs[hull[p]]):
            p += 1
        out[m] = s * xs[hull[p]] - f[hull[p]]
    return out


def _conjugate_2d(values: np.ndarray, xs: np.ndarray, ys: np.ndarray,
                  ps: np.ndarray, qs: np.ndarray) -> np.ndarray:
    """max over (x, y) of p x + q y - values[y, x], returned indexed [q, p]."""
    # inner transform along y for every column
    inner = np.empty((len(xs), len(qs)))
    for i in range(len(xs)):
        inner[i] = legendre_transform_1d(ys, values[:, i], qs)
    out = np.empty((len(qs), len(ps)))
    for k in range(len(qs)):
        out[k] = legendre_transform_1d(xs, -inner[:, k], ps)
    return out


def _legendre_envelope(values: np.ndarray, h: float) -> np.ndarray:
    ny, nx = values.shape
    xs = h * np.arange(nx)
    ys = h * np.arange(ny)
    slope_bound = max(np.abs(np.diff(values, axis=1)).max(), np.abs(np.diff(values, axis=0)).max()) / h
    slope_bound = max(slope_bound, 1e-12)
    ps = np.linspace(-slope_bound, slope_bound, nx)
    qs = np.linspace(-slope_bound, slope_bound, ny)
    conj = _conjugate_2d(values, xs, ys, ps, qs)
    env = _conjugate_2d(conj, ps, qs, xs, ys)
    return np.minimum(env, values)


def convex_envelope(v: GridFunction, method: str = "hull") -> GridFunction:
    """Largest discrete convex minorant of v, pinned to v on the box boundary."""
    if method == "hull":
        env = _hull_envelope(v.values)
    elif method == "legendre":
        env = _legendre_envelope(v.values, v.h)
    else:
        raise InvalidInputError(f"unknown envelope method '{method}' (use 'hull' or 'legendre')")
    boundary = v.boundary_mask()
    env[boundary] = v.values[boundary]
    return v.with_values(env)


def a_envelope(u: GridFunction, a: float, method: str = "hull") -> GridFunction:
    """Gamma_u^a = conv(u + (a/2)|x|^2) - (a/2)|x|^2."""
    if a < 0:
        raise InvalidInputError(f"opening must be nonnegative, got {a!r}")
    lift = 0.5 * a * u.squared_norm()
    lifted = convex_envelope(u.with_values(u.values + lift), method=method)
    return u.with_values(np.minimum(lifted.values - lift, u.values))
