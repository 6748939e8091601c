"""
Inf-convolution u_m(x) = min_y u(y) + m |y - x|^2 over the grid nodes.

The quadratic penalty splits over the axes, so the 2D transform is two passes of
the 1D lower envelope of parabolas.
"""
from math import inf

import numpy as np

from heps.errors import InvalidInputError
from heps.lab.grid import GridFunction


def _intersection(row: np.ndarray, weight: float, q: int, p: int) -> float:
    return ((row[q] + weight * q * q) - (row[p] + weight * p * p)) / (2.0 * weight * (q - p))


def lower_envelope_row(row: np.ndarray, weight: float) -> np.ndarray:
    """min_j row[j] + weight (i - j)^2 for every i, in linear time."""
    n = row.shape[0]
    out = np.empty(n)
    k = 0
    v = np.zeros(n, dtype=np.int64)
    z = np.empty(n + 1)
    v[0] = 0
    z[0] = -inf
    z[1] = inf
    for q in range(1, n):
        s = _intersection(row, weight, q, v[k])
        while s <= z[k]:
            k -= 1
            s = _intersection(row, weight, q, v[k])
        k += 1
        v[k] = q
        z[k] = s
        z[k + 1] = inf
    k = 0
    for i in range(n):
        while z[k + 1] < i:
            k += 1
        d = i - v[k]
        out[i] = row[v[k]] + weight * d * d
    return out


def inf_convolution(u: GridFunction, m: float) -> GridFunction:
    if not m > 0:
        raise InvalidInputError(f"m must be positive, got {m!r}")
    weight = m * u.h * u.h
    values = np.array(u.values)
    for i in range(u.nx):
        values[:, i] = lower_envelope_row(values[:, i], weight)
    for j in range(u.ny):
        values[j, :] = lower_envelope_row(values[j, :], weight)
    return u.with_values(np.minimum(values, u.values))
