"""
Pucci extremal operators on 2x2 symmetric matrices.

The scalar functions take a SymMatrix2; the ``*_field`` variants take arrays of
entries so the lab can evaluate a whole discrete Hessian at once.
"""
from typing import Tuple

import numpy as np

from heps.models import Ellipticity, SymMatrix2

# eigenvalues below this fraction of the max-norm count as zero
ZERO_FRACTION = 1e-14


def eigenvalues_field(a11, a12, a22) -> Tuple[np.ndarray, np.ndarray]:
    """Closed-form eigenvalues (ascending) of symmetric 2x2 matrices given entrywise."""
    a11 = np.asarray(a11, dtype=float)
    a12 = np.asarray(a12, dtype=float)
    a22 = np.asarray(a22, dtype=float)
    mean = 0.5 * (a11 + a22)
    radius = np.hypot(0.5 * (a11 - a22), a12)
    return mean - radius, mean + radius


def _split(a11, a12, a22) -> Tuple[np.ndarray, np.ndarray]:
    low, high = eigenvalues_field(a11, a12, a22)
    scale = np.maximum(np.maximum(np.abs(a11), np.abs(a12)), np.abs(a22))
    cutoff = ZERO_FRACTION * scale
    low = np.where(np.abs(low) <= cutoff, 0.0, low)
    high = np.where(np.abs(high) <= cutoff, 0.0, high)
    eigs = np.stack([low, high])
    positive = np.where(eigs > 0, eigs, 0.0).sum(axis=0)
    negative = np.where(eigs < 0, eigs, 0.0).sum(axis=0)
    return positive, negative


def pucci_minus_field(a11, a12, a22, ell: Ellipticity) -> np.ndarray:
    positive, negative = _split(a11, a12, a22)
    return ell.lower * positive + ell.upper * negative


def pucci_plus_field(a11, a12, a22, ell: Ellipticity) -> np.ndarray:
    positive, negative = _split(a11, a12, a22)
    return ell.upper * positive + ell.lower * negative


def pucci_minus(m: SymMatrix2, ell: Ellipticity) -> float:
    """inf of Trace(AM) over lambda Id <= A <= Lambda Id."""
    return float(pucci_minus_field(m.a11, m.a12, m.a22, ell))


def pucci_plus(m: SymMatrix2, ell: Ellipticity) -> float:
    """sup of Trace(AM) over lambda Id <= A <= Lambda Id."""
    return float(pucci_plus_field(m.a11, m.a12, m.a22, ell))
