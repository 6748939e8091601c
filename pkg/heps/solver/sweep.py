"""
tau sweeps reproducing the bound curves; parallel evaluation keeps index order.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

import numpy as np

from heps.config import settings
from heps.errors import InvalidInputError
from heps.models import CurveRow, CurveTable, Ellipticity
from heps.solver.bounds import bound_report

logger = logging.getLogger(__name__)


def tau_grid(tau_min: float, tau_max: float, steps: int) -> List[float]:
    if not 0.0 < tau_min < tau_max <= 1.0:
        raise InvalidInputError(
            f"need 0 < tau_min < tau_max <= 1, got tau_min={tau_min!r}, tau_max={tau_max!r}"
        )
    if steps < 2:
        raise InvalidInputError(f"steps must be >= 2, got {steps!r}")
    grid = np.linspace(tau_min, tau_max, steps).tolist()
    grid[-1] = tau_max
    return grid


def _row(tau: float) -> CurveRow:
    return CurveRow.from_report(bound_report(Ellipticity.from_tau(tau)))


def curve_table(tau_min: float, tau_max: float, steps: int, threads: Optional[int] = None) -> CurveTable:
    taus = tau_grid(tau_min, tau_max, steps)
    threads = settings.HEPS_THREADS if threads is None else threads
    if threads and threads > 0:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            rows = list(executor.map(_row, taus))
    else:
        rows = [_row(tau) for tau in taus]
    logger.info("curve sweep tau=[%r, %r] steps=%s threads=%s", tau_min, tau_max, steps, threads)
    return CurveTable(rows=rows)
