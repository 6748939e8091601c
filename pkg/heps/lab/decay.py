"""
Power-law decay of |{Theta > t} cap B_1/2| along a geometric threshold sequence.
"""
import logging
from typing import Optional

import numpy as np
from scipy.stats import linregress

from heps.config import settings
from heps.errors import InvalidInputError, TooFewPointsError
from heps.lab.contact import level_measure
from heps.lab.grid import GridFunction
from heps.models import DecayFit, Ellipticity
from heps.solver import intrinsic_ratio

logger = logging.getLogger(__name__)


def default_ratio(ell: Optional[Ellipticity] = None) -> float:
    """Intrinsic dyadic ratio 1 + delta_star at the configured ellipticity."""
    if ell is None:
        ell = Ellipticity(lower=settings.HEPS_ELLIPTICITY_LOWER, upper=settings.HEPS_ELLIPTICITY_UPPER)
    return intrinsic_ratio(ell)


def decay_fit(u: GridFunction, t0: float, ratio: Optional[float] = None, count: int = 5,
              ell: Optional[Ellipticity] = None) -> DecayFit:
    """
    Least-squares slope of log(measure) against log(t) for t_k = t0 ratio^k.

    Only thresholds whose level set holds at least HEPS_DECAY_MIN_CELLS cells
    enter the fit; the slope estimates -eps.
    """
    if ratio is None:
        ratio = default_ratio(ell)
    if not t0 > 0:
        raise InvalidInputError(f"t0 must be positive, got {t0!r}")
    if not ratio > 1:
        raise InvalidInputError(f"ratio must exceed 1, got {ratio!r}")
    if count < 4:
        raise InvalidInputError(f"count must be >= 4, got {count!r}")

    thresholds = [t0 * ratio ** k for k in range(count)]
    measures = [level_measure(u, t) for t in thresholds]
    floor = settings.HEPS_DECAY_MIN_CELLS * u.cell_area
    usable = [(t, m) for t, m in zip(thresholds, measures) if m >= floor]
    logger.info(
        "decay thresholds=%s measures=%s usable=%s floor=%r", thresholds, measures, len(usable), floor
    )
    if len(usable) < 2:
        raise TooFewPointsError(
            f"only {len(usable)} of {count} thresholds have a level set above the "
            f"{settings.HEPS_DECAY_MIN_CELLS}-cell floor"
        )

    log_t = np.log([t for t, _ in usable])
    log_m = np.log([m for _, m in usable])
    if len(usable) == 2:
        slope = float((log_m[1] - log_m[0]) / (log_t[1] - log_t[0]))
        intercept = float(log_m[0] - slope * log_t[0])
        r_squared = 1.0
    else:
        fit = linregress(log_t, log_m)
        slope, intercept = float(fit.slope), float(fit.intercept)
        r_squared = min(1.0, float(fit.rvalue) ** 2)
    return DecayFit(
        thresholds=thresholds,
        measures=measures,
        slope=slope,
        intercept=intercept,
        r_squared=r_squared,
        used=len(usable),
    )
