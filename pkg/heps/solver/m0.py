"""
m0(n) = sup over (0, 1) of x^n / (-ln(1 - x)), the small-c limit of d_c / c.
"""
import logging
import math
from typing import Tuple

from scipy.optimize import bisect

from heps.config import settings
from heps.errors import InvalidInputError, SolverError
from heps.solver.critical import log_complement

logger = logging.getLogger(__name__)

STATED_M0_2 = 0.4073


def _stationarity(x: float, n: int) -> float:
    # n (1 - x)(-ln(1 - x)) - x: positive near 0, negative near 1
    return -n * (1.0 - x) * log_complement(x) - x


def m0_maximizer(n: int = 2) -> Tuple[float, float]:
    """Return (x_star, m0(n)); x_star solves n(1-x)(-ln(1-x)) = x."""
    if int(n) != n or n < 2:
        raise InvalidInputError(f"n must be an integer >= 2, got {n!r}")
    lo, hi = 1e-9, 1.0 - 1e-15
    try:
        x_star = bisect(
            _stationarity, lo, hi, args=(n,), xtol=settings.HEPS_POLISH_TOL,
            maxiter=settings.HEPS_SOLVER_MAX_ITER,
        )
    except RuntimeError as exc:
        raise SolverError(f"m0({n}) maximizer search failed: {exc}", (lo, hi)) from exc
    value = x_star ** n / -log_complement(x_star)
    logger.debug("m0(%s): maximizer=%r value=%r", n, x_star, value)
    return x_star, value


def m0(n: int = 2) -> float:
    return m0_maximizer(n)[1]


def x0_constant() -> float:
    """x0 = (1 + sqrt(1 - 2 m0(2))) / 2"""
    return 0.5 * (1.0 + math.sqrt(1.0 - 2.0 * m0(2)))


def m0_note() -> dict:
    """
    Compare m0(2) with the stated lower estimate 0.4073.

    The computed value rounds to 0.4073 but does not exceed it; this is reported,
    never asserted.
    """
    value = m0(2)
    exceeds = value > STATED_M0_2
    if not exceeds:
        logger.warning(
            "m0(2)=%.9f does not strictly exceed the stated 0.4073 (rounds to %.4f); "
            "4*m0(2)=%.6f still exceeds 1.629",
            value,
            value,
            4 * value,
        )
    return {
        "m0": value,
        "stated": STATED_M0_2,
        "exceeds_stated": exceeds,
        "rounds_to_stated": round(value, 4) == STATED_M0_2,
        "theorem_constant": 4.0 * value,
        "asymptotic_ratio": 2.0 * value,
    }
