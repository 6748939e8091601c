"""
Tangency system for the family (1 - t)^d touching the parabola 1 - c t^n:

    1 - c x^n        = (1 - x)^d
    n c x^(n-1)      = d (1 - x)^(d - 1)

Solved by maximizing the critical function, golden-section first and then
bisection on the sign of its derivative. Both run in s = -ln(1 - x): for c close
to 1 the maximizer has 1 - x of order 1 - c, which x itself cannot resolve.
Newton on the raw system is kept as an independent cross-check.
"""
import logging
import math
from typing import Optional, Tuple

import numpy as np
from scipy.optimize import bisect

from heps.config import settings
from heps.errors import InconsistentPairError, InvalidInputError, SolverError
from heps.models import CriticalPoint
from heps.solver.critical import critical_function_at, log_complement, log_x_of, power_gap

logger = logging.getLogger(__name__)

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
S_LOW = 1e-9
S_HIGH = 100.0


def residuals(x: float, d: float, c: float, n: int = 2) -> Tuple[float, float]:
    """Absolute residuals of the raw system at (x, d)."""
    one_minus = 1.0 - x
    value = (1.0 - c * x ** n) - one_minus ** d
    slope = n * c * x ** (n - 1) - d * one_minus ** (d - 1.0)
    return value, slope


def _numerator(s: float, c: float, n: int, eta: Optional[float]) -> float:
    # s^2 times the s-derivative of the critical function
    log_x = log_x_of(s)
    gap, log_gap = power_gap(log_x, c, n, eta)
    return n * c * math.exp((n - 1) * log_x - s) * s / gap + log_gap


def scaled_residuals(s: float, d: float, c: float, n: int = 2, one_minus_c: Optional[float] = None
                     ) -> Tuple[float, float]:
    """
    Residuals at x = 1 - e^-s: the value equation as written, the slope equation
    relative to d (1 - x)^(d - 1).
    """
    log_x = log_x_of(s)
    gap = power_gap(log_x, c, n, one_minus_c)[0]
    value = gap - math.exp(-d * s)
    slope = n * c * math.exp((n - 1) * log_x - (1.0 - d) * s) / d - 1.0
    return value, slope


def _golden_bracket(c: float, n: int, eta: Optional[float], tol: float, max_iter: int
                    ) -> Tuple[float, float]:
    a, b = S_LOW, S_HIGH
    s1 = b - INV_PHI * (b - a)
    s2 = a + INV_PHI * (b - a)
    f1 = critical_function_at(s1, c, n, eta)
    f2 = critical_function_at(s2, c, n, eta)
    for _ in range(max_iter):
        if b - a <= tol:
            return a, b
        if f1 < f2:
            a, s1, f1 = s1, s2, f2
            s2 = a + INV_PHI * (b - a)
            f2 = critical_function_at(s2, c, n, eta)
        else:
            b, s2, f2 = s2, s1, f1
            s1 = b - INV_PHI * (b - a)
            f1 = critical_function_at(s1, c, n, eta)
    raise SolverError(f"golden-section did not reach width {tol!r} for c={c!r}", (a, b))


def _sign_bracket(a: float, b: float, c: float, n: int, eta: Optional[float], max_iter: int
                  ) -> Tuple[float, float]:
    """Widen [a, b] until the derivative changes sign from + to - across it."""
    width = max(b - a, 1e-12)
    lo, hi = a, b
    for _ in range(max_iter):
        lo_ok = _numerator(lo, c, n, eta) > 0
        hi_ok = _numerator(hi, c, n, eta) < 0
        if lo_ok and hi_ok:
            return lo, hi
        width *= 2.0
        if not lo_ok:
            lo = max(S_LOW, lo - width)
        if not hi_ok:
            hi = min(S_HIGH, hi + width)
    raise SolverError(f"could not bracket the derivative sign change for c={c!r}", (lo, hi))


def newton_system(c: float, x: float, d: float, n: int = 2, steps: Optional[int] = None
                  ) -> Tuple[float, float, int]:
    """
    Newton iteration on the raw 2x2 tangency system from (x, d).

    Returns (x, d, iterations). Iterates leaving (0, 1) x (0, 1] stop the loop.
    """
    steps = steps if steps is not None else settings.HEPS_SOLVER_MAX_ITER
    for k in range(steps):
        one_minus = 1.0 - x
        log_om = log_complement(x)
        pow_d = one_minus ** d
        pow_d1 = one_minus ** (d - 1.0)
        f = np.array(residuals(x, d, c, n))
        if np.max(np.abs(f)) < 1e-15:
            return x, d, k
        jac = np.array(
            [
                [-n * c * x ** (n - 1) + d * pow_d1, -pow_d * log_om],
                [n * (n - 1) * c * x ** (n - 2) + d * (d - 1.0) * one_minus ** (d - 2.0),
                 -pow_d1 * (1.0 + d * log_om)],
            ]
        )
        try:
            step = np.linalg.solve(jac, -f)
        except np.linalg.LinAlgError:
            return x, d, k
        nx, nd = x + step[0], d + step[1]
        if not (0.0 < nx < 1.0 and 0.0 < nd <= 1.0):
            return x, d, k
        if abs(step[0]) < 1e-17 and abs(step[1]) < 1e-17:
            return nx, nd, k + 1
        x, d = nx, nd
    return x, d, steps


def solve_system(c: float, n: int = 2, one_minus_c: Optional[float] = None) -> CriticalPoint:
    """
    Critical point for c in (0, 1].

    one_minus_c carries 1 - c when c has rounded to 1 but is not exactly 1; without
    it c = 1 is the boundary case.
    """
    if not 0.0 < c <= 1.0:
        raise InvalidInputError(f"c must lie in (0, 1], got {c!r}")
    if one_minus_c is not None and not 0.0 <= one_minus_c < 1.0:
        raise InvalidInputError(f"1 - c must lie in [0, 1), got {one_minus_c!r}")
    if one_minus_c == 0.0 or (one_minus_c is None and c == 1.0):
        # sup of eps(x, 1) is approached only as x -> 1
        return CriticalPoint(c=c, n=n, x_c=1.0, d_c=1.0, boundary_flag=True)

    max_iter = settings.HEPS_SOLVER_MAX_ITER
    a, b = _golden_bracket(c, n, one_minus_c, settings.HEPS_GOLDEN_TOL, max_iter)
    lo, hi = _sign_bracket(a, b, c, n, one_minus_c, max_iter)
    try:
        s = bisect(
            _numerator, lo, hi, args=(c, n, one_minus_c), xtol=settings.HEPS_POLISH_TOL,
            maxiter=max_iter,
        )
    except (RuntimeError, ValueError) as exc:
        raise SolverError(f"derivative bisection failed for c={c!r}: {exc}", (lo, hi)) from exc

    d = critical_function_at(s, c, n, one_minus_c)
    value, slope = scaled_residuals(s, d, c, n, one_minus_c)
    logger.debug("solve_system c=%r: s_c=%r d_c=%r residuals=%r", c, s, d, (value, slope))
    return CriticalPoint(
        c=c, n=n, x_c=-math.expm1(-s), s_c=s, d_c=d, residual_value=value, residual_slope=slope,
        boundary_flag=False,
    )


def x_c_closed_form(d: float, c: float) -> float:
    """x_c = (1 + sqrt(1 - (d/c)(2 - d))) / (2 - d), valid for n = 2."""
    if not (0.0 < d <= 1.0 and 0.0 < c <= 1.0):
        raise InvalidInputError(f"expected d, c in (0, 1], got d={d!r}, c={c!r}")
    disc = 1.0 - (d / c) * (2.0 - d)
    if disc < 0.0:
        if disc > -1e-12:
            disc = 0.0
        else:
            raise InconsistentPairError(
                f"negative discriminant {disc!r}: (d={d!r}, c={c!r}) is not a tangency pair"
            )
    return (1.0 + math.sqrt(disc)) / (2.0 - d)


def psi(c: float) -> float:
    """psi(c) = d_c / c, increasing with limit m0(2) as c -> 0."""
    return solve_system(c).d_c / c
