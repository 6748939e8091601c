"""
The critical function eps(x, c) = ln(1 - c x^n) / ln(1 - x) and its x-derivative.

When c is close to 1 the maximizer sits within a few ulps of x = 1, so 1 - c x^n
is assembled from (1 - c) and 1 - x^n instead of by subtraction, and the
functions taking s = -ln(1 - x) reach points that x itself cannot resolve.
"""
import math
from typing import Optional, Tuple

from heps.errors import InvalidInputError


def log_complement(z: float) -> float:
    """ln(1 - z) without cancellation for z close to 0 or 1."""
    return math.log1p(-z)


def log_x_of(s: float) -> float:
    """ln x at x = 1 - e^-s."""
    if s > math.log(2.0):
        return math.log1p(-math.exp(-s))
    return math.log(-math.expm1(-s))


def power_gap(log_x: float, c: float, n: int = 2, one_minus_c: Optional[float] = None
              ) -> Tuple[float, float]:
    """
    Return (1 - c x^n, ln(1 - c x^n)) given ln x.

    Accurate at both ends: c x^n tiny and c x^n within rounding of 1. Pass
    one_minus_c when c itself has rounded to 1.
    """
    cxn = c * math.exp(n * log_x)
    if cxn <= 0.5:
        return 1.0 - cxn, math.log1p(-cxn)
    eta = one_minus_c if one_minus_c is not None else 1.0 - c
    gap = eta + c * -math.expm1(n * log_x)
    return gap, math.log(gap)


def _check(x: float, c: float, n: int) -> None:
    if not 0.0 < x < 1.0:
        raise InvalidInputError(f"x must lie in (0, 1), got {x!r}")
    if not 0.0 < c <= 1.0:
        raise InvalidInputError(f"c must lie in (0, 1], got {c!r}")
    if n < 2:
        raise InvalidInputError(f"n must be >= 2, got {n!r}")


def critical_function(x: float, c: float, n: int = 2) -> float:
    _check(x, c, n)
    return power_gap(math.log(x), c, n)[1] / log_complement(x)


def critical_function_at(s: float, c: float, n: int = 2, one_minus_c: Optional[float] = None
                         ) -> float:
    """The critical function at x = 1 - e^-s, s > 0."""
    if not 0.0 < s < math.inf:
        raise InvalidInputError(f"s must be positive and finite, got {s!r}")
    return -power_gap(log_x_of(s), c, n, one_minus_c)[1] / s


def critical_derivative(x: float, c: float, n: int = 2) -> float:
    """Analytic d/dx of the critical function."""
    _check(x, c, n)
    return derivative_numerator(x, c, n) / log_complement(x) ** 2


def derivative_numerator(x: float, c: float, n: int = 2) -> float:
    """
    A'B - AB' with A = ln(1 - c x^n), B = ln(1 - x).

    Same sign as the derivative.
    """
    gap, a = power_gap(math.log(x), c, n)
    b = log_complement(x)
    da = -n * c * x ** (n - 1) / gap
    db = -1.0 / (1.0 - x)
    return da * b - a * db
