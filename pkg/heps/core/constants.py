"""
Closed-form constants of the W^{2,eps} problem in terms of the ellipticity pair.
"""
from heps.errors import InvalidInputError
from heps.models import Ellipticity


def c_of(ell: Ellipticity) -> float:
    """
    Measure-estimate constant [1 + (1/4)(Lambda/lambda)(1 - lambda/Lambda)^2]^-1.

    Evaluated in the equivalent form 4 tau / (1 + tau)^2, which is exactly 1 at tau = 1.
    """
    tau = ell.tau
    return 4.0 * tau / ((1.0 + tau) * (1.0 + tau))


def upper_bound_ass(ell: Ellipticity) -> float:
    """Universal upper bound 2 / (Lambda/lambda + 1)."""
    tau = ell.tau
    return 2.0 * tau / (1.0 + tau)


def upper_bound_ndim(n: int, ell: Ellipticity) -> float:
    """Sharpened n-dimensional upper bound n / ((n - 1) Lambda/lambda + 1)."""
    if int(n) != n or n < 2:
        raise InvalidInputError(f"dimension must be an integer >= 2, got {n!r}")
    tau = ell.tau
    return n * tau / ((n - 1) + tau)


def c_complement(ell: Ellipticity) -> float:
    """1 - c(tau) = ((Lambda - lambda) / (Lambda + lambda))^2, resolved where c rounds to 1."""
    ratio = (ell.upper - ell.lower) / (ell.upper + ell.lower)
    return ratio * ratio
