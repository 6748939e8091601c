"""
Two-sided estimate for the sharp Hessian integrability exponent as a function of
the ellipticity ratio tau = lambda / Lambda.
"""
import logging
import math
from typing import Optional

from heps.config import settings
from heps.core import c_complement, c_of, upper_bound_ass
from heps.errors import SingularInputError
from heps.models import BoundReport, CriticalPoint, Ellipticity
from heps.solver.critical import critical_function_at
from heps.solver.m0 import x0_constant
from heps.solver.system import solve_system, x_c_closed_form

logger = logging.getLogger(__name__)


def lower_bound_opt(ell: Ellipticity) -> float:
    """sup over (0, 1) of ln(1 - c x^2) / ln(1 - x) with c = c(lambda, Lambda)."""
    return _critical_point(ell).d_c


def _critical_point(ell: Ellipticity) -> CriticalPoint:
    return solve_system(c_of(ell), 2, c_complement(ell))


def theorem_product(ell: Ellipticity) -> float:
    """(1/tau + 1) * lower_bound_opt; increasing in tau with limit 4 m0(2) > 1.629."""
    return (1.0 / ell.tau + 1.0) * lower_bound_opt(ell)


def x_of_tau(ell: Ellipticity) -> float:
    """Maximizer recovered from eps(tau) and c(tau) through the closed form."""
    c = c_of(ell)
    return x_c_closed_form(_critical_point(ell).d_c, c)


def intrinsic_ratio(ell: Ellipticity) -> float:
    """Best dyadic ratio 1 + delta_star, delta_star = x_c / (1 - x_c)."""
    point = _critical_point(ell)
    if point.boundary_flag:
        raise SingularInputError("the intrinsic ratio is unbounded at tau = 1")
    return 1.0 + point.delta_star


def interp_point(ell: Ellipticity, exponent: Optional[float] = None) -> float:
    """t(tau) = x0 + (1 - x0) c(tau)^exponent."""
    if ell.tau >= 1.0:
        raise SingularInputError("t(tau) = 1 at tau = 1; ln(1 - t) diverges")
    exponent = exponent if exponent is not None else settings.HEPS_INTERP_EXPONENT
    x0 = x0_constant()
    return x0 + (1.0 - x0) * c_of(ell) ** exponent


def lower_bound_interp(ell: Ellipticity, exponent: Optional[float] = None) -> float:
    if ell.tau >= 1.0:
        raise SingularInputError("t(tau) = 1 at tau = 1; ln(1 - t) diverges")
    exponent = exponent if exponent is not None else settings.HEPS_INTERP_EXPONENT
    c, eta = c_of(ell), c_complement(ell)
    log_c = math.log(c) if c <= 0.5 else math.log1p(-eta)
    # 1 - t = (1 - x0)(1 - c^exponent), kept apart from t as c -> 1
    one_minus_t = (1.0 - x0_constant()) * -math.expm1(exponent * log_c)
    return critical_function_at(-math.log(one_minus_t), c, 2, eta)


def bound_report(ell: Ellipticity) -> BoundReport:
    c = c_of(ell)
    upper = upper_bound_ass(ell)
    if ell.tau >= 1.0:
        lower = interp = 1.0
    else:
        lower = lower_bound_opt(ell)
        interp = lower_bound_interp(ell)
    report = BoundReport(
        tau=ell.tau,
        c=c,
        eps_lower_opt=lower,
        eps_lower_interp=interp,
        eps_upper=upper,
        ratio=lower / upper,
    )
    logger.debug("bound_report tau=%r: %s", ell.tau, report.model_dump())
    return report
