from heps.solver.critical import critical_function, critical_function_at, critical_derivative, log_complement
from heps.solver.m0 import m0, m0_maximizer, m0_note, x0_constant
from heps.solver.system import (
    newton_system,
    psi,
    residuals,
    scaled_residuals,
    solve_system,
    x_c_closed_form,
)
from heps.solver.bounds import (
    bound_report,
    interp_point,
    intrinsic_ratio,
    lower_bound_interp,
    lower_bound_opt,
    theorem_product,
    x_of_tau,
)
from heps.solver.sweep import curve_table, tau_grid

__all__ = [
    "critical_function",
    "critical_function_at",
    "critical_derivative",
    "log_complement",
    "m0",
    "m0_maximizer",
    "m0_note",
    "x0_constant",
    "newton_system",
    "psi",
    "residuals",
    "scaled_residuals",
    "solve_system",
    "x_c_closed_form",
    "bound_report",
    "interp_point",
    "intrinsic_ratio",
    "lower_bound_interp",
    "lower_bound_opt",
    "theorem_product",
    "x_of_tau",
    "curve_table",
    "tau_grid",
]
