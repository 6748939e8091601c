from heps.core.constants import c_complement, c_of, upper_bound_ass, upper_bound_ndim
from heps.core.pucci import pucci_minus, pucci_plus, pucci_minus_field, eigenvalues_field

__all__ = [
    "c_complement",
    "c_of",
    "upper_bound_ass",
    "upper_bound_ndim",
    "pucci_minus",
    "pucci_plus",
    "pucci_minus_field",
    "eigenvalues_field",
]
