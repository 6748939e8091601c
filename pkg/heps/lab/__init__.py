from heps.lab.grid import GridFunction
from heps.lab.grid_io import dumps_grid, loads_grid, read_grid, write_grid
from heps.lab.envelope import a_envelope, convex_envelope, legendre_transform_1d
from heps.lab.contact import contact_set, contact_tolerance, half_ball_mask, level_measure, max_opening, theta
from heps.lab.decay import decay_fit, default_ratio
from heps.lab.infconv import inf_convolution, lower_envelope_row
from heps.lab.supersolution import discrete_hessian, supersolution_check
from heps.lab.lemma import bound_factor, lemma_check, slide_paraboloid, tangent_paraboloids, touching_points
from heps.lab.corpus import CORPUS_NAMES, corpus
from heps.lab.oracle import supporting_plane_envelope

__all__ = [
    "GridFunction",
    "dumps_grid",
    "loads_grid",
    "read_grid",
    "write_grid",
    "a_envelope",
    "convex_envelope",
    "legendre_transform_1d",
    "contact_set",
    "contact_tolerance",
    "half_ball_mask",
    "level_measure",
    "max_opening",
    "theta",
    "decay_fit",
    "default_ratio",
    "inf_convolution",
    "lower_envelope_row",
    "discrete_hessian",
    "supersolution_check",
    "bound_factor",
    "lemma_check",
    "slide_paraboloid",
    "tangent_paraboloids",
    "touching_points",
    "CORPUS_NAMES",
    "corpus",
    "supporting_plane_envelope",
]
