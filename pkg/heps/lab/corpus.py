"""
Analytic test functions with known curvature behavior, sampled on square grids.

Names carry their parameter in parentheses, e.g. ``quadratic(1)``,
``radial_power(1.5)`` or ``perturbed_concave(7)``.
"""
import logging
import math
import re
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from heps.errors import InvalidInputError, UnknownCorpusError
from heps.lab.grid import GridFunction

logger = logging.getLogger(__name__)

CORPUS_NAMES = (
    "quadratic(a)",
    "affine",
    "cone",
    "radial_power(beta)",
    "radial_power_sub(sigma)",
    "double_well",
    "perturbed_concave(seed)",
)

NAME_RE = re.compile(r"^(?P<base>[a-z_]+)(?:\((?P<arg>[^()]*)\))?$")

WELL_CENTER = (0.3, 0.0)
PERTURBATION_MODES = 4
# sum over modes of amplitude * |k|^2 stays below this, so the Hessian is <= -0.6 Id
PERTURBATION_CURVATURE = 0.4


def _float_arg(base: str, arg: Optional[str]) -> float:
    if arg is None:
        raise InvalidInputError(f"corpus function '{base}' needs a parameter, e.g. {base}(1.5)")
    try:
        value = float(arg)
    except ValueError:
        raise InvalidInputError(f"corpus parameter for '{base}' is not a number: {arg!r}")
    if not math.isfinite(value):
        raise InvalidInputError(f"corpus parameter for '{base}' must be finite, got {arg!r}")
    return value


def _quadratic(arg: Optional[str]):
    a = _float_arg("quadratic", arg)
    if a < 0:
        raise InvalidInputError(f"quadratic opening must be nonnegative, got {a!r}")
    return (lambda x, y: -0.5 * a * (x * x + y * y)), None


def _affine(arg: Optional[str]):
    return (lambda x, y: 0.3 * x - 0.2 * y + 0.1), None


def _cone(arg: Optional[str]):
    return (lambda x, y: -np.hypot(x, y)), (0.0, 0.0)


def _radial_power(arg: Optional[str]):
    beta = _float_arg("radial_power", arg)
    if not 1.0 < beta < 2.0:
        raise InvalidInputError(f"radial_power exponent must lie in (1, 2), got {beta!r}")
    return (lambda x, y: -np.hypot(x, y) ** beta), (0.0, 0.0)


def _radial_power_sub(arg: Optional[str]):
    sigma = _float_arg("radial_power_sub", arg)
    if not 0.0 < sigma < 1.0:
        raise InvalidInputError(f"radial_power_sub exponent must lie in (0, 1), got {sigma!r}")
    return (lambda x, y: -np.hypot(x, y) ** sigma), (0.0, 0.0)


def _double_well(arg: Optional[str]):
    px, py = WELL_CENTER

    def well(x, y):
        left = (x - px) ** 2 + (y - py) ** 2
        right = (x + px) ** 2 + (y + py) ** 2
        return np.minimum(left, right)

    return well, None


def _perturbed_concave(arg: Optional[str]):
    raw = _float_arg("perturbed_concave", arg)
    if raw != int(raw) or raw < 0:
        raise InvalidInputError(f"perturbed_concave seed must be a nonnegative integer, got {arg!r}")
    rng = np.random.default_rng(int(raw))
    wave = rng.integers(1, 4, size=(PERTURBATION_MODES, 2)) * math.pi
    phase = rng.uniform(0.0, 2.0 * math.pi, size=PERTURBATION_MODES)
    weight = rng.uniform(0.5, 1.0, size=PERTURBATION_MODES)
    k2 = (wave ** 2).sum(axis=1)
    amplitude = PERTURBATION_CURVATURE * weight / (weight.sum() * k2)

    def perturbed(x, y):
        out = -0.5 * (x * x + y * y)
        for (kx, ky), phi, amp in zip(wave, phase, amplitude):
            out = out + amp * np.sin(kx * x + ky * y + phi)
        return out

    return perturbed, None


BUILDERS: Dict[str, Callable] = {
    "quadratic": _quadratic,
    "affine": _affine,
    "cone": _cone,
    "radial_power": _radial_power,
    "radial_power_sub": _radial_power_sub,
    "double_well": _double_well,
    "perturbed_concave": _perturbed_concave,
}


def corpus(name: str, n: int, domain: Tuple[float, float] = (-1.0, 1.0)) -> GridFunction:
    """Sample the named corpus function on an n x n grid over domain^2."""
    match = NAME_RE.match(name.strip())
    if match is None or match["base"] not in BUILDERS:
        raise UnknownCorpusError(name, CORPUS_NAMES)
    func, kink = BUILDERS[match["base"]](match["arg"])
    lo, hi = domain
    grid = GridFunction.sample(func, n, lo, hi, kink=kink)
    logger.info("corpus %s sampled as %r", name, grid)
    return grid
