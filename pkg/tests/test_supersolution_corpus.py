import numpy as np
import pytest

from heps.errors import InvalidInputError, UnknownCorpusError
from heps.lab import CORPUS_NAMES, GridFunction, corpus, discrete_hessian, supersolution_check
from heps.models import Ellipticity

ELLS = [
    Ellipticity(lower=1.0, upper=1.5),
    Ellipticity(lower=1.0, upper=3.0),
    Ellipticity(lower=1.0, upper=10.0),
]


def test_discrete_hessian_of_a_quadratic_is_exact():
    u = GridFunction.sample(lambda x, y: x * x + 3 * x * y - 0.5 * y * y, 17)
    uxx, uxy, uyy = discrete_hessian(u)

    assert uxx.shape == (15, 15)
    assert np.allclose(uxx, 2.0)
    assert np.allclose(uxy, 3.0)
    assert np.allclose(uyy, -1.0)


@pytest.mark.parametrize(
    "func, expected",
    [
        (lambda x, y: -0.5 * (x * x + y * y), 1.0),
        (lambda x, y: 0.5 * (x * x + y * y), 0.0),
        (lambda x, y: 0.5 * (x * x - y * y), 1.0),
    ],
)
def test_supersolution_fraction_of_quadratics(func, expected):
    u = GridFunction.sample(func, 33)
    assert supersolution_check(u, Ellipticity(lower=1.0, upper=3.0)) == expected


@pytest.mark.parametrize("ell", ELLS)
@pytest.mark.parametrize(
    "name", ["cone", "radial_power(1.5)", "radial_power_sub(0.5)", "perturbed_concave(8)", "affine"]
)
def test_corpus_supersolutions_pass(name, ell):
    assert supersolution_check(corpus(name, 65), ell) == 1.0


def test_double_well_is_not_a_supersolution():
    assert supersolution_check(corpus("double_well", 33), Ellipticity(lower=1.0, upper=3.0)) < 0.5


def test_kink_is_recorded_for_radial_functions():
    assert corpus("cone", 9).kink == (0.0, 0.0)
    assert corpus("radial_power(1.5)", 9).kink == (0.0, 0.0)
    assert corpus("quadratic(1)", 9).kink is None


def test_unknown_name_lists_the_valid_ones():
    with pytest.raises(UnknownCorpusError) as excinfo:
        corpus("saddle", 9)
    for name in CORPUS_NAMES:
        assert name in str(excinfo.value)


@pytest.mark.parametrize(
    "name",
    [
        "quadratic",
        "quadratic(-1)",
        "quadratic(abc)",
        "radial_power(2.5)",
        "radial_power_sub(1)",
        "perturbed_concave(1.5)",
        "perturbed_concave(-2)",
    ],
)
def test_corpus_parameters_are_validated(name):
    with pytest.raises(InvalidInputError):
        corpus(name, 9)


def test_perturbed_concave_is_seeded():
    first = corpus("perturbed_concave(7)", 17)
    again = corpus("perturbed_concave(7)", 17)
    other = corpus("perturbed_concave(8)", 17)

    assert np.array_equal(first.values, again.values)
    assert not np.array_equal(first.values, other.values)


def test_corpus_domain():
    u = corpus("affine", 5, domain=(0.0, 2.0))

    assert (u.xmin, u.ymin, u.h) == (0.0, 0.0, 0.5)
    assert u.values[0, 0] == pytest.approx(0.1)
    assert u.values[0, 4] == pytest.approx(0.7)
