import math

import pytest

from heps.errors import InvalidInputError, TooFewPointsError
from heps.lab import corpus, decay_fit, default_ratio
from heps.models import DecayFit, Ellipticity


@pytest.fixture(scope="module")
def cone_257():
    return corpus("cone", 257)


def test_default_ratio_is_the_intrinsic_one():
    ratio = default_ratio(Ellipticity(lower=1.0, upper=3.0))
    # x_c ~ 0.8551 at c = 0.75
    assert ratio == pytest.approx(1.0 / (1.0 - 0.8551), rel=2e-3)


def test_cone_decay_on_a_coarse_grid(cone_257):
    fit = decay_fit(cone_257, 2.0, ratio=2.0, count=4)

    assert fit.used >= 3
    assert fit.epsilon_hat == pytest.approx(2.0, abs=0.2)
    assert fit.measures[0] == pytest.approx(math.pi / 4, rel=0.05)


def test_cone_decay_with_intrinsic_ratio(cone_257):
    fit = decay_fit(cone_257, 2.0, count=4, ell=Ellipticity(lower=1.0, upper=3.0))
    assert fit.epsilon_hat == pytest.approx(2.0, abs=0.2)


def test_quadratic_has_no_level_sets_to_fit():
    with pytest.raises(TooFewPointsError):
        decay_fit(corpus("quadratic(1)", 65), 2.0, ratio=2.0, count=4)


@pytest.mark.parametrize(
    "kwargs",
    [{"t0": 0.0, "ratio": 2.0}, {"t0": 1.0, "ratio": 1.0}, {"t0": 1.0, "ratio": 2.0, "count": 3}],
)
def test_decay_fit_validates_arguments(cone_257, kwargs):
    with pytest.raises(InvalidInputError):
        decay_fit(cone_257, **kwargs)


def test_decay_fit_model_rejects_increasing_measures():
    with pytest.raises(ValueError):
        DecayFit(thresholds=[1.0, 2.0], measures=[1.0, 2.0], slope=1.0, intercept=0.0,
                 r_squared=1.0, used=2)


@pytest.mark.slow
def test_cone_decay_exponent_at_high_resolution():
    u = corpus("cone", 1024)
    fit = decay_fit(u, 2.0, ratio=2.0, count=5)
    assert fit.epsilon_hat == pytest.approx(2.0, abs=0.15)

    intrinsic = decay_fit(u, 2.0, count=4, ell=Ellipticity(lower=1.0, upper=3.0))
    assert intrinsic.epsilon_hat == pytest.approx(2.0, abs=0.15)


@pytest.mark.slow
def test_radial_power_decay_exponent_at_high_resolution():
    u = corpus("radial_power(1.5)", 1024)
    fit = decay_fit(u, 3.0, ratio=2.0, count=5)
    assert fit.epsilon_hat == pytest.approx(4.0, abs=0.4)


@pytest.mark.slow
def test_cone_decay_exponent_is_stable_under_refinement():
    coarse = decay_fit(corpus("cone", 512), 2.0, ratio=2.0, count=5)
    fine = decay_fit(corpus("cone", 1024), 2.0, ratio=2.0, count=5)
    assert abs(coarse.epsilon_hat - fine.epsilon_hat) < 0.1
