import math

import numpy as np
import pytest

from heps.errors import DomainTooSmallError, InvalidInputError
from heps.lab import GridFunction, contact_set, corpus, level_measure, max_opening, theta
from heps.models import ContactSet


@pytest.fixture(scope="module")
def cone_129():
    return corpus("cone", 129)


@pytest.fixture(scope="module")
def quadratic_65():
    return corpus("quadratic(1)", 65)


def test_matching_opening_touches_everywhere(quadratic_65):
    assert contact_set(quadratic_65, 1.0).mask.all()


def test_smaller_opening_misses_the_interior(quadratic_65):
    mask = contact_set(quadratic_65, 0.5).mask
    assert not mask[quadratic_65.interior_mask()].any()


@pytest.mark.parametrize("name", ["cone", "radial_power(1.5)", "double_well", "perturbed_concave(1)"])
def test_contact_sets_are_nested(name):
    u = corpus(name, 33)
    openings = [0.0, 0.5, 1.0, 2.0, 4.0, 8.0]
    sets = [contact_set(u, a) for a in openings]
    for small, large in zip(sets, sets[1:]):
        assert small <= large


def test_contact_set_model_checks_its_mask():
    with pytest.raises(ValueError):
        ContactSet(opening=1.0, mask=np.zeros((3, 3)), tol=0.0)


def test_contact_set_rejects_negative_opening(cone_129):
    with pytest.raises(InvalidInputError):
        contact_set(cone_129, -0.5)


@pytest.mark.parametrize("point", [(0.0, 0.0), (0.25, 0.25), (-0.5, 0.75)])
def test_theta_of_quadratic_is_its_opening(quadratic_65, point):
    node = quadratic_65.node_at(*point)
    assert theta(quadratic_65, node) == pytest.approx(1.0, abs=1e-3)


def test_theta_of_affine_is_zero():
    u = corpus("affine", 33)
    assert theta(u, u.node_at(0.25, -0.5)) <= 1e-8


@pytest.mark.parametrize("r", [0.2, 0.3, 0.4])
def test_theta_of_cone_is_inverse_radius(cone_129, r):
    node = cone_129.node_at(r, 0.0)
    x, _ = cone_129.position(node)
    assert theta(cone_129, node) == pytest.approx(1.0 / abs(x), rel=0.05)


@pytest.mark.slow
@pytest.mark.parametrize("r", [0.1, 0.2, 0.3, 0.4])
def test_theta_of_cone_at_high_resolution(r):
    u = corpus("cone", 513)
    node = u.node_at(r * math.cos(0.6), r * math.sin(0.6))
    x, y = u.position(node)
    assert theta(u, node) == pytest.approx(1.0 / math.hypot(x, y), rel=0.05)


def test_theta_bisection_agrees_with_the_program():
    u = corpus("cone", 17)
    node = u.node_at(0.375, 0.25)
    exact = theta(u, node)
    assert theta(u, node, method="bisection") == pytest.approx(exact, rel=1e-6, abs=1e-6)


def test_theta_requires_an_interior_node(cone_129):
    with pytest.raises(InvalidInputError):
        theta(cone_129, (0, 5))
    with pytest.raises(InvalidInputError):
        theta(cone_129, (5, 5), method="newton")


def test_theta_of_a_spike_stays_below_the_resolvable_opening():
    values = np.zeros((9, 9))
    values[4, 4] = 1.0
    u = GridFunction(values, -1.0, -1.0, 0.25)
    value = theta(u, (4, 4))
    assert 20.0 < value <= 0.5 * max_opening(u)


@pytest.mark.parametrize("a", [0.5, 1.0, 2.0, 4.0])
def test_theta_and_contact_are_consistent(a):
    u = corpus("cone", 33)
    mask = contact_set(u, a).mask
    wider = contact_set(u, a * (1 + 1e-3)).mask
    for node in [(16, 20), (10, 10), (5, 27), (16, 17), (22, 9)]:
        value = theta(u, node)
        if mask[node]:
            assert value <= a + 1e-6
        if value <= a:
            assert wider[node]


def test_max_opening_scales_with_range():
    u = corpus("quadratic(1)", 17)
    assert max_opening(u) == pytest.approx(4.0 * 1.0 / u.h ** 2)


def test_level_measure_of_quadratic_vanishes_above_its_opening(quadratic_65):
    assert level_measure(quadratic_65, 2.0) == 0.0


def test_level_measure_of_cone():
    u = corpus("cone", 257)
    assert level_measure(u, 4.0) == pytest.approx(math.pi / 16, rel=0.1)
    assert level_measure(u, 1.0) == pytest.approx(math.pi / 4, rel=0.1)


def test_level_measure_needs_the_half_ball():
    u = corpus("cone", 33, domain=(0.0, 1.0))
    with pytest.raises(DomainTooSmallError):
        level_measure(u, 1.0)
    with pytest.raises(InvalidInputError):
        level_measure(corpus("cone", 33), 0.0)
