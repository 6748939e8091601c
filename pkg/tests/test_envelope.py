import numpy as np
import pytest
from scipy.ndimage import binary_dilation

from heps.errors import InvalidInputError
from heps.lab import (
    GridFunction,
    a_envelope,
    contact_set,
    convex_envelope,
    corpus,
    legendre_transform_1d,
    supporting_plane_envelope,
)

CORPUS_33 = [
    "quadratic(1)",
    "affine",
    "cone",
    "radial_power(1.5)",
    "radial_power_sub(0.5)",
    "double_well",
    "perturbed_concave(3)",
]


def test_convex_input_is_a_fixed_point():
    v = GridFunction.sample(lambda x, y: 0.5 * (x * x + y * y), 65)
    env = convex_envelope(v)
    assert np.max(np.abs(env.values - v.values)) <= 1e-10


def test_double_well_bridge_is_flat_along_the_axis():
    v = corpus("double_well", 33)
    env = convex_envelope(v)
    j, _ = v.node_at(0.0, 0.0)
    i_left = v.node_at(-0.25, 0.0)[1]
    i_right = v.node_at(0.25, 0.0)[1]

    bridge = env.values[j, i_left:i_right + 1]
    assert np.ptp(bridge) <= 1e-10
    assert env.values[j, v.node_at(0.0, 0.0)[1]] < v.values[j, v.node_at(0.0, 0.0)[1]] - 0.05


@pytest.mark.parametrize("name", CORPUS_33)
def test_hull_envelope_matches_supporting_plane_oracle(name):
    v = corpus(name, 33)
    env = convex_envelope(v)
    oracle = supporting_plane_envelope(v)

    assert np.max(np.abs(env.values - oracle.values)) <= 1e-6


@pytest.mark.parametrize("name", CORPUS_33)
def test_envelope_is_a_minorant_and_idempotent(name):
    v = corpus(name, 33)
    env = convex_envelope(v)

    assert np.all(env.values <= v.values + 1e-12)
    again = convex_envelope(env)
    assert np.max(np.abs(again.values - env.values)) <= 1e-10


def test_envelope_pins_the_boundary():
    v = corpus("cone", 33)
    env = convex_envelope(v)
    boundary = v.boundary_mask()
    assert np.array_equal(env.values[boundary], v.values[boundary])


def test_concave_input_lies_strictly_below_in_the_interior():
    v = corpus("quadratic(1)", 33)
    env = convex_envelope(v)
    interior = v.interior_mask()
    assert np.all(env.values[interior] < v.values[interior])


def test_legendre_envelope_is_close_to_the_hull():
    v = corpus("double_well", 33)
    hull = convex_envelope(v, method="hull")
    legendre = convex_envelope(v, method="legendre")

    assert np.all(legendre.values <= v.values + 1e-12)
    assert np.max(np.abs(legendre.values - hull.values)) <= 4 * v.h


def test_unknown_envelope_method():
    with pytest.raises(InvalidInputError):
        convex_envelope(corpus("cone", 9), method="simplex")


def test_legendre_transform_of_a_parabola():
    xs = np.linspace(-1.0, 1.0, 201)
    slopes = np.linspace(-0.8, 0.8, 17)
    conj = legendre_transform_1d(xs, 0.5 * xs * xs, slopes)
    assert np.max(np.abs(conj - 0.5 * slopes * slopes)) <= (xs[1] - xs[0]) ** 2


def test_a_envelope_of_matching_paraboloid_is_identity():
    u = corpus("quadratic(2)", 33)
    gamma = a_envelope(u, 2.0)
    assert np.max(np.abs(gamma.values - u.values)) <= 1e-10


def test_a_envelope_with_insufficient_opening_stays_below():
    u = corpus("quadratic(2)", 33)
    gamma = a_envelope(u, 1.0)
    interior = u.interior_mask()
    assert np.all(gamma.values[interior] < u.values[interior])
    assert np.all(gamma.values <= u.values + 1e-12)


def test_a_envelope_rejects_negative_opening():
    with pytest.raises(InvalidInputError):
        a_envelope(corpus("cone", 9), -1.0)


def test_cone_contact_starts_near_radius_one_over_a():
    u = corpus("cone", 129)
    mask = contact_set(u, 4.0).mask
    r = np.sqrt(u.squared_norm())

    assert not mask[r < 0.25 - 2 * u.h].any()
    assert mask[(r > 0.25 + 2 * u.h) & u.interior_mask()].all()


@pytest.mark.parametrize("beta", [0.5, 2.0])
@pytest.mark.parametrize("gamma", [-0.5, 1.0])
@pytest.mark.parametrize("opening", [1.0, 3.0])
def test_scaling_identity_for_contact_sets(beta, gamma, opening):
    v = corpus("cone", 65)
    w = v.with_values(beta * v.values + 0.5 * gamma * v.squared_norm())
    left = contact_set(w, opening).mask
    right = contact_set(v, (opening + gamma) / beta).mask

    band = np.ones((5, 5), dtype=bool)
    near_edge = binary_dilation(right, structure=band) & binary_dilation(~right, structure=band)
    near_edge |= v.boundary_mask(2)
    assert not np.any((left ^ right) & ~near_edge)
