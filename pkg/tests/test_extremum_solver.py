import numpy as np
import pytest

from heps.config import settings
from heps.errors import InconsistentPairError, InvalidInputError, SolverError
from heps.solver import (
    critical_derivative,
    critical_function,
    critical_function_at,
    m0,
    m0_maximizer,
    m0_note,
    newton_system,
    psi,
    residuals,
    scaled_residuals,
    solve_system,
    x0_constant,
    x_c_closed_form,
)


def brute_force_sup(c: float, points: int = 1_000_000) -> float:
    x = np.linspace(1e-7, 1.0 - 1e-7, points)
    return float(np.max(np.log1p(-c * x * x) / np.log1p(-x)))


def test_critical_function_matches_definition():
    x, c = 0.5, 0.75
    expected = np.log(1.0 - c * x * x) / np.log(1.0 - x)
    assert critical_function(x, c) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("x, c", [(0.0, 0.5), (1.0, 0.5), (0.5, 0.0), (0.5, 1.5)])
def test_critical_function_rejects_out_of_range(x, c):
    with pytest.raises(InvalidInputError):
        critical_function(x, c)


def test_critical_function_in_s_agrees_with_x_form():
    for x in (0.1, 0.5, 0.9, 0.999):
        s = -np.log1p(-x)
        assert critical_function_at(s, 0.6) == pytest.approx(critical_function(x, 0.6), rel=1e-12)


@pytest.mark.parametrize("c", [0.05, 0.5, 0.95, 0.999])
def test_critical_function_dominates_the_small_c_minorant(c):
    for x in np.linspace(0.01, 0.99, 99):
        assert critical_function(x, c) > c * x * x / -np.log1p(-x)


def test_critical_derivative_agrees_with_central_difference():
    for x in (0.2, 0.5, 0.8, 0.95):
        step = 1e-6
        numeric = (critical_function(x + step, 0.6) - critical_function(x - step, 0.6)) / (2 * step)
        assert critical_derivative(x, 0.6) == pytest.approx(numeric, rel=1e-5, abs=1e-8)


def test_solve_system_reference_point():
    point = solve_system(0.75)

    assert point.x_c == pytest.approx(0.8551, abs=1e-4)
    assert point.d_c == pytest.approx(0.41156, abs=5e-5)
    assert point.boundary_flag is False
    assert max(abs(r) for r in residuals(point.x_c, point.d_c, 0.75)) <= 1e-10


def test_solve_system_at_c_one_is_the_boundary_case():
    point = solve_system(1.0)

    assert point.boundary_flag is True
    assert point.d_c == 1.0
    assert point.x_c == 1.0


@pytest.mark.parametrize("c", [0.0, -0.1, 1.5])
def test_solve_system_rejects_invalid_c(c):
    with pytest.raises(InvalidInputError):
        solve_system(c)


@pytest.mark.parametrize("c", np.linspace(0.05, 0.95, 20).tolist())
def test_solver_matches_grid_search(c):
    point = solve_system(c)
    assert abs(point.d_c - brute_force_sup(c)) <= 1e-6
    # the value residual is quadratic in the error of the closed-form x
    x_closed = x_c_closed_form(point.d_c, c)
    assert abs(residuals(x_closed, point.d_c, c)[0]) <= 1e-8
    assert x_closed == pytest.approx(point.x_c, abs=1e-8)


@pytest.mark.parametrize("eta", [1e-4, 1e-8, 1e-12, 1e-15])
def test_solver_resolves_maximizers_close_to_one(eta):
    point = solve_system(1.0 - eta)

    assert point.boundary_flag is False
    assert point.x_c < 1.0
    assert 0.0 < point.d_c < 1.0
    assert max(abs(r) for r in scaled_residuals(point.s_c, point.d_c, point.c)) <= 1e-10
    # 1 - x_c is of order 1 - c
    assert 1.0 < (1.0 - point.x_c) / eta < 100.0


def test_solver_uses_the_complement_when_c_rounds_to_one():
    point = solve_system(1.0, one_minus_c=2.5e-17)

    assert point.boundary_flag is False
    assert point.d_c == pytest.approx(0.98, abs=0.01)
    assert point.s_c == pytest.approx(35.1, abs=0.5)
    assert point.delta_star == pytest.approx(np.expm1(point.s_c))


def test_maximizer_drifts_to_one_as_c_grows():
    points = [solve_system(1.0 - 10.0 ** -k) for k in range(2, 15, 2)]
    assert all(b.s_c > a.s_c for a, b in zip(points, points[1:]))
    assert all(b.d_c > a.d_c for a, b in zip(points, points[1:]))


def test_newton_from_a_nearby_start_reaches_the_same_point():
    point = solve_system(0.5)
    x, d, iterations = newton_system(0.5, point.x_c - 1e-3, point.d_c + 1e-3)

    assert x == pytest.approx(point.x_c, abs=1e-9)
    assert d == pytest.approx(point.d_c, abs=1e-12)
    assert iterations >= 1


def test_closed_form_rejects_inconsistent_pairs():
    with pytest.raises(InconsistentPairError):
        x_c_closed_form(1.0, 0.5)
    with pytest.raises(InvalidInputError):
        x_c_closed_form(0.0, 0.5)


def test_closed_form_accepts_the_degenerate_pair():
    assert x_c_closed_form(1.0, 1.0) == pytest.approx(1.0)


def test_psi_is_nondecreasing():
    values = [psi(c) for c in np.linspace(0.02, 0.98, 50)]
    assert all(b >= a - 1e-9 for a, b in zip(values, values[1:]))
    # small-c limit
    assert psi(1e-4) == pytest.approx(m0(2), abs=1e-3)


def test_m0_value_and_maximizer():
    maximizer, value = m0_maximizer(2)

    assert 0.407255 <= value <= 0.407270
    assert maximizer == pytest.approx(0.71533, abs=1e-4)
    assert 4 * value > 1.629


def test_m0_shrinks_with_dimension():
    assert 0 < m0(3) < m0(2)


def test_m0_rejects_bad_dimension():
    with pytest.raises(InvalidInputError):
        m0(1)


def test_x0_constant():
    assert 0.7148 <= x0_constant() <= 0.7158


def test_m0_note_flags_the_stated_estimate(caplog):
    with caplog.at_level("WARNING", logger="heps.solver.m0"):
        note = m0_note()

    assert note["rounds_to_stated"] is True
    assert note["theorem_constant"] > 1.629
    assert note["asymptotic_ratio"] == pytest.approx(0.81453, abs=1e-4)
    if not note["exceeds_stated"]:
        assert "does not strictly exceed" in caplog.text


def test_solver_error_reports_the_bracket():
    error = SolverError("stalled", (0.25, 0.5))
    assert "0.25" in str(error) and "0.5" in str(error)
    assert error.bracket == (0.25, 0.5)


def test_exhausted_bisection_budget_raises_solver_error(monkeypatch):
    monkeypatch.setattr(settings, "HEPS_SOLVER_MAX_ITER", 5)
    with pytest.raises(SolverError) as excinfo:
        m0_maximizer(2)
    assert excinfo.value.bracket is not None


def test_exhausted_solver_budget_raises_solver_error(monkeypatch):
    monkeypatch.setattr(settings, "HEPS_SOLVER_MAX_ITER", 5)
    with pytest.raises(SolverError) as excinfo:
        solve_system(0.75)
    assert excinfo.value.bracket is not None
