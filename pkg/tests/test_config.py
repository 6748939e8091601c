import pytest
from pydantic import ValidationError

from heps.config import Settings


def test_defaults():
    settings = Settings()

    assert settings.HEPS_THREADS == 0
    assert settings.HEPS_INTERP_EXPONENT == 2.4
    assert settings.HEPS_CONTACT_TOL_FACTOR == 0.05
    assert (settings.HEPS_ELLIPTICITY_LOWER, settings.HEPS_ELLIPTICITY_UPPER) == (1.0, 3.0)


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("HEPS_THREADS", "4")
    monkeypatch.setenv("HEPS_CONTACT_TOL_FACTOR", "4.0")
    monkeypatch.setenv("HEPS_LOG_LEVEL", "DEBUG")
    settings = Settings()

    assert settings.HEPS_THREADS == 4
    assert settings.HEPS_CONTACT_TOL_FACTOR == 4.0
    assert settings.HEPS_LOG_LEVEL == "DEBUG"


@pytest.mark.parametrize(
    "name, value",
    [
        ("HEPS_THREADS", "-1"),
        ("HEPS_INTERP_EXPONENT", "0"),
        ("HEPS_SOLVER_MAX_ITER", "5"),
        ("HEPS_POLISH_TOL", "1e-3"),
        ("HEPS_CONTACT_TOL_FACTOR", "-0.5"),
        ("HEPS_ELLIPTICITY_LOWER", "5.0"),
    ],
)
def test_inconsistent_values_are_rejected(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ValidationError):
        Settings()
