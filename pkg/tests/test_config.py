"""Tests for the pydantic-settings configuration layer."""

import pytest
from pydantic import ValidationError

from equilayer.core.config import Settings, get_settings, settings


def test_defaults():
    fresh = Settings(_env_file=None)
    assert fresh.PROJECT_NAME == "equilayer"
    assert fresh.max_matrix_entries == 10**7
    assert fresh.transition_max_m == 8
    assert fresh.oracle_max_cells == 4**6
    assert fresh.DEFAULT_TRIALS == 50
    assert fresh.WORKERS == 1


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("MAX_MATRIX_ENTRIES", "1000")
    monkeypatch.setenv("LOG_LEVEL", "debug")
    monkeypatch.setenv("DEFAULT_SEED", "7")

    fresh = Settings(_env_file=None)
    assert fresh.max_matrix_entries == 1000
    assert fresh.LOG_LEVEL == "DEBUG"
    assert fresh.DEFAULT_SEED == 7


@pytest.mark.parametrize(
    "override",
    [{"WORKERS": 0}, {"MAX_MATRIX_ENTRIES": -1}, {"DEFAULT_TRIALS": -5}],
)
def test_invalid_values_are_rejected(override):
    with pytest.raises(ValidationError):
        Settings(_env_file=None, **override)


def test_zero_trials_allowed():
    assert Settings(_env_file=None, DEFAULT_TRIALS=0).DEFAULT_TRIALS == 0


def test_get_settings_returns_shared_instance():
    assert get_settings() is settings
