import pytest
from pydantic import ValidationError

from bbpkit.config import Settings, get_settings


def test_defaults():
    settings = Settings()
    assert settings.BBP_PRECISION_BITS == 128
    assert settings.BBP_DIGIT_GUARD_BITS == 16
    assert settings.BBP_DIGIT_RETRIES == 3
    assert settings.BBP_ROOT_TOL == 1e-9
    assert settings.BBP_MAX_PERIOD == 4096
    assert settings.BBP_LOG_LEVEL == "WARNING"


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("BBP_PRECISION_BITS", "256")
    monkeypatch.setenv("BBP_LOG_LEVEL", "debug")
    settings = get_settings()
    assert settings.BBP_PRECISION_BITS == 256
    assert settings.BBP_LOG_LEVEL == "DEBUG"


def test_settings_are_cached():
    assert get_settings() is get_settings()


@pytest.mark.parametrize("name,value", [
    ("BBP_PRECISION_BITS", "0"),
    ("BBP_DIGIT_RETRIES", "-1"),
    ("BBP_ROOT_TOL", "2"),
    ("BBP_MAX_PERIOD", "-5"),
])
def test_invalid_values(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ValidationError):
        Settings()


def test_precision_setting_reaches_verification(monkeypatch):
    from bbpkit.formulas import catalog
    from bbpkit.verify import verify_formula

    monkeypatch.setenv("BBP_PRECISION_BITS", "40")
    assert verify_formula(catalog("plouffe")).bits == 40
