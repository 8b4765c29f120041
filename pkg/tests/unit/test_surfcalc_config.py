import logging

import pytest
from pydantic import ValidationError

from surfcalc.config import Settings, get_settings


@pytest.mark.unit
def test_defaults() -> None:
    settings = get_settings()

    assert settings.color
    assert settings.logging_level == logging.WARNING
    assert settings.json_indent == 2
    assert settings.property_samples == 200


@pytest.mark.unit
def test_environment_overrides(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("SURFCALC_LOG_LEVEL", " debug ")
    monkeypatch.setenv("SURFCALC_JSON_INDENT", "0")
    monkeypatch.setenv("SURFCALC_COLOR", "false")

    settings = Settings()

    assert settings.log_level == "DEBUG"
    assert settings.json_indent is None
    assert not settings.color


@pytest.mark.unit
@pytest.mark.parametrize(
    "name, value",
    [("SURFCALC_LOG_LEVEL", "loud"), ("SURFCALC_PROPERTY_SAMPLES", "0")],
)
def test_invalid_values(monkeypatch: pytest.MonkeyPatch, name: str, value: str) -> None:
    monkeypatch.setenv(name, value)

    with pytest.raises(ValidationError):
        Settings()
