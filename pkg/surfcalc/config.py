import logging
from functools import lru_cache

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


_LEVEL_NAMES: frozenset[str] = frozenset(
    {"CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG"}
)


class Settings(BaseSettings):
    """Runtime settings loaded from SURFCALC_* environment variables."""

    model_config = SettingsConfigDict(extra="ignore")

    color: bool = Field(default=True, alias="SURFCALC_COLOR")
    log_level: str = Field(default="WARNING", alias="SURFCALC_LOG_LEVEL")
    json_indent: int | None = Field(default=2, alias="SURFCALC_JSON_INDENT")

    property_seed: int = Field(default=0, alias="SURFCALC_PROPERTY_SEED")
    property_samples: int = Field(default=200, alias="SURFCALC_PROPERTY_SAMPLES")

    @field_validator("log_level", mode="before")
    @classmethod
    def _normalize_log_level(cls, value: object) -> object:
        if isinstance(value, str):
            normalized = value.strip().upper()
            if normalized not in _LEVEL_NAMES:
                raise ValueError(
                    f"SURFCALC_LOG_LEVEL must be one of {sorted(_LEVEL_NAMES)}, "
                    f"got '{value}'"
                )
            return normalized
        return value

    @field_validator("json_indent")
    @classmethod
    def _compact_when_not_positive(cls, value: int | None) -> int | None:
        if value is not None and value <= 0:
            return None
        return value

    @field_validator("property_samples")
    @classmethod
    def _check_samples(cls, value: int) -> int:
        if value < 1:
            raise ValueError("SURFCALC_PROPERTY_SAMPLES must be at least 1")
        return value

    @property
    def logging_level(self) -> int:
        mapping = getattr(logging, "getLevelNamesMapping", lambda: dict(logging._nameToLevel))()  # Python < 3.11
        return mapping[self.log_level]


@lru_cache
def get_settings() -> Settings:
    return Settings()
