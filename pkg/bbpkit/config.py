from pydantic_settings import BaseSettings
from pydantic import field_validator
from functools import lru_cache


class Settings(BaseSettings):
    """Engine settings loaded from environment variables."""

    # Verification
    BBP_PRECISION_BITS: int = 128

    # Digit extraction
    BBP_DIGIT_GUARD_BITS: int = 16
    BBP_DIGIT_RETRIES: int = 3

    # Root analysis
    BBP_ROOT_TOL: float = 1e-9
    BBP_ROOT_PRECISION_BITS: int = 256
    BBP_ROOT_ESCALATIONS: int = 4

    # Formula algebra
    BBP_MAX_PERIOD: int = 4096
    BBP_REGROUP_SEARCH_BOUND: int = 64

    BBP_LOG_LEVEL: str = "WARNING"

    @field_validator(
        "BBP_PRECISION_BITS",
        "BBP_DIGIT_GUARD_BITS",
        "BBP_ROOT_PRECISION_BITS",
        "BBP_MAX_PERIOD",
        "BBP_REGROUP_SEARCH_BOUND",
    )
    @classmethod
    def must_be_positive(cls, v: int) -> int:
        """Reject non-positive sizes."""
        if v < 1:
            raise ValueError("must be a positive integer")
        return v

    @field_validator("BBP_DIGIT_RETRIES", "BBP_ROOT_ESCALATIONS")
    @classmethod
    def must_be_nonnegative(cls, v: int) -> int:
        if v < 0:
            raise ValueError("must be nonnegative")
        return v

    @field_validator("BBP_ROOT_TOL")
    @classmethod
    def tolerance_in_range(cls, v: float) -> float:
        if not 0 < v < 1:
            raise ValueError("tolerance must lie in (0, 1)")
        return v

    @field_validator("BBP_LOG_LEVEL", mode="before")
    @classmethod
    def normalize_level(cls, v: str) -> str:
        """Accept log levels in any case."""
        return v.strip().upper() if isinstance(v, str) else v

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
