"""Runtime configuration settings."""

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Settings bundled with convenience accessors."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
    )

    # Core metadata
    PROJECT_NAME: str = Field(default="equilayer", description="Project name")
    PROJECT_VERSION: str = Field(default="0.1.0", description="Project version")
    SERVICE_NAME: str = Field(
        default="equilayer", description="Structured logging service identifier"
    )
    ENVIRONMENT: str = Field(
        default="development", description="Deployment environment name"
    )

    # Logging
    LOG_LEVEL: str = Field(default="WARNING", description="Base log level")
    LOG_DIRECTORY: str = Field(
        default="logs", description="Directory for rotated log files"
    )
    LOG_TO_FILE: bool = Field(
        default=False, description="Attach rotating JSON file handlers"
    )

    # Size guards
    MAX_MATRIX_ENTRIES: int = Field(
        default=10**7,
        description="Largest number of stored matrix entries before refusing",
    )
    TRANSITION_MAX_M: int = Field(
        default=8,
        description="Largest ground set for orbit/diagram basis transitions",
    )
    ORACLE_MAX_CELLS: int = Field(
        default=4**6,
        description="Largest n^(l+k) grid the brute-force orbit oracle accepts",
    )

    # Verification
    DEFAULT_SEED: int = Field(
        default=20240229, description="Seed used when none is given"
    )
    DEFAULT_TRIALS: int = Field(
        default=50, description="Random permutations per equivariance check"
    )

    # Execution
    WORKERS: int = Field(default=1, description="Worker pool size for basis builds")

    @field_validator("LOG_LEVEL", mode="before")
    @classmethod
    def normalise_log_level(cls, value: str) -> str:
        """Accept log levels in any case."""

        return str(value).strip().upper()

    @field_validator(
        "MAX_MATRIX_ENTRIES",
        "TRANSITION_MAX_M",
        "ORACLE_MAX_CELLS",
        "WORKERS",
    )
    @classmethod
    def require_positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("must be a positive integer")
        return value

    @field_validator("DEFAULT_TRIALS")
    @classmethod
    def require_non_negative(cls, value: int) -> int:
        if value < 0:
            raise ValueError("must not be negative")
        return value

    @property
    def app_version(self) -> str:
        """Return the package version string."""

        return self.PROJECT_VERSION

    @property
    def environment(self) -> str:
        return self.ENVIRONMENT

    @property
    def log_directory(self) -> str:
        """Directory used for structured log handlers."""

        return self.LOG_DIRECTORY

    @property
    def max_matrix_entries(self) -> int:
        """Stored-entry cap shared by basis generation and dense output."""

        return self.MAX_MATRIX_ENTRIES

    @property
    def transition_max_m(self) -> int:
        return self.TRANSITION_MAX_M

    @property
    def oracle_max_cells(self) -> int:
        return self.ORACLE_MAX_CELLS


# Create settings instance
settings = Settings()


def get_settings() -> Settings:
    """Get the active settings."""

    return settings
