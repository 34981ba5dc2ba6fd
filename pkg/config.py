"""Configuration management for pellpoly."""

from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from defaults, .env and PELLPOLY_* variables."""

    # Logging Configuration
    log_level: str = Field(
        default="INFO",
        description="Logging level (DEBUG, INFO, WARNING, ERROR)"
    )
    log_file: Optional[str] = Field(
        default=None,
        description="Path to log file (console only when unset)"
    )
    log_rotation_enabled: bool = Field(
        default=True,
        description="Enable log file rotation"
    )
    log_max_bytes: int = Field(
        default=10 * 1024 * 1024,  # 10MB
        description="Maximum log file size before rotation (bytes)"
    )
    log_backup_count: int = Field(
        default=5,
        description="Number of backup log files to keep"
    )
    log_use_rich_console: bool = Field(
        default=True,
        description="Use Rich library for prettier console output"
    )

    # Factorization
    factor_seed: int = Field(
        default=0,
        description="Seed for the randomized Pollard-Brent splitting"
    )
    trial_division_bound: int = Field(
        default=1000,
        ge=2,
        description="Primes below this bound are removed by trial division"
    )
    rho_max_restarts: int = Field(
        default=64,
        ge=1,
        description="Pollard-Brent restarts (new polynomial) before giving up"
    )

    # Squarefree scans
    sieve_bound: int = Field(
        default=10_000,
        ge=2,
        description="Largest prime p whose square is sieved out"
    )
    scan_chunk_size: int = Field(
        default=25_000,
        ge=1,
        description="Number of t values handled per scan work unit"
    )
    scan_workers: int = Field(
        default=1,
        ge=1,
        description="Worker processes for range-parallel scans"
    )
    enable_parallel_execution: bool = Field(
        default=False,
        description="Run scan chunks and verification grids in worker processes"
    )
    scan_failure_sample: int = Field(
        default=10,
        ge=0,
        description="How many non-squarefree (t, witness) pairs a scan report keeps"
    )

    # Family verification
    family_t_max: int = Field(
        default=25,
        ge=0,
        description="Default largest t for family verification grids"
    )

    model_config = SettingsConfigDict(
        env_prefix="PELLPOLY_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore"
    )

    def parallel_workers(self) -> int:
        """Number of worker processes to use for fan-out work.

        Returns:
            1 unless parallel execution is enabled
        """
        if not self.enable_parallel_execution:
            return 1
        return self.scan_workers


# Global settings instance
settings = Settings()
