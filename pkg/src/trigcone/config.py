"""
Runtime Settings
Tolerances and limits, overridable through TRIGCONE_* environment variables or a .env file
"""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Numeric defaults for root finding, classification and factorization"""

    model_config = SettingsConfigDict(
        env_prefix="TRIGCONE_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Root finder
    cluster_tol: float = Field(1e-7, gt=0)  # relative to root magnitude scale
    max_iters: int = Field(200, ge=1)
    convergence_tol: float = Field(1e-14, gt=0)
    polish_steps: int = Field(3, ge=0)

    # Cone
    circle_tol: float = Field(1e-7, gt=0)
    critical_circle_tol: float = Field(1e-3, gt=0)
    pair_tol: float = Field(1e-7, gt=0)
    factor_tol: float = Field(1e-9, gt=0)
    classify_tol: float = Field(1e-9, ge=0)
    dis2_tol: float = Field(1e-6, ge=0)
    rank_tol: float = Field(1e-12, ge=0)
    grid_points: int = Field(4096, ge=16)
    consistency_tol: float = Field(1e-6, gt=0)

    log_level: str = "WARNING"


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return the process-wide settings instance"""
    return Settings()


def resolve(value, name: str):
    """Return value, or the named setting when value is None"""
    if value is None:
        return getattr(get_settings(), name)
    return value
