"""
Configuration module for deskcalc
Numeric defaults shared by the expression, calculus, finance and statistics models
"""

from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict
from pydantic import Field
from typing import Tuple, Type
from enum import Enum
from functools import lru_cache


class OutputFormat(str, Enum):
    """Output formats accepted by the command-line surface"""
    TABLE = "table"
    CSV = "csv"
    SVG = "svg"


class Settings(BaseSettings):
    """
    Application settings

    Values come from constructor arguments only: the tool reads no
    environment variables and no configuration files.
    """

    model_config = SettingsConfigDict(case_sensitive=False, frozen=True)

    # Application Settings
    app_name: str = "deskcalc"
    app_version: str = "1.0.0"
    log_level: str = "WARNING"

    # Goal Seek
    goal_seek_tolerance: float = Field(default=1e-9, gt=0, description="Bound on |f(x) - target|")
    goal_seek_max_iterations: int = Field(default=100, ge=1, description="Iteration cap")
    goal_seek_start_perturbation: float = Field(
        default=1e-4,
        gt=0,
        description="Offset tried when f is undefined at the start value"
    )
    goal_seek_max_backtracks: int = Field(default=30, ge=0, description="Step halvings per iteration")
    classification_epsilon: float = Field(
        default=1e-8,
        gt=0,
        description="Second-derivative threshold, scaled by 1 + |f(x)|"
    )

    # Calculus
    numeric_derivative_step: float = Field(default=1e-6, gt=0)
    tabulate_integral_tolerance: float = Field(default=1e-9, gt=0)

    # Special functions
    beta_max_iterations: int = Field(default=300, ge=1)
    beta_epsilon: float = Field(default=1e-15, gt=0)
    inverse_tolerance: float = Field(default=1e-12, gt=0)
    inverse_max_iterations: int = Field(default=200, ge=1)

    # Hypothesis tests
    default_alpha: float = Field(default=0.05, gt=0, lt=1)

    # Display
    display_significant_digits: int = Field(default=6, ge=1, le=17)
    money_decimals: int = Field(default=2, ge=0)

    # SVG charts
    svg_width: int = Field(default=640, ge=100)
    svg_height: int = Field(default=400, ge=100)
    svg_margin: int = Field(default=48, ge=0)

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: Type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> Tuple[PydanticBaseSettingsSource, ...]:
        return (init_settings,)


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance"""
    return Settings()


# Global settings instance
settings = get_settings()
