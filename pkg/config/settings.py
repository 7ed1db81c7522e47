# Path: config/settings.py
# Purpose: Provide typed application configuration models.
# Layer: config.
# Details: Centralizes defaults for the vanishing sweep, splitting windows, surveys, logging and progress output.

from __future__ import annotations

import os

from pydantic import BaseModel, Field


class VanishSettings(BaseModel):
    """Settings for the vanishing-certificate engine and range sweeps."""

    t_min_margin: int = Field(
        default=5,
        description="Default sweep lower bound is -(n + max degree + margin).",
    )
    workers: int = Field(default=1, ge=1, description="Thread count for sweeps; 1 evaluates inline.")


class SplittingSettings(BaseModel):
    """Settings controlling the twist window used to recover splitting types."""

    window_slack: int = Field(default=2, ge=0, description="Extra twists added above the initial window.")
    max_extensions: int = Field(
        default=12,
        ge=0,
        description="How many times the window may grow before giving up.",
    )


class SurveySettings(BaseModel):
    """Bounds for the multidegree survey."""

    nmax: int = Field(default=5, ge=1, description="Largest ambient dimension surveyed.")
    dmax: int = Field(default=3, ge=2, description="Largest single degree surveyed.")
    cmax: int = Field(default=2, ge=0, description="Largest codimension surveyed.")
    t_min: int | None = Field(default=None, le=-1, description="Sweep lower bound; None uses the per-spec default.")


class AppSettings(BaseModel):
    """Top-level settings shared by the library layers and the command line."""

    vanish: VanishSettings = Field(default_factory=VanishSettings)
    splitting: SplittingSettings = Field(default_factory=SplittingSettings)
    survey: SurveySettings = Field(default_factory=SurveySettings)
    log_level: str = Field(default="WARNING", description="Verbosity level for diagnostics on stderr.")
    progress: bool = Field(default=False, description="Show tqdm progress bars for long batches.")
    default_characteristic: int = Field(default=0, ge=0, description="Base field characteristic for curve input.")

    @classmethod
    def from_env(cls) -> "AppSettings":
        """Instantiate settings, applying CICERT_* environment overrides when present."""

        settings = cls()
        if "CICERT_LOG_LEVEL" in os.environ:
            settings.log_level = os.environ["CICERT_LOG_LEVEL"].upper()
        if "CICERT_WORKERS" in os.environ:
            settings.vanish = settings.vanish.model_copy(update={"workers": int(os.environ["CICERT_WORKERS"])})
        if "CICERT_PROGRESS" in os.environ:
            settings.progress = os.environ["CICERT_PROGRESS"].lower() in {"1", "true", "yes", "on"}
        if "CICERT_CHAR" in os.environ:
            settings.default_characteristic = int(os.environ["CICERT_CHAR"])
        # Re-validate so bad environment values fail here rather than deep in a sweep.
        return cls.model_validate(settings.model_dump())


__all__ = ["AppSettings", "SplittingSettings", "SurveySettings", "VanishSettings"]
