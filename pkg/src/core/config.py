#!/usr/bin/env python3
"""Configuration module for marc-rlnc"""
from pathlib import Path
from typing import Any

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from src.core.errors import InvalidArgumentError
from src.core.logger import get_logger

logger = get_logger("config")

# Keys accepted in experiment config files (CLI flag names without dashes)
CONFIG_FILE_KEYS = frozenset({
    "k1", "k2", "n1", "n2", "nr",
    "p1d", "p2d", "p1r", "p2r", "prd",
    "k", "n", "psd", "psr",
    "scheme", "trials", "seed",
})


class Settings(BaseSettings):
    """Main configuration for simulations and sweeps"""

    model_config = SettingsConfigDict(
        env_prefix="MARC_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore"
    )

    # Trial budget profile
    profile: str = "standard"
    log_level: str = "warning"
    default_seed: int = Field(default=12345, ge=0, le=2**64 - 1)
    workers: int = Field(default=1, ge=1)
    chunk_size: int = Field(default=4096, ge=1)

    # Trial budget profiles
    PROFILES: dict[str, dict[str, Any]] = {
        "quick": {
            "trials": 10_000,
        },
        "standard": {
            "trials": 100_000,
        },
        "thorough": {
            "trials": 1_000_000,
        }
    }

    def get_profile_settings(self) -> dict[str, Any]:
        """Get current profile settings"""
        return self.PROFILES.get(self.profile, self.PROFILES["standard"])

    @property
    def default_trials(self) -> int:
        """Trial count used when none is given explicitly"""
        return int(self.get_profile_settings()["trials"])


def load_config_file(path: Path) -> dict[str, str]:
    """Load a flat `key = value` experiment file

    Args:
        path: Config file location

    Returns:
        Raw string values keyed by flag name; validation happens in the models
    """
    values: dict[str, str] = {}

    with open(path, encoding="utf-8") as f:
        for line_no, line in enumerate(f, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue

            if "=" not in line:
                raise InvalidArgumentError(f"{path}:{line_no}: expected 'key = value', got {line!r}")

            key, value = (part.strip() for part in line.split("=", 1))
            key = key.lower().replace("-", "_").replace("_", "")
            if key not in CONFIG_FILE_KEYS:
                raise InvalidArgumentError(f"{path}:{line_no}: unknown key {key!r}")
            if key in values:
                logger.warning(f"{path}:{line_no}: key {key!r} repeated, last value wins")
            values[key] = value

    logger.debug(f"Loaded {len(values)} keys from {path}")
    return values
