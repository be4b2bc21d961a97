"""
Environment-backed settings for the switch-graph toolkit.
"""

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

from src.core_model.errors import ConfigurationError

DEFAULT_ARRIVAL_BUDGET = 10_000_000
DEFAULT_NAIVE_BUDGET = 1_000_000
DEFAULT_PATH_LIMIT = 1_000_000
DEFAULT_SEED = 42
DEFAULT_LOG_LEVEL = "WARNING"


@dataclass(frozen=True)
class Settings:
    arrival_budget: int = DEFAULT_ARRIVAL_BUDGET
    naive_budget: int = DEFAULT_NAIVE_BUDGET
    path_limit: int = DEFAULT_PATH_LIMIT
    seed: int = DEFAULT_SEED
    log_level: str = DEFAULT_LOG_LEVEL


def _int_setting(key: str, default: int) -> int:
    raw = os.getenv(key)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw.replace("_", ""))
    except ValueError:
        raise ConfigurationError(f"{key} must be an integer, got {raw!r}") from None
    if value < 0:
        raise ConfigurationError(f"{key} must be non-negative, got {value}")
    return value


def get_settings(env_file: Optional[Path] = None) -> Settings:
    """
    Read settings from the environment.

    A `.env` file is loaded first when present; variables already set in the
    process environment take precedence over it.

    Args:
        env_file: Explicit .env path; defaults to python-dotenv's search

    Returns:
        Settings with defaults for any unset key
    """
    if env_file is not None:
        if Path(env_file).exists():
            load_dotenv(env_file)
    else:
        load_dotenv()

    return Settings(
        arrival_budget=_int_setting("SWITCHGRAPH_ARRIVAL_BUDGET", DEFAULT_ARRIVAL_BUDGET),
        naive_budget=_int_setting("SWITCHGRAPH_NAIVE_BUDGET", DEFAULT_NAIVE_BUDGET),
        path_limit=_int_setting("SWITCHGRAPH_PATH_LIMIT", DEFAULT_PATH_LIMIT),
        seed=_int_setting("SWITCHGRAPH_SEED", DEFAULT_SEED),
        log_level=os.getenv("SWITCHGRAPH_LOG_LEVEL", DEFAULT_LOG_LEVEL).upper(),
    )
