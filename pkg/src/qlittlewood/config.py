"""User configuration: load and validate config.toml."""

from __future__ import annotations

import logging
import os
import tomllib
from dataclasses import dataclass
from pathlib import Path
from typing import Any

logger = logging.getLogger(__name__)

FORMATS = ("text", "json")


class ConfigError(Exception):
    """Raised when config.toml is malformed or holds invalid values."""


@dataclass(frozen=True, slots=True)
class Settings:
    """Desk-scale limits and verification defaults."""

    max_m: int = 6
    max_dimension: int = 100_000
    jobs: int = 1
    output_format: str = "text"


def get_config_path() -> Path:
    """Return the path to config.toml, respecting XDG_CONFIG_HOME."""
    xdg = os.environ.get("XDG_CONFIG_HOME")
    base = Path(xdg) if xdg else Path.home() / ".config"
    return base / "qlittlewood" / "config.toml"


def _positive(table: dict[str, Any], key: str, default: int, path: Path) -> int:
    value = table.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        msg = f"'{key}' in {path} must be a positive integer, got {value!r}"
        raise ConfigError(msg)
    return value


def _table(data: dict[str, Any], name: str, path: Path) -> dict[str, Any]:
    table = data.get(name, {})
    if not isinstance(table, dict):
        msg = f"[{name}] in {path} must be a table"
        raise ConfigError(msg)
    return table


def load_settings(path: Path) -> Settings:
    """Load settings from a TOML file.

    Returns defaults if the file does not exist.
    Raises ConfigError on parse errors or invalid values.
    """
    if not path.exists():
        return Settings()

    try:
        data = tomllib.loads(path.read_text())
    except tomllib.TOMLDecodeError as e:
        msg = f"Invalid TOML in {path}: {e}"
        raise ConfigError(msg) from e

    for name in sorted(set(data) - {"limits", "verify"}):
        logger.warning("Ignoring unknown table [%s] in %s", name, path)

    limits = _table(data, "limits", path)
    verify = _table(data, "verify", path)
    defaults = Settings()
    output_format = verify.get("format", defaults.output_format)
    if output_format not in FORMATS:
        msg = f"'format' in {path} must be one of {', '.join(FORMATS)}, got {output_format!r}"
        raise ConfigError(msg)
    return Settings(
        max_m=_positive(limits, "max_m", defaults.max_m, path),
        max_dimension=_positive(limits, "max_dimension", defaults.max_dimension, path),
        jobs=_positive(verify, "jobs", defaults.jobs, path),
        output_format=output_format,
    )
