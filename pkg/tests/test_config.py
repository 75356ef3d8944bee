"""Tests for config.py: get_config_path() and load_settings()."""

from __future__ import annotations

import logging
import textwrap
from pathlib import Path

import pytest

from qlittlewood.config import ConfigError, Settings, get_config_path, load_settings

# === get_config_path() ===


def test_get_config_path_respects_xdg(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    """XDG_CONFIG_HOME overrides the default config location."""
    monkeypatch.setenv("XDG_CONFIG_HOME", str(tmp_path))
    result = get_config_path()
    assert result == tmp_path / "qlittlewood" / "config.toml"


def test_get_config_path_falls_back_to_home(monkeypatch: pytest.MonkeyPatch) -> None:
    """Without XDG_CONFIG_HOME, defaults to ~/.config/qlittlewood/config.toml."""
    monkeypatch.delenv("XDG_CONFIG_HOME", raising=False)
    result = get_config_path()
    assert result == Path.home() / ".config" / "qlittlewood" / "config.toml"


# === load_settings() ===


def test_load_settings_valid_toml(tmp_path: Path) -> None:
    """Valid TOML overrides the defaults it names."""
    config_file = tmp_path / "config.toml"
    config_file.write_text(
        textwrap.dedent("""\
        [limits]
        max_m = 5
        max_dimension = 4096

        [verify]
        jobs = 4
        format = "json"
        """)
    )
    assert load_settings(config_file) == Settings(
        max_m=5, max_dimension=4096, jobs=4, output_format="json"
    )


def test_load_settings_partial_file(tmp_path: Path) -> None:
    """Keys left out keep their defaults."""
    config_file = tmp_path / "config.toml"
    config_file.write_text("[verify]\njobs = 2\n")
    assert load_settings(config_file) == Settings(jobs=2)


def test_load_settings_missing_file_returns_defaults(tmp_path: Path) -> None:
    """Missing config file returns the defaults without raising."""
    assert load_settings(tmp_path / "nonexistent.toml") == Settings()


def test_load_settings_invalid_toml_raises(tmp_path: Path) -> None:
    """Malformed TOML raises ConfigError."""
    config_file = tmp_path / "config.toml"
    config_file.write_text("this is not [valid toml")
    with pytest.raises(ConfigError, match="Invalid TOML"):
        load_settings(config_file)


def test_load_settings_unknown_format_raises(tmp_path: Path) -> None:
    """Only text and json are accepted as output formats."""
    config_file = tmp_path / "config.toml"
    config_file.write_text('[verify]\nformat = "yaml"\n')
    with pytest.raises(ConfigError, match="must be one of"):
        load_settings(config_file)


@pytest.mark.parametrize(
    ("table", "line"),
    [
        ("limits", "max_m = 0"),
        ("limits", "max_dimension = -5"),
        ("limits", 'max_m = "6"'),
        ("verify", "jobs = true"),
    ],
)
def test_load_settings_rejects_non_positive(tmp_path: Path, table: str, line: str) -> None:
    """Limits and job counts must be positive integers."""
    config_file = tmp_path / "config.toml"
    config_file.write_text(f"[{table}]\n{line}\n")
    with pytest.raises(ConfigError, match="must be a positive integer"):
        load_settings(config_file)


def test_load_settings_table_must_be_table(tmp_path: Path) -> None:
    """A scalar where a table belongs raises ConfigError."""
    config_file = tmp_path / "config.toml"
    config_file.write_text("limits = 3\n")
    with pytest.raises(ConfigError, match="must be a table"):
        load_settings(config_file)


def test_load_settings_warns_on_unknown_table(
    tmp_path: Path, caplog: pytest.LogCaptureFixture
) -> None:
    """Unknown tables are ignored with a warning."""
    config_file = tmp_path / "config.toml"
    config_file.write_text("[colors]\ntheme = 'dark'\n")
    with caplog.at_level(logging.WARNING, logger="qlittlewood.config"):
        assert load_settings(config_file) == Settings()
    assert "Ignoring unknown table [colors]" in caplog.text
