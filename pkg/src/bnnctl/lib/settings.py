"""User settings stored as JSON in SETTINGS_FILE.

Settings only supply defaults for CLI options that were not given on the
command line.
"""
import json
from typing import Any

import click

from bnnctl.config import DEFAULT_PRECISION, SETTINGS_FILE, TIE_TOLERANCE

from .errors import SettingsError

DEFAULT_SETTINGS = {
    "precision": DEFAULT_PRECISION,
    "operator": "avg",
    "output": "table",
    "tie_tolerance": TIE_TOLERANCE,
}


def _parse_precision(value: Any) -> int:
    try:
        precision = int(value)
    except (TypeError, ValueError):
        raise SettingsError(f"precision must be an integer, got {value!r}") from None
    if isinstance(value, bool) or precision < 0 or precision > 17:
        raise SettingsError(f"precision must be between 0 and 17, got {value!r}")
    return precision


def _parse_choice(name: str, choices: tuple):
    def parse(value: Any) -> str:
        if value not in choices:
            raise SettingsError(f"{name} must be one of {', '.join(choices)}, got {value!r}")
        return value
    return parse


def _parse_tolerance(value: Any) -> float:
    try:
        tol = float(value)
    except (TypeError, ValueError):
        raise SettingsError(f"tie_tolerance must be a number, got {value!r}") from None
    if isinstance(value, bool) or not 0.0 < tol < 1.0:
        raise SettingsError(f"tie_tolerance must be in (0, 1), got {value!r}")
    return tol


PARSERS = {
    "precision": _parse_precision,
    "operator": _parse_choice("operator", ("avg", "geo")),
    "output": _parse_choice("output", ("table", "json")),
    "tie_tolerance": _parse_tolerance,
}


def validate_setting(key: str, value: Any) -> Any:
    """Return the parsed value, raising SettingsError for bad keys or values."""
    if key not in PARSERS:
        raise SettingsError(f"unknown setting '{key}'. Available: {', '.join(PARSERS)}")
    return PARSERS[key](value)


def _load_raw() -> dict:
    if not SETTINGS_FILE.exists():
        return {}
    try:
        with open(SETTINGS_FILE, encoding="utf-8") as f:
            data = json.load(f)
    except (json.JSONDecodeError, OSError) as e:
        click.echo(f"Warning: ignoring unreadable settings file {SETTINGS_FILE}: {e}", err=True)
        return {}
    if not isinstance(data, dict):
        click.echo(f"Warning: ignoring settings file {SETTINGS_FILE}: not a JSON object", err=True)
        return {}
    return data


def _save_raw(data: dict) -> None:
    SETTINGS_FILE.parent.mkdir(parents=True, exist_ok=True)
    with open(SETTINGS_FILE, "w", encoding="utf-8") as f:
        json.dump(data, f, indent=2, sort_keys=True)


def load_settings() -> dict:
    """Defaults overlaid with the validated contents of the settings file."""
    settings = dict(DEFAULT_SETTINGS)
    for key, value in _load_raw().items():
        settings[key] = validate_setting(key, value)
    return settings


def get_setting(key: str) -> Any:
    return load_settings()[key]


def set_setting(key: str, value: Any) -> Any:
    """Validate and persist a setting. Returns the stored value."""
    parsed = validate_setting(key, value)
    data = _load_raw()
    data[key] = parsed
    _save_raw(data)
    return parsed


def unset_setting(key: str) -> None:
    """Remove a setting. Raises KeyError if it is not set."""
    data = _load_raw()
    if key not in data:
        raise KeyError(key)
    del data[key]
    _save_raw(data)
