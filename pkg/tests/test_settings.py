"""Tests for lib/settings.py."""
import json
from unittest.mock import patch

import pytest

from bnnctl.lib.errors import SettingsError
from bnnctl.lib.settings import (
    DEFAULT_SETTINGS,
    get_setting,
    load_settings,
    set_setting,
    unset_setting,
    validate_setting,
)


def _patch_file(tmp_path):
    settings_file = tmp_path / "bnnctl" / "settings.json"
    return patch("bnnctl.lib.settings.SETTINGS_FILE", settings_file), settings_file


class TestLoadSettings:
    def test_defaults_when_no_file(self, tmp_path):
        p, _ = _patch_file(tmp_path)
        with p:
            assert load_settings() == DEFAULT_SETTINGS

    def test_overlays_file(self, tmp_path):
        p, settings_file = _patch_file(tmp_path)
        settings_file.parent.mkdir()
        settings_file.write_text(json.dumps({"precision": 5}))
        with p:
            settings = load_settings()
        assert settings["precision"] == 5
        assert settings["operator"] == "avg"

    def test_corrupt_file_warns_and_uses_defaults(self, tmp_path, capsys):
        p, settings_file = _patch_file(tmp_path)
        settings_file.parent.mkdir()
        settings_file.write_text("not valid json{{{")
        with p:
            assert load_settings() == DEFAULT_SETTINGS
        assert "Warning" in capsys.readouterr().err

    def test_non_object_file(self, tmp_path, capsys):
        p, settings_file = _patch_file(tmp_path)
        settings_file.parent.mkdir()
        settings_file.write_text("[1, 2]")
        with p:
            assert load_settings() == DEFAULT_SETTINGS
        assert "not a JSON object" in capsys.readouterr().err

    def test_invalid_stored_value(self, tmp_path):
        p, settings_file = _patch_file(tmp_path)
        settings_file.parent.mkdir()
        settings_file.write_text(json.dumps({"operator": "median"}))
        with p, pytest.raises(SettingsError):
            load_settings()


class TestSetAndUnset:
    def test_set_creates_directory_and_persists(self, tmp_path):
        p, settings_file = _patch_file(tmp_path)
        with p:
            assert set_setting("precision", "4") == 4
            assert get_setting("precision") == 4
        assert json.loads(settings_file.read_text()) == {"precision": 4}

    def test_set_keeps_other_keys(self, tmp_path):
        p, settings_file = _patch_file(tmp_path)
        with p:
            set_setting("operator", "geo")
            set_setting("output", "json")
        assert json.loads(settings_file.read_text()) == {"operator": "geo", "output": "json"}

    def test_set_rejects_bad_value(self, tmp_path):
        p, settings_file = _patch_file(tmp_path)
        with p, pytest.raises(SettingsError):
            set_setting("precision", "lots")
        assert not settings_file.exists()

    def test_unset(self, tmp_path):
        p, _ = _patch_file(tmp_path)
        with p:
            set_setting("precision", 2)
            unset_setting("precision")
            assert get_setting("precision") == DEFAULT_SETTINGS["precision"]

    def test_unset_missing_key(self, tmp_path):
        p, _ = _patch_file(tmp_path)
        with p, pytest.raises(KeyError):
            unset_setting("precision")


class TestValidateSetting:
    @pytest.mark.parametrize("key,value,parsed", [
        ("precision", "0", 0),
        ("precision", 17, 17),
        ("operator", "geo", "geo"),
        ("output", "table", "table"),
        ("tie_tolerance", "1e-6", 1e-6),
    ])
    def test_valid(self, key, value, parsed):
        assert validate_setting(key, value) == parsed

    @pytest.mark.parametrize("key,value", [
        ("precision", "-1"),
        ("precision", "18"),
        ("precision", True),
        ("operator", "avg "),
        ("output", "csv"),
        ("tie_tolerance", "0"),
        ("tie_tolerance", "abc"),
        ("colour", "red"),
    ])
    def test_invalid(self, key, value):
        with pytest.raises(SettingsError):
            validate_setting(key, value)
