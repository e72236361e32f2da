"""
Tests for app_config.py and logging_config.py
"""

import os
from pathlib import Path

from unittest.mock import patch

from src.common.app_config import (
    APP_CONFIG, get_config, get_decoration_range, get_default_m, get_default_window,
    get_engine_config, get_oracle_config, get_render_config,
)
from src.common.logging_config import build_logging_config, get_log_dir, setup_logging


class TestAppConfig:
    """Test cases for configuration lookups."""

    def test_sections(self):
        """Test the top-level sections."""
        assert set(get_config()) == {"engine", "oracle", "render", "output"}

    def test_defaults(self):
        """Test engine defaults without overrides."""
        with patch.dict(os.environ, {}, clear=True):
            assert get_default_m() == APP_CONFIG["engine"]["default_m"]
            assert get_default_window() == APP_CONFIG["engine"]["default_window"]

    def test_environment_overrides(self):
        """Test INFGON_M and INFGON_WINDOW."""
        with patch.dict(os.environ, {"INFGON_M": "3", "INFGON_WINDOW": "9"}):
            assert get_default_m() == 3
            assert get_default_window() == 9

    def test_bad_override_falls_back(self):
        """Test that non-integer overrides are ignored."""
        with patch.dict(os.environ, {"INFGON_M": "three"}):
            assert get_engine_config()["default_m"] == APP_CONFIG["engine"]["default_m"]

    def test_copies_are_independent(self):
        """Test that callers cannot mutate the shared configuration."""
        oracle = get_oracle_config()
        oracle["interior_margin"] = 99

        assert get_oracle_config()["interior_margin"] != 99

    def test_decoration_ranges(self):
        """Test the sweep and lattice ranges."""
        assert get_decoration_range() == (-3, 3)
        assert get_decoration_range(lattice=True) == (-2, 2)

    def test_render_config(self):
        """Test render settings."""
        assert get_render_config()["size"] > 0


class TestLoggingConfig:
    """Test cases for logging setup."""

    def test_handlers(self, tmp_path):
        """Test the console and rotating file handlers."""
        config = build_logging_config(tmp_path, "DEBUG")

        assert set(config["handlers"]) == {"console", "rotating_file", "error_file"}
        assert config["handlers"]["rotating_file"]["filename"] == str(tmp_path / "app.log")
        assert config["root"]["level"] == "DEBUG"

    def test_log_dir_from_environment(self, tmp_path):
        """Test INFGON_LOG_DIR."""
        with patch.dict(os.environ, {"INFGON_LOG_DIR": str(tmp_path)}):
            assert get_log_dir() == Path(tmp_path)

    @patch('logging.config.dictConfig')
    def test_setup_creates_directory(self, mock_dict_config, tmp_path):
        """Test that setup_logging creates the log directory."""
        log_dir = tmp_path / "logs"

        with patch.dict(os.environ, {"INFGON_LOG_DIR": str(log_dir)}):
            setup_logging()

        assert log_dir.is_dir()
        mock_dict_config.assert_called_once()
