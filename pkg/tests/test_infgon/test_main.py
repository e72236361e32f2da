"""
Tests for main.py
"""

import pytest
from unittest.mock import patch

from src import main as main_module


class TestMain:
    """Test cases for the application entry point."""

    @patch('src.main.setup_logging')
    @patch('src.main.cli_main')
    def test_returns_cli_status(self, mock_cli_main, mock_setup_logging):
        """Test that the CLI status is passed through."""
        # Setup mocks
        mock_cli_main.return_value = 1

        assert main_module.main(['verify', '--suite', 'hom']) == 1
        mock_cli_main.assert_called_once_with(['verify', '--suite', 'hom'])
        mock_setup_logging.assert_called_once()

    @patch('src.main.setup_logging')
    @patch('src.main.cli_main')
    def test_keyboard_interrupt(self, mock_cli_main, mock_setup_logging):
        """Test that interrupts exit 130."""
        mock_cli_main.side_effect = KeyboardInterrupt

        assert main_module.main([]) == 130

    @patch('src.main.setup_logging')
    @patch('src.main.cli_main')
    def test_unexpected_errors_propagate(self, mock_cli_main, mock_setup_logging):
        """Test that other exceptions are logged and re-raised."""
        mock_cli_main.side_effect = RuntimeError("boom")

        with pytest.raises(RuntimeError, match="boom"):
            main_module.main([])
