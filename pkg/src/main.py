"""
Main entry point for the infgon engine.

Sets up centralized logging, runs one CLI command and maps the outcome to
a process exit status: 0 success, 1 verification failure or unexpected
error, 2 usage error, 130 when interrupted.
"""

import logging
import sys
from typing import Optional, Sequence

# Import centralized logging setup
from .common.logging_config import setup_logging
from .infgon.infgon_cli import main as cli_main

# Initialize logger for this module
logger = logging.getLogger("main")


def setup_application_logging():
    """Set up centralized logging for the entire application."""
    setup_logging()
    logger.info("Logging system initialized successfully")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point for the engine."""
    setup_application_logging()
    try:
        status = cli_main(argv)
        logger.info(f"Command finished with status {status}")
        return status
    except KeyboardInterrupt:
        logger.info("Application interrupted by user")
        return 130
    except Exception as e:
        logger.error(f"Application failed with error: {e}")
        raise


if __name__ == '__main__':
    sys.exit(main())
