"""
Allows the engine CLI to be run as: python -m src.infgon
"""

import logging
import sys

from ..common.logging_config import setup_logging
from .infgon_cli import main

# Initialize centralized logging
setup_logging()
logger = logging.getLogger("run")


if __name__ == "__main__":
    logger.info("Starting infgon CLI")
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        logger.info("Interrupted by user")
        print("\nOperation cancelled by user.")
        sys.exit(130)
