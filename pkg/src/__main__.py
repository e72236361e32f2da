"""
Main entry point for the infgon package.

This allows the package to be run as: python -m src
"""

import sys

from .main import main

if __name__ == "__main__":
    sys.exit(main())
