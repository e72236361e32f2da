"""
Application configuration module.

All engine defaults live here in Python format. A few values can be
overridden from the environment (INFGON_M, INFGON_WINDOW, INFGON_LOG_DIR).
"""

import logging
import os
from typing import Dict, Any, Tuple

# Initialize logger for this module
logger = logging.getLogger("app_config")

# Application configuration for the infgon engine
APP_CONFIG = {
    "engine": {
        "default_m": 2,
        "default_window": 6,
        "lift_search_radius": 3,
        "perp_margin": 6
    },
    "oracle": {
        "interior_margin": 2,
        "decoration_range": [-3, 3],
        "lattice_decoration_range": [-2, 2],
        "lattice_max_k": 6
    },
    "render": {
        "size": 480,
        "radius_ratio": 0.42,
        "blob_radius": 5,
        "squash": 0.35
    },
    "output": {
        "default_format": "json",
        "indent": 2
    }
}


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer {name}={raw!r}, using {default}")
        return default


def get_config() -> Dict[str, Any]:
    """
    Get the application configuration.

    Returns:
        Configuration dictionary
    """
    logger.debug("Retrieving application configuration")
    config = APP_CONFIG.copy()
    logger.debug(f"Configuration loaded: {len(config)} top-level sections")
    return config


def get_engine_config() -> Dict[str, Any]:
    """
    Get engine configuration with environment overrides applied.

    Returns:
        Engine configuration dictionary
    """
    config = APP_CONFIG["engine"].copy()
    config["default_m"] = _env_int("INFGON_M", config["default_m"])
    config["default_window"] = _env_int("INFGON_WINDOW", config["default_window"])
    logger.debug(f"Engine settings: {config}")
    return config


def get_default_m() -> int:
    return get_engine_config()["default_m"]


def get_default_window() -> int:
    return get_engine_config()["default_window"]


def get_lift_search_radius() -> int:
    """Blob lift positions tried when realising an extension in the completed gon."""
    return APP_CONFIG["engine"]["lift_search_radius"]


def get_perp_margin() -> int:
    return APP_CONFIG["engine"]["perp_margin"]


def get_oracle_config() -> Dict[str, Any]:
    """
    Get oracle configuration.

    Returns:
        Oracle configuration dictionary
    """
    logger.debug("Retrieving oracle configuration")
    return APP_CONFIG["oracle"].copy()


def get_decoration_range(lattice: bool = False) -> Tuple[int, int]:
    """
    Get the regular decoration positions swept by the oracle.

    Args:
        lattice: Use the smaller range of the pairwise lattice sweeps

    Returns:
        Inclusive (low, high) bounds
    """
    key = "lattice_decoration_range" if lattice else "decoration_range"
    low, high = APP_CONFIG["oracle"][key]
    logger.debug(f"Decoration range ({key}): [{low}, {high}]")
    return low, high


def get_interior_margin() -> int:
    return APP_CONFIG["oracle"]["interior_margin"]


def get_render_config() -> Dict[str, Any]:
    logger.debug("Retrieving render configuration")
    return APP_CONFIG["render"].copy()


def get_output_config() -> Dict[str, Any]:
    return APP_CONFIG["output"].copy()
