# wknots/logging_config.py
import logging
import logging.config
from copy import deepcopy
from typing import Any, Dict, Optional

# Library modules only create loggers; entry points call configure_logging once.
LOGGING_CONFIG: Dict[str, Any] = {
    "version": 1,
    "disable_existing_loggers": False,

    "formatters": {
        "default": {
            "format": "%(asctime)s | %(levelname)s | %(name)s | %(message)s",
            "datefmt": "%Y-%m-%d %H:%M:%S",
        },
    },

    "handlers": {
        # stdout carries results, so logs go to stderr
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "default",
            "stream": "ext://sys.stderr",
        },
    },

    "loggers": {
        "": {
            "handlers": ["console"],
            "level": "WARNING",
        },
        "wknots": {
            "level": "INFO",
        },
    },
}


def configure_logging(level: Optional[str] = None) -> None:
    """Apply LOGGING_CONFIG; level overrides the wknots logger (default: settings.log_level)."""
    if level is None:
        from wknots.config import settings

        level = settings.log_level
    config = deepcopy(LOGGING_CONFIG)
    config["loggers"]["wknots"]["level"] = level.upper()
    logging.config.dictConfig(config)
    logging.getLogger("wknots").debug("Logging configured at %s", level.upper())
