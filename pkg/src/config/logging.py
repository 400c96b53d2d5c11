import logging
import sys
from typing import Optional, TextIO

from config.settings import get_log_level

# -----------------------------------------------------------------------------
# Logger Setup
#
# Simple logger with timestamps. Library modules log through children
# of the "logcorr" logger, e.g. logging.getLogger("logcorr.arith.sieve").
# Usage: logger.info("message"), logger.debug("message"), etc.
# -----------------------------------------------------------------------------
def setup_logger(
    name: str = "logcorr",
    level: Optional[int] = None,
    stream: Optional[TextIO] = None,
) -> logging.Logger:
    logger = logging.getLogger(name)

    if level is None:
        level = logging.getLevelName(get_log_level())
        if not isinstance(level, int):
            level = logging.INFO

    # avoid adding handlers multiple times
    if logger.handlers:
        logger.setLevel(level)
        for handler in logger.handlers:
            handler.setLevel(level)
        return logger

    logger.setLevel(level)
    logger.propagate = False  # prevent duplicate logs from root logger

    # stderr by default so CSV/JSON on stdout stays clean
    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setLevel(level)

    # format: [timestamp] [level] [name] message
    formatter = logging.Formatter(
        "[%(asctime)s] [%(levelname)s] [%(name)s] %(message)s",
        datefmt="%H:%M:%S"
    )
    handler.setFormatter(formatter)
    logger.addHandler(handler)

    return logger


def get_module_logger(module: str) -> logging.Logger:
    """Child logger of the shared "logcorr" logger."""
    return logging.getLogger(f"logcorr.{module}")


# global logger instance
logger = setup_logger()
