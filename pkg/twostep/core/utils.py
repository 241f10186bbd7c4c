# twostep/core/utils.py

"""
Logging helpers shared by all twostep modules
"""

import json
import logging
import sys
import time

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


class JsonFormatter(logging.Formatter):
    def format(self, record):
        log_record = {
            "time": self.formatTime(record, self.datefmt),
            "level": record.levelname,
            "name": record.name,
            "message": record.getMessage(),
        }
        if hasattr(record, "extra_data"):
            log_record.update(record.extra_data)
        if record.exc_info:
            log_record["exception"] = self.formatException(record.exc_info)
        return json.dumps(log_record)


def _make_handler(json_logs=False):
    # stdout is reserved for command output
    handler = logging.StreamHandler(sys.stderr)
    if json_logs:
        handler.setFormatter(JsonFormatter(datefmt=DATE_FORMAT))
    else:
        handler.setFormatter(logging.Formatter(LOG_FORMAT, DATE_FORMAT))
    return handler


def get_logger(name="twostep", level=logging.WARNING):
    logger = logging.getLogger(name)
    # Several modules share a logger; keep whatever configure_logging set
    if logger.handlers:
        return logger

    logger.setLevel(level)
    logger.addHandler(_make_handler())
    logger.propagate = False
    return logger


def configure_logging(level="WARNING", json_logs=False):
    """Apply a level and formatter to every logger of the package."""
    numeric = getattr(logging, str(level).upper(), None)
    if not isinstance(numeric, int):
        raise ValueError(f"Unknown log level: {level}")

    for name, logger in list(logging.Logger.manager.loggerDict.items()):
        if not isinstance(logger, logging.Logger):
            continue
        if name == "twostep" or name.startswith("twostep."):
            logger.setLevel(numeric)
            logger.handlers.clear()
            logger.addHandler(_make_handler(json_logs))
    return numeric


class Stopwatch:
    """Context manager collecting wall-clock seconds under a label."""

    def __init__(self, timings, label):
        self.timings = timings
        self.label = label
        self._start = None

    def __enter__(self):
        self._start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        self.timings[self.label] = round(time.perf_counter() - self._start, 6)
        return False
