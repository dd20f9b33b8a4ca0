"""
Logging for the mixed tilt stability toolkit

Records go to stderr; stdout is reserved for JSON result documents.
"""

import functools
import logging
import sys
import time
from datetime import datetime
from pathlib import Path
from typing import Callable, Optional, Union

from .constants import DEFAULT_LOG_LEVEL, DEFAULT_SLOW_CALL_SECONDS, LOG_LEVELS

_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(funcName)s:%(lineno)d - %(message)s'
_DATEFMT = '%Y-%m-%d %H:%M:%S'


class ToolkitLogger:
    """
    Process-wide wrapper around the ``mixedtilt`` stdlib logger.

    There is a single instance; ``ToolkitLogger()`` always returns it.
    """

    _instance: Optional['ToolkitLogger'] = None

    def __new__(cls):
        if cls._instance is None:
            instance = super().__new__(cls)
            instance._setup()
            cls._instance = instance
        return cls._instance

    def _setup(self) -> None:
        self.slow_call_seconds = DEFAULT_SLOW_CALL_SECONDS
        self.formatter = logging.Formatter(_FORMAT, datefmt=_DATEFMT)
        self.logger = logging.getLogger('mixedtilt')
        self.logger.propagate = False
        self.logger.handlers.clear()
        self.logger.setLevel(getattr(logging, DEFAULT_LOG_LEVEL))

        stderr = logging.StreamHandler(sys.stderr)
        stderr.setFormatter(self.formatter)
        self.logger.addHandler(stderr)
        self._file_handler: Optional[logging.FileHandler] = None

    # stacklevel=2 so funcName/lineno name the caller, not this wrapper
    def debug(self, message: str) -> None:
        self.logger.debug(message, stacklevel=2)

    def info(self, message: str) -> None:
        self.logger.info(message, stacklevel=2)

    def warning(self, message: str) -> None:
        self.logger.warning(message, stacklevel=2)

    def error(self, message: str, exc_info: bool = False) -> None:
        self.logger.error(message, exc_info=exc_info, stacklevel=2)

    def critical(self, message: str, exc_info: bool = True) -> None:
        self.logger.critical(message, exc_info=exc_info, stacklevel=2)

    def set_level(self, level: str) -> bool:
        """Switch to one of LOG_LEVELS; an unknown name is reported and ignored."""
        name = str(level).upper()
        if name not in LOG_LEVELS:
            self.warning(f"Invalid log level: {level}")
            return False
        self.logger.setLevel(getattr(logging, name))
        self.debug(f"Log level set to {name}")
        return True

    def enable_file_output(self, log_dir: Union[str, Path]) -> Path:
        """Also write every record to ``<log_dir>/mixedtilt_<timestamp>.log``."""
        if self._file_handler is not None:
            return Path(self._file_handler.baseFilename)

        directory = Path(log_dir)
        directory.mkdir(parents=True, exist_ok=True)
        log_file = directory / f"mixedtilt_{datetime.now():%Y%m%d_%H%M%S}.log"

        handler = logging.FileHandler(log_file)
        handler.setLevel(logging.DEBUG)
        handler.setFormatter(self.formatter)
        self.logger.addHandler(handler)
        self._file_handler = handler
        self.info(f"Log file: {log_file}")
        return log_file


logger = ToolkitLogger()


def log_function_call(func: Callable) -> Callable:
    """Debug-log arguments, duration and failures of ``func``."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        name = func.__name__
        logger.debug(f"Calling {name} with args={args}, kwargs={kwargs}")
        started = time.perf_counter()
        try:
            result = func(*args, **kwargs)
        except Exception as e:
            logger.debug(f"{name} raised after {time.perf_counter() - started:.4f}s: {e}")
            raise
        logger.debug(f"{name} completed in {time.perf_counter() - started:.4f}s")
        return result

    return wrapper


def log_performance(operation_name: str) -> Callable[[Callable], Callable]:
    """
    Time an operation; anything slower than ``logger.slow_call_seconds``
    is logged as a warning.

    Usage:
        @log_performance("Destabilizer enumeration")
        def enumerate_destabilizer_classes(...):
            ...
    """
    def decorator(func: Callable) -> Callable:
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            started = time.perf_counter()
            result = func(*args, **kwargs)
            elapsed = time.perf_counter() - started
            if elapsed > logger.slow_call_seconds:
                logger.warning(f"{operation_name} took {elapsed:.4f}s (slow)")
            else:
                logger.debug(f"{operation_name} took {elapsed:.4f}s")
            return result
        return wrapper
    return decorator
