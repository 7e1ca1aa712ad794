"""Structured logging with run IDs for pgl_gluing.

Provides consistent logging across the package. Every CLI invocation gets a
run ID so that log lines from concurrent Newton restarts can be grouped.
Log output goes to stderr; stdout is reserved for artifacts.
"""

import logging
import sys
import uuid
from contextvars import ContextVar
from typing import Optional


# Context variable for the run ID (thread-safe)
_run_id: ContextVar[Optional[str]] = ContextVar("run_id", default=None)


class RunIdFormatter(logging.Formatter):
    """Formatter that injects the current run ID."""

    def format(self, record: logging.LogRecord) -> str:
        """Add run ID to log record."""
        run_id = _run_id.get()
        record.run_id = run_id or "no-run"  # type: ignore
        return super().format(record)


def setup_logging(
    level: str = "WARNING",
    log_file: Optional[str] = None,
    json_format: bool = False,
) -> None:
    """Configure package-wide logging.

    Args:
        level: Log level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Optional file path for log output
        json_format: Whether to emit one JSON object per line
    """
    log_level = getattr(logging, level.upper())

    if json_format:
        fmt = '{"timestamp": "%(asctime)s", "level": "%(levelname)s", "run_id": "%(run_id)s", "logger": "%(name)s", "message": "%(message)s"}'
    else:
        fmt = "%(asctime)s [%(run_id)s] %(levelname)-8s %(name)s - %(message)s"

    formatter = RunIdFormatter(fmt, datefmt="%Y-%m-%d %H:%M:%S")

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(log_level)
    console_handler.setFormatter(formatter)

    package_logger = logging.getLogger("pgl_gluing")
    package_logger.setLevel(log_level)
    # Re-running setup (tests, repeated CLI calls) must not stack handlers
    for handler in list(package_logger.handlers):
        package_logger.removeHandler(handler)
    package_logger.addHandler(console_handler)
    package_logger.propagate = False

    if log_file:
        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(log_level)
        file_handler.setFormatter(formatter)
        package_logger.addHandler(file_handler)


def get_logger(name: str) -> logging.Logger:
    """Get a logger instance.

    Args:
        name: Logger name (usually __name__)

    Returns:
        Logger instance
    """
    return logging.getLogger(name)


def set_run_id(run_id: Optional[str] = None) -> str:
    """Set the run ID for the current context.

    Args:
        run_id: Run ID to use. If None, generates a new UUID.

    Returns:
        The run ID that was set
    """
    if run_id is None:
        run_id = str(uuid.uuid4())
    _run_id.set(run_id)
    return run_id


def get_run_id() -> Optional[str]:
    """Get the current run ID.

    Returns:
        Current run ID or None
    """
    return _run_id.get()


def clear_run_id() -> None:
    """Clear the run ID from the current context."""
    _run_id.set(None)
