"""Logging configuration for pellpoly."""

import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional

from rich.console import Console
from rich.logging import RichHandler

from config import settings

DETAILED_FORMAT = '%(asctime)s | %(levelname)-8s | %(name)s:%(funcName)s:%(lineno)d | %(message)s'


def setup_logging(
    level: Optional[str] = None,
    log_file: Optional[str] = None,
    use_rich_console: bool = True,
    enable_rotation: bool = True,
    max_bytes: int = 10 * 1024 * 1024,  # 10MB
    backup_count: int = 5
) -> None:
    """Configure logging for the application.

    Args:
        level: Log level name (defaults to settings.log_level)
        log_file: Optional log file path (defaults to settings.log_file)
        use_rich_console: Use Rich library for prettier console output
        enable_rotation: Enable log file rotation
        max_bytes: Maximum size of log file before rotation (default 10MB)
        backup_count: Number of backup log files to keep (default 5)
    """
    level_name = level or settings.log_level
    log_level = getattr(logging, level_name.upper(), logging.INFO)
    log_file = log_file if log_file is not None else settings.log_file

    # Console handler
    if use_rich_console:
        console_handler: logging.Handler = RichHandler(
            console=Console(stderr=True),
            show_time=False,
            show_path=False,
            markup=False,
            rich_tracebacks=True,
            tracebacks_show_locals=log_level == logging.DEBUG
        )
    else:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(logging.Formatter('%(levelname)s: %(message)s'))
    console_handler.setLevel(log_level)

    root_logger = logging.getLogger()
    root_logger.setLevel(log_level)

    # Remove existing handlers to avoid duplicates
    root_logger.handlers.clear()
    root_logger.addHandler(console_handler)

    if log_file:
        root_logger.addHandler(
            _file_handler(log_file, log_level, enable_rotation, max_bytes, backup_count)
        )

    logging.debug("Logging configured at %s", logging.getLevelName(log_level))


def _file_handler(
    log_file: str,
    log_level: int,
    enable_rotation: bool,
    max_bytes: int,
    backup_count: int
) -> logging.Handler:
    """Build the detailed file handler, rotating if requested."""
    path = Path(log_file)
    path.parent.mkdir(parents=True, exist_ok=True)

    if enable_rotation:
        handler: logging.Handler = RotatingFileHandler(
            path,
            maxBytes=max_bytes,
            backupCount=backup_count,
            encoding='utf-8'
        )
    else:
        handler = logging.FileHandler(path, encoding='utf-8')

    handler.setLevel(log_level)
    handler.setFormatter(logging.Formatter(fmt=DETAILED_FORMAT, datefmt='%Y-%m-%d %H:%M:%S'))
    return handler


def get_logger(name: str) -> logging.Logger:
    """Get a logger instance for a module.

    Args:
        name: Logger name (usually __name__)

    Returns:
        Configured logger instance

    Example:
        ```python
        from utils.logging_config import get_logger

        logger = get_logger(__name__)
        logger.debug(f"period length {expansion.period_length}")
        ```
    """
    return logging.getLogger(name)
