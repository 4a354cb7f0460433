import logging
import sys
from pathlib import Path
from typing import Optional

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# third-party loggers that are chatty at DEBUG
QUIET_LOGGERS = ("sympy", "mpmath", "matplotlib")


def configure_logging(verbose: bool = False, log_file: Optional[Path] = None) -> None:
    """Send log records to stderr (and optionally a file); stdout carries JSON only."""
    handlers: list = [logging.StreamHandler(sys.stderr)]
    if log_file is not None:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )
    for name in QUIET_LOGGERS:
        logging.getLogger(name).setLevel(logging.WARNING)
