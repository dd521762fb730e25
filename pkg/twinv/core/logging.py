# -*- coding: utf-8 -*-
import logging
import sys
from typing import Optional

from twinv.core.config import config


def setup_logging(level: Optional[str] = None) -> logging.Logger:
    """
    Configures the root logger once for both the HTTP app and the CLI.

    Records go to stderr so that command output on stdout stays byte-identical
    between runs; the logger name is included because the long sweeps log from
    several service modules.

    Args:
        level: Level name overriding config.log_level (the CLI passes DEBUG for --verbose).

    Returns:
        logging.Logger: Logger instance for the current module (__name__).
    """
    level = (level or config.log_level).upper()

    logging.basicConfig(
        level=getattr(logging, level, logging.INFO),
        format="%(asctime)s - %(levelname)s - %(name)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        stream=sys.stderr,
    )

    return logging.getLogger(__name__)
