#
# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
Logging for fibercover package.

Library code only logs through `logger`; the command-line tool is the one place
that installs handlers.
"""

from __future__ import annotations

import logging

logger = logging.getLogger(__name__.rsplit('.', 1)[0])

LOG_FORMAT = '%(levelname)s %(name)s: %(message)s'

def configure_logging(level_name: str) -> None:
    """Install a stderr handler at the named level ('debug', 'info', ...)."""
    level = logging.getLevelName(level_name.upper())
    logging.basicConfig(level=level, format=LOG_FORMAT)
    logger.setLevel(level)
