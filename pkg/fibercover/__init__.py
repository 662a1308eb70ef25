# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""Package fibercover provides a command-line tool and API for certifying that Dehn
fillings of once-punctured torus bundles are virtually Z-representable, by building
explicit finite covers and computing their first homology exactly.
"""

from .version import __version__

from .pkg_logging import logger

from .internal_types import Jsonable, JsonableDict

from .exceptions import (
    FiberCoverError,
    WordSyntaxError,
    SlopeError,
    PatternMismatchError,
    DisconnectedCoverError,
    SearchBudgetExhausted,
    DegenerateSolutionError,
    GuardViolation,
    NoApplicableCase,
    RelatorActionError,
    PreconditionError,
    MalformedCertificateError,
    HomologyMismatchError,
  )

from .constants import (
    DEFAULT_DEGREE_CAP,
    DEFAULT_INDEX_CAP,
    DEFAULT_NODE_BUDGET,
    DEFAULT_WITNESS_ATTEMPTS,
    DEFAULT_GROUP_ORDER_CAP,
    DEFAULT_MAX_RELATOR_LENGTH,
    DEFAULT_SCAN_WINDOW,
    CERTIFICATE_SCHEMA,
  )

from .config import FiberCoverConfig

from .util import (
    atomic_write_text,
)
