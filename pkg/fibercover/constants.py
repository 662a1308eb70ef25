# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""Constants used by fibercover"""

DEFAULT_DEGREE_CAP = 64
"""The maximum permutation degree tried by finite quotient searches."""

DEFAULT_INDEX_CAP = 24
"""The maximum subgroup index tried by low-index subgroup searches."""

DEFAULT_NODE_BUDGET = 2_000_000
"""The maximum number of backtracking nodes visited by a single search."""

DEFAULT_WITNESS_ATTEMPTS = 8
"""The number of distinct quotient witnesses tried per case plan before
   reporting search-exhausted."""

DEFAULT_GROUP_ORDER_CAP = 2_000
"""The largest finite quotient whose regular representation is used to build
   a cover. Covers built from a quotient H on m rows have degree m * |H|."""

DEFAULT_MAX_RELATOR_LENGTH = 20_000
"""Mapping torus relators longer than this are not expanded into explicit
   words. Cover homology still works blockwise; the low-index fallback is
   skipped for such bundles."""

DEFAULT_SCAN_WINDOW = 10
"""Default |mu|, |lambda| bound for slope scans."""

CONFIG_FILE_ENV_VAR = 'FIBERCOVER_CONFIG_FILE'
"""Environment variable naming a JSON config file."""

DEGREE_CAP_ENV_VAR = 'FIBERCOVER_DEGREE_CAP'
"""Environment variable overriding the quotient degree cap."""

INDEX_CAP_ENV_VAR = 'FIBERCOVER_INDEX_CAP'
"""Environment variable overriding the low-index cap."""

NODE_BUDGET_ENV_VAR = 'FIBERCOVER_NODE_BUDGET'
"""Environment variable overriding the backtracking node budget."""

CERTIFICATE_SCHEMA = 'fibercover/1'
"""Version tag written into every certificate."""
