# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""Free-group and SL(2,Z) calculus for monodromy words."""

from .free_word import FreeWord, free_reduce, X, Y, T
from .sl2 import SL2Matrix, R_MATRIX, L_MATRIX, sl2_conjugacy_witness_check
from .twist import (
    TwistGen,
    TwistBlock,
    TwistWord,
    TwistEndo,
    parse_twist_word,
    twist_endo,
    monodromy_matrix,
    boundary_word,
    BOUNDARY_WORD,
    boundary_conjugator,
  )
from .invariants import BundleInvariants, bundle_invariants
