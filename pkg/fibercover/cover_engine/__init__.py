# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""Finite covers of the punctured torus and the lifting criteria for the monodromy and surgery curve."""

from .permutations import (
    as_array,
    as_perm,
    compose,
    compose_arrays,
    invert_array,
    power_array,
    is_identity_array,
    orbits_of_arrays,
    cycle_type,
    word_array,
    perm_from_one_based,
    perm_to_one_based,
  )
from .cut_data import CutData, check_condition_I_II, check_condition_III
from .cover_rep import CoverRep, build_rep, cut_data_arrays, restrict_to_orbit, euler_and_boundary
from .intertwiner import (
    Intertwiner,
    find_intertwiners,
    is_intertwiner,
    deck_group,
    canonical_intertwiner,
    meridian_array,
    surgery_lifts,
    boundary_tori,
    lifting_intertwiner,
  )
