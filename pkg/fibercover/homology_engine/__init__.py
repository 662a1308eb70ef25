# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""Exact first homology of covers of bundles and fillings: presentations, Reidemeister-Schreier, Smith normal form."""

from .snf import (
    IntMatrix,
    SNFResult,
    SparseRow,
    smith_normal_form,
    sparse_smith_normal_form,
    abelian_invariants,
  )
from .presentation import (
    GroupPresentation,
    MappingTorusPresentation,
    mapping_torus_presentation,
    meridian_word,
    image_length_bound,
  )
from .coset_action import CosetAction, SchreierTransversal, CocycleData
from .reidemeister_schreier import SubgroupPresentation, reidemeister_schreier
from .fiber_homology import (
    HomologyCertificate,
    monodromy_cocycles,
    mapping_torus_relation_rows,
    mapping_torus_cover_homology,
    induced_fiber_action,
    boundary_classes,
    fixed_and_peripheral,
    wang_b1,
    b1_filled_cover,
  )
from .low_index import LowIndexResult, LowIndexSearch, low_index_subgroups
