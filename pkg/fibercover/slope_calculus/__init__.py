# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""Slope arithmetic: framing transforms, case guards and exception scans."""

from .slope import Slope
from .hypotheses import (
    CaseTag,
    HypothesisResult,
    check_hypothesis,
    hypothesis_check,
    reciprocal_sum_below,
    pell_bound_values,
    case5b_abelian_order,
  )
from .framing import (
    FramingTransform,
    SlopeMap,
    apply_framing,
    invert_framing,
    shear,
    BUILTIN_TRANSFORMS,
  )
from .scans import (
    fig8_exception_scan,
    thm12_exception_scan,
    sister_exception_scan,
    pell_family,
  )
