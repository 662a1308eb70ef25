# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
Doubled cyclic covers with horizontal cuts.

The k-row cyclic cover sigma_i = c^(e_i) is stacked twice to give 2k rows, and
the two copies are joined across a cut: a column permutation composed into the
row advance at the end of each copy. Even lambda uses one transposition of
non-adjacent columns; odd lambda uses (|lambda| - 1) / 2 transpositions of
adjacent columns.
"""

from __future__ import annotations

from sympy.combinatorics import Permutation

from ..internal_types import *
from ..exceptions import DegenerateSolutionError, DisconnectedCoverError, GuardViolation
from ..pkg_logging import logger
from ..word_algebra import TwistWord
from ..slope_calculus import Slope, CaseTag, check_hypothesis
from ..cover_engine import CutData, CoverRep, build_rep, lifting_intertwiner
from .cyclic import CyclicSolution, cyclic_solution
from .plan import representative_word

def horizontal_cut(lam: int, width: int) -> Permutation:
    """The column permutation applied where the two copies meet."""
    L = abs(lam)
    if L % 2 == 0:
        pairs = [[0, 2]]
    else:
        pairs = [[2 * i, 2 * i + 1] for i in range((L - 1) // 2)]
    needed = max((max(p) for p in pairs), default=-1) + 1
    if needed > width:
        raise DegenerateSolutionError(f"Cut for lambda = {lam} needs {needed} columns, cover has {width}")
    return Permutation(pairs, size=width)

def doubled_cut_data(solution: CyclicSolution, lam: int, cut_row: int) -> CutData:
    """2k rows of c^(e_i) with the cut at advance rows cut_row and cut_row + k (0-based)."""
    k = solution.k
    width = solution.order
    cut = horizontal_cut(lam, width)
    return CutData(solution.sigmas() * 2, d=width, advance={cut_row: cut, cut_row + k: cut})

def doubled_cyclic_cover(solution: CyclicSolution, s: Slope, *, monodromy: Optional[TwistWord]=None) -> CoverRep:
    """The doubled, cut 2k-row cover for a cyclic solution.

       The cut goes on the advance leaving the last row of each copy, or failing
       that on the advance entering it. The first placement whose cover is
       connected, lifts the monodromy and lifts the surgery curve is returned;
       without an explicit monodromy, D_x^R D_y^(2k) stands in for it.
       Raises DegenerateSolutionError when neither placement works.
    """
    k = solution.k
    word = monodromy if monodromy is not None else representative_word(solution.R, 2 * k)
    for cut_row in (k - 1, k - 2):
        cd = doubled_cut_data(solution, s.lam, cut_row)
        try:
            rep = build_rep(cd)
        except DisconnectedCoverError as e:
            logger.debug(f"Cut after row {cut_row + 1} leaves {len(e.orbits)} components")
            continue
        tau = lifting_intertwiner(rep, word, s)
        if tau is not None:
            logger.debug(f"Doubled cover of degree {rep.degree} with cuts after rows {cut_row + 1} and {cut_row + k + 1}")
            return rep
        logger.debug(f"Cut after row {cut_row + 1}: no intertwiner lifts slope {s}")
    raise DegenerateSolutionError(f"No cut placement for {solution} lifts slope {s}")

def case3b_cover(R: int, s: Slope, *, monodromy: Optional[TwistWord]=None) -> CoverRep:
    """The six-row doubled cover with N = R mu - 3 lambda. Raises GuardViolation if the guard fails."""
    guard = check_hypothesis(CaseTag.CASE_3B, R, s)
    if not guard:
        raise GuardViolation(CaseTag.CASE_3B.value, guard.reason)
    return doubled_cyclic_cover(cyclic_solution(3, R, s), s, monodromy=monodromy)
