# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
The bundle invariants R (sum of x-twist exponents) and n (gcd of y-twist
exponents), together with the swapped pair obtained by exchanging the roles
of the two twists.
"""

from __future__ import annotations

from math import gcd
from functools import reduce

from ..internal_types import *
from ..exceptions import FiberCoverError
from .twist import TwistWord, TwistGen

class BundleInvariants:
    """R and n for a monodromy in alternating form, plus the swapped variant."""

    word: TwistWord
    """The cyclically normalized word the invariants were computed from."""

    r_exponents: Tuple[int, ...]
    s_exponents: Tuple[int, ...]

    R_sum: Optional[int]
    """Sum of the x-twist exponents; None when the standard variant is unavailable."""

    n_gcd: Optional[int]
    """gcd of the y-twist exponents; None when the standard variant is unavailable."""

    swapped_R: Optional[int]
    """Sum of the y-twist exponents; None when the swapped variant is unavailable."""

    swapped_n: Optional[int]
    """gcd of the x-twist exponents; None when the swapped variant is unavailable."""

    unavailable: Dict[str, str]
    """Reasons keyed by "standard" / "swapped" for each variant that cannot be formed."""

    def __init__(self, word: TwistWord):
        self.word = word.cyclically_normalized()
        self.r_exponents = tuple(self.word.exponents(TwistGen.X))
        self.s_exponents = tuple(self.word.exponents(TwistGen.Y))
        self.unavailable = {}
        if len(self.s_exponents) == 0:
            self.R_sum = None
            self.n_gcd = None
            self.unavailable['standard'] = "word has no D_y block, so n is undefined"
        else:
            self.R_sum = sum(self.r_exponents)
            self.n_gcd = reduce(gcd, self.s_exponents, 0)
        if len(self.r_exponents) == 0:
            self.swapped_R = None
            self.swapped_n = None
            self.unavailable['swapped'] = "word has no D_x block, so the swapped n is undefined"
        else:
            self.swapped_R = sum(self.s_exponents)
            self.swapped_n = reduce(gcd, self.r_exponents, 0)

    def variant(self, swapped: bool=False) -> Tuple[int, int]:
        """Return (R, n) for the requested variant, or raise FiberCoverError if unavailable."""
        if swapped:
            if self.swapped_R is None or self.swapped_n is None:
                raise FiberCoverError(self.unavailable['swapped'])
            return self.swapped_R, self.swapped_n
        if self.R_sum is None or self.n_gcd is None:
            raise FiberCoverError(self.unavailable['standard'])
        return self.R_sum, self.n_gcd

    def to_jsonable(self) -> JsonableDict:
        return dict(
            word=self.word.to_text(),
            R=self.R_sum,
            n=self.n_gcd,
            swapped_R=self.swapped_R,
            swapped_n=self.swapped_n,
          )

    def __str__(self) -> str:
        return f"BundleInvariants(R={self.R_sum}, n={self.n_gcd}, swapped_R={self.swapped_R}, swapped_n={self.swapped_n})"

    def __repr__(self) -> str:
        return str(self)

def bundle_invariants(word: TwistWord) -> BundleInvariants:
    return BundleInvariants(word)
