# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
Cut data for covers of the punctured torus.

A cover of degree n*d is cut into n rows of d squares. Moving along x
permutes the squares of row i by sigma_i; moving along y advances to the
next row, optionally through a horizontal cut that permutes the columns.

Products of cut permutations are written with the left factor applied
first, which is sympy's Permutation product.
"""

from __future__ import annotations

from sympy.combinatorics import Permutation

from ..internal_types import *
from ..exceptions import FiberCoverError
from ..slope_calculus import Slope
from .permutations import perm_from_one_based, perm_to_one_based

class CutData:
    """Rows n, width d, one permutation of {0..d-1} per row, and optional horizontal cuts."""

    n: int
    """Number of rows."""

    d: int
    """Number of squares per row."""

    sigma: Tuple[Permutation, ...]
    """sigma[i] permutes the squares of row i (0-based rows)."""

    advance: Dict[int, Permutation]
    """Horizontal cuts: advance[i] permutes columns when stepping from row i to row i+1.
       Rows without an entry advance straight up."""

    def __init__(self, sigma: Sequence[Permutation], *, d: Optional[int]=None, advance: Optional[Mapping[int, Permutation]]=None):
        if len(sigma) < 1:
            raise FiberCoverError("CutData needs at least one row")
        if d is None:
            d = max(p.size for p in sigma)
        if d < 1:
            raise FiberCoverError("CutData width must be >= 1")
        self.n = len(sigma)
        self.d = d
        self.sigma = tuple(self._fit(p) for p in sigma)
        self.advance = {}
        if advance is not None:
            for row, cut in advance.items():
                if not 0 <= row < self.n:
                    raise FiberCoverError(f"Horizontal cut row {row} is out of range")
                self.advance[row] = self._fit(cut)

    def _fit(self, p: Permutation) -> Permutation:
        if p.size > self.d:
            raise FiberCoverError(f"Permutation of size {p.size} exceeds width {self.d}")
        if p.size < self.d:
            return Permutation(p.array_form, size=self.d)
        return p

    def identity(self) -> Permutation:
        return Permutation(list(range(self.d)))

    def prefix_product(self, i: int) -> Permutation:
        """sigma_1 sigma_2 ... sigma_i (1-based i; i = 0 gives the identity)."""
        result = self.identity()
        for p in self.sigma[:i]:
            result = result * p
        return result

    def degree(self) -> int:
        return self.n * self.d

    def to_jsonable(self) -> JsonableDict:
        """Permutations in 1-based one-line image notation."""
        result: JsonableDict = dict(
            n=self.n,
            d=self.d,
            sigma=[perm_to_one_based(p) for p in self.sigma],
          )
        if len(self.advance) > 0:
            result['advance'] = {str(row + 1): perm_to_one_based(p) for row, p in sorted(self.advance.items())}
        return result

    @classmethod
    def from_jsonable(cls, data: JsonableDict) -> CutData:
        try:
            sigma = [perm_from_one_based(cast(List[int], images)) for images in cast(List[Any], data['sigma'])]
            d = int(cast(int, data['d']))
            n = int(cast(int, data['n']))
        except (KeyError, TypeError, ValueError) as e:
            raise FiberCoverError(f"Malformed cut data: {e}") from e
        if len(sigma) != n:
            raise FiberCoverError(f"Cut data declares n={n} but has {len(sigma)} permutations")
        advance: Dict[int, Permutation] = {}
        raw_advance = data.get('advance')
        if raw_advance is not None:
            for row_str, images in cast(Dict[str, Any], raw_advance).items():
                advance[int(row_str) - 1] = perm_from_one_based(images)
        return cls(sigma, d=d, advance=advance)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CutData):
            return NotImplemented
        return self.to_jsonable() == other.to_jsonable()

    def __str__(self) -> str:
        return f"CutData(n={self.n}, d={self.d}, sigma={[perm_to_one_based(p) for p in self.sigma]})"

    def __repr__(self) -> str:
        return str(self)

def check_condition_I_II(c: CutData) -> Tuple[bool, bool]:
    """(I) sigma_i commutes with sigma_1 ... sigma_{i-1} for every i; (II) sigma_1 ... sigma_n = 1."""
    cond_i = True
    prefix = c.identity()
    for p in c.sigma:
        if p * prefix != prefix * p:
            cond_i = False
        prefix = prefix * p
    cond_ii = prefix.is_Identity
    return cond_i, cond_ii

def check_condition_III(c: CutData, R: int, s: Slope) -> bool:
    """(sigma_1 ... sigma_i)^(R mu) (sigma_{i+1} sigma_i^-1)^lambda = 1 for i = 1..n, indices mod n."""
    P = R * s.mu
    prefix = c.identity()
    for i in range(c.n):
        prefix = prefix * c.sigma[i]
        step = c.sigma[(i + 1) % c.n] * ~c.sigma[i]
        if not ((prefix ** P) * (step ** s.lam)).is_Identity:
            return False
    return True
