# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
Inequality-only slope scans: the candidate exceptions left over by the
figure-eight, (Dx Dy)^18 and -Dx Dy arguments, and the Pell family that
defeats the 5a non-degeneracy bound.
"""

from __future__ import annotations

from ..internal_types import *
from ..exceptions import FiberCoverError
from ..util import iter_coprime_pairs
from .slope import Slope
from .hypotheses import reciprocal_sum_below

def fig8_exception_scan(window: int, *, lambdas: Optional[Iterable[int]]=None) -> Set[Slope]:
    """Coprime odd (mu, lambda) in the window with |mu - lambda| >= 2, |mu + lambda| >= 2 and
       1/|mu + lambda| + 1/|2 lambda| + 1/|mu - lambda| >= 1.

       lambdas optionally restricts the lambda values examined.
    """
    if window < 5:
        raise FiberCoverError(f"fig8 scan window must be >= 5, got {window}")
    allowed = None if lambdas is None else set(lambdas)
    result: Set[Slope] = set()
    for mu, lam in iter_coprime_pairs(window):
        if allowed is not None and lam not in allowed:
            continue
        if mu % 2 == 0 or lam % 2 == 0:
            continue
        if abs(mu - lam) < 2 or abs(mu + lam) < 2:
            continue
        if not reciprocal_sum_below([mu + lam, 2 * lam, mu - lam]).holds:
            result.add(Slope(mu, lam))
    return result

def thm12_exception_scan(window: int) -> Set[Slope]:
    """Coprime slopes in the window failing both
       1/|6 mu - lambda| + 1/|6 mu + lambda| < 1 and
       1/|9 mu + lambda| + 1/|2 lambda| + 1/|9 mu - lambda| < 1."""
    if window < 2:
        raise FiberCoverError(f"scan window must be >= 2, got {window}")
    result: Set[Slope] = set()
    for mu, lam in iter_coprime_pairs(window):
        first = reciprocal_sum_below([6 * mu - lam, 6 * mu + lam])
        if first.holds:
            continue
        second = reciprocal_sum_below([9 * mu + lam, 2 * lam, 9 * mu - lam])
        if not second.holds:
            result.add(Slope(mu, lam))
    return result

def sister_exception_scan(window: int) -> Set[Slope]:
    """Coprime slopes in the window failing 1/|mu - lambda| + 1/|mu - 2 lambda| + 1/|lambda| < 1,
       the fillings of the -Dx Dy bundle not settled by the m = 5 construction."""
    if window < 1:
        raise FiberCoverError(f"scan window must be >= 1, got {window}")
    result: Set[Slope] = set()
    for mu, lam in iter_coprime_pairs(window):
        if not reciprocal_sum_below([mu - lam, mu - 2 * lam, lam]).holds:
            result.add(Slope(mu, lam))
    return result

def pell_family(count: int) -> List[Slope]:
    """The first `count` slopes with lambda > 0 and (mu + 2 lambda)^2 - 2 lambda^2 = 1."""
    if count < 1:
        raise FiberCoverError(f"count must be >= 1, got {count}")
    result: List[Slope] = []
    x, y = 3, 2
    while len(result) < count:
        result.append(Slope(x - 2 * y, y))
        x, y = 3 * x + 4 * y, 2 * x + 3 * y
    return result
