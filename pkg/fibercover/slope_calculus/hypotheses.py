# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
Slope guards for each cover construction, evaluated in exact rational arithmetic.

Write P = R*mu and l = lambda. A guard with a zero denominator is false and
flagged degenerate; nothing here divides by zero.
"""

from __future__ import annotations

from fractions import Fraction

from aenum import Enum as AEnum

from ..internal_types import *
from ..exceptions import FiberCoverError
from .slope import Slope

class CaseTag(AEnum):
    I = 'i'
    """m >= 6 even or m = 7: only |lambda| > 1."""

    II = 'ii'
    """m >= 5 odd, m != 7."""

    III = 'iii'
    """m = 4."""

    CASE_1 = '1'
    CASE_2A = '2a'
    CASE_2B = '2b'
    CASE_3A = '3a'
    CASE_3B = '3b'
    CASE_4A = '4a'
    CASE_4B = '4b'
    CASE_5A = '5a'
    CASE_5B = '5b'

class HypothesisResult:
    """The value of a guard, and whether it was forced false by a zero denominator."""
    holds: bool
    degenerate: bool
    reason: str

    def __init__(self, holds: bool, degenerate: bool=False, reason: str=''):
        self.holds = holds
        self.degenerate = degenerate
        self.reason = reason

    def __bool__(self) -> bool:
        return self.holds

    def __str__(self) -> str:
        flag = ", degenerate" if self.degenerate else ""
        return f"HypothesisResult({self.holds}{flag}: {self.reason})"

    def __repr__(self) -> str:
        return str(self)

class _Degenerate(Exception):
    pass

def _inv(value: int) -> Fraction:
    if value == 0:
        raise _Degenerate()
    return Fraction(1, abs(value))

def reciprocal_sum_below(denominators: Sequence[int], bound: Union[int, Fraction]=1) -> HypothesisResult:
    """Is sum(1/|d|) < bound? False and degenerate if any d is 0."""
    try:
        total = sum((_inv(d) for d in denominators), Fraction(0))
    except _Degenerate:
        return HypothesisResult(False, True, f"zero denominator among {list(denominators)}")
    holds = total < bound
    return HypothesisResult(holds, False, f"sum 1/|d| over {list(denominators)} = {total} {'<' if holds else '>='} {bound}")

def _triangle_sum(counts: Sequence[Tuple[int, int]], bound: Union[int, Fraction]=1) -> HypothesisResult:
    """sum(k/|d|) < bound for (k, d) pairs."""
    dens: List[int] = []
    for k, d in counts:
        dens.extend([d] * k)
    return reciprocal_sum_below(dens, bound)

def pell_bound_values(R: int, s: Slope) -> Tuple[int, int]:
    """|(P - 2l)^2 - 2l^2| for both orientations of the longitude."""
    P = R * s.mu
    l = s.lam
    return abs((P - 2 * l) ** 2 - 2 * l * l), abs((P + 2 * l) ** 2 - 2 * l * l)

def case5b_abelian_order(R: int, s: Slope) -> int:
    """|(P - l)^2 - P l|, the order of the abelian factor in the 5b construction."""
    P = R * s.mu
    l = s.lam
    return abs((P - l) ** 2 - P * l)

def check_hypothesis(case_tag: Union[CaseTag, str], R: int, s: Slope, *, m: Optional[int]=None) -> HypothesisResult:
    """Evaluate the guard named by case_tag for the bundle invariant R and slope s.

       m is the cover row count, only consulted for case 4b (default 8).
    """
    tag = case_tag if isinstance(case_tag, CaseTag) else CaseTag(case_tag)
    P = R * s.mu
    l = s.lam

    if tag is CaseTag.I:
        return HypothesisResult(abs(l) > 1, False, f"|lambda| = {abs(l)}")
    if tag in (CaseTag.II, CaseTag.CASE_2A, CaseTag.CASE_2B):
        return _triangle_sum([(1, P - l), (1, P - 2 * l), (1, l)])
    if tag in (CaseTag.III, CaseTag.CASE_1, CaseTag.CASE_4A):
        return _triangle_sum([(2, P - 2 * l), (1, l)])
    if tag is CaseTag.CASE_3A:
        return _triangle_sum([(2, P - l), (1, l)])
    if tag is CaseTag.CASE_3B:
        N = P - 3 * l
        if l == 0 or N == 0:
            return HypothesisResult(False, True, f"lambda = {l}, R mu - 3 lambda = {N}")
        if abs(l) > 2 and abs(N) >= abs(l):
            return HypothesisResult(True, False, f"|lambda| = {abs(l)} > 2 and |N| = {abs(N)} >= |lambda|")
        if l % 2 == 0 and abs(N) >= 4:
            return HypothesisResult(True, False, f"lambda = {l} even and |N| = {abs(N)} >= 4")
        return HypothesisResult(False, False, f"lambda = {l}, |R mu - 3 lambda| = {abs(N)}")
    if tag is CaseTag.CASE_4B:
        from ..quotient_factory.cyclic import cyclic_modulus
        rows = 8 if m is None else m
        if rows % 2 != 0 or rows < 6:
            raise FiberCoverError(f"Case 4b needs an even row count >= 6, got {rows}")
        N = cyclic_modulus(rows // 2, R, s)
        if N == 0:
            return HypothesisResult(False, True, "cyclic modulus is 0")
        holds = abs(l) > 2 and abs(N) >= abs(l)
        return HypothesisResult(holds, False, f"|lambda| = {abs(l)}, |N| = {abs(N)} for k = {rows // 2}")
    if tag is CaseTag.CASE_5A:
        if abs(l) <= 1:
            return HypothesisResult(False, False, f"|lambda| = {abs(l)} <= 1")
        ineq = _triangle_sum([(1, P - l), (1, l)], Fraction(2, 3))
        if not ineq:
            return ineq
        lo = min(pell_bound_values(R, s))
        if lo <= 2 * abs(R):
            return HypothesisResult(False, False, f"min |(R mu -+ 2 lambda)^2 - 2 lambda^2| = {lo} <= 2|R| = {2 * abs(R)}")
        return HypothesisResult(True, False, f"{ineq.reason}; Pell bound {lo} > {2 * abs(R)}")
    if tag is CaseTag.CASE_5B:
        if abs(l) <= 1:
            return HypothesisResult(False, False, f"|lambda| = {abs(l)} <= 1")
        ineq = _triangle_sum([(1, P - 2 * l), (1, l)], Fraction(2, 3))
        if not ineq:
            return ineq
        order = case5b_abelian_order(R, s)
        if order <= 2 * abs(R):
            return HypothesisResult(False, False, f"|(R mu - lambda)^2 - R mu lambda| = {order} <= 2|R| = {2 * abs(R)}")
        return HypothesisResult(True, False, f"{ineq.reason}; abelian order {order} > {2 * abs(R)}")
    raise FiberCoverError(f"Unknown case tag {case_tag!r}")

def hypothesis_check(case_tag: Union[CaseTag, str], R: int, s: Slope, *, m: Optional[int]=None) -> bool:
    """True iff the guard for case_tag holds. See check_hypothesis for the degenerate flag."""
    return check_hypothesis(case_tag, R, s, m=m).holds
