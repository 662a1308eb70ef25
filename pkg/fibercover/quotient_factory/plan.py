# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
Case plans: which cover template applies to a bundle and a filling slope.

A plan fixes the row count m (a divisor of n), writes each cut permutation
sigma_i as a word in a few free generators, and collects the relations that
condition III imposes on those generators. Conditions I and II must then hold
for the template identically, which is checked on the free words before a
plan is handed out.
"""

from __future__ import annotations

from math import gcd

from aenum import Enum as AEnum
from sympy.combinatorics import Permutation

from ..internal_types import *
from ..exceptions import FiberCoverError, DegenerateSolutionError, NoApplicableCase
from ..pkg_logging import logger
from ..word_algebra import FreeWord, TwistWord, TwistGen, BundleInvariants
from ..slope_calculus import Slope, CaseTag, HypothesisResult, check_hypothesis
from ..cover_engine import CutData
from ..homology_engine import GroupPresentation
from .cyclic import CyclicSolution, cyclic_solution
from .witness import OrderSpec, evaluate_word, format_word

class Realization(AEnum):
    """How the generators of a plan are turned into permutations."""

    TRIANGLE = 'triangle'
    """Two generators; a triangle group quotient."""

    COXETER = 'coxeter'
    """Several generators; a quotient of the plan's presentation."""

    CYCLIC = 'cyclic'
    """Powers of one cycle, doubled and cut horizontally."""

    ASSEMBLY = 'assembly'
    """A triangle quotient times an abelian group, with one central generator."""

_REALIZATIONS: Dict[CaseTag, Realization] = {
    CaseTag.CASE_1: Realization.TRIANGLE,
    CaseTag.CASE_2A: Realization.TRIANGLE,
    CaseTag.CASE_3A: Realization.TRIANGLE,
    CaseTag.CASE_2B: Realization.COXETER,
    CaseTag.CASE_4A: Realization.COXETER,
    CaseTag.CASE_3B: Realization.CYCLIC,
    CaseTag.CASE_4B: Realization.CYCLIC,
    CaseTag.CASE_5A: Realization.ASSEMBLY,
    CaseTag.CASE_5B: Realization.ASSEMBLY,
  }

def _g(index: int) -> FreeWord:
    return FreeWord.generator(index)

_ONE = FreeWord.identity()

def commutator(u: FreeWord, v: FreeWord) -> FreeWord:
    return u * v * u.inverse() * v.inverse()

def _template(tag: CaseTag, m: int) -> Tuple[List[FreeWord], List[str], List[FreeWord], Tuple[int, ...]]:
    """(rows, generator names, extra relations, central generators) for a non-cyclic case."""
    a = _g(1)
    if tag is CaseTag.CASE_1:
        b = _g(2)
        return [a, a.inverse(), b, b.inverse()], ['a', 'b'], [], ()
    if tag is CaseTag.CASE_2A:
        c = _g(2)
        return [a, _ONE, a.inverse(), c, c.inverse()], ['a', 'c'], [], ()
    if tag is CaseTag.CASE_3A:
        c = _g(2)
        return [a, _ONE, a.inverse(), c, _ONE, c.inverse()], ['a', 'c'], [], ()
    if tag in (CaseTag.CASE_2B, CaseTag.CASE_4A):
        k = m // 2
        b = _g(2)
        rows = [a, a.inverse(), b]
        if tag is CaseTag.CASE_2B:
            rows.append(_ONE)
        rows += [b.inverse(), a, a.inverse()]
        names = ['a', 'b']
        for i in range(4, k + 1):
            ci = _g(len(names) + 1)
            names.append(f"c{i}")
            rows += [ci, ci.inverse()]
        return rows, names, [], ()
    if tag is CaseTag.CASE_5A:
        c = _g(2)
        e = _g(3)
        rows = [a, _ONE, a.inverse(), c, e, e.inverse(), c.inverse()]
        return rows, ['a', 'c', 'e'], [commutator(c, e), commutator(a, e)], (3,)
    if tag is CaseTag.CASE_5B:
        b = _g(2)
        f = _g(3)
        rows = [a, b, _ONE, b.inverse(), a.inverse(), f, f.inverse()]
        return rows, ['a', 'b', 'f'], [commutator(a, b), commutator(b, f)], (2,)
    raise FiberCoverError(f"Case {tag.value} has no free-generator template")

def condition_I_II_words(rows: Sequence[FreeWord]) -> List[FreeWord]:
    """[sigma_i, sigma_1 ... sigma_(i-1)] for every row, then the full product."""
    words: List[FreeWord] = []
    prefix = _ONE
    for sigma in rows:
        words.append(commutator(sigma, prefix))
        prefix = prefix * sigma
    words.append(prefix)
    return words

def condition_III_words(rows: Sequence[FreeWord], R: int, s: Slope) -> List[FreeWord]:
    """(sigma_1 ... sigma_i)^(R mu) (sigma_(i+1) sigma_i^-1)^lambda, freely reduced, without repeats."""
    P = R * s.mu
    n = len(rows)
    words: List[FreeWord] = []
    prefix = _ONE
    for i in range(n):
        prefix = prefix * rows[i]
        step = rows[(i + 1) % n] * rows[i].inverse()
        w = prefix ** P * step ** s.lam
        if not w.is_identity() and w not in words:
            words.append(w)
    return words

def _rotations(letters: LetterWord) -> Set[LetterWord]:
    return {letters[i:] + letters[:i] for i in range(len(letters))}

def _period(letters: LetterWord) -> Tuple[LetterWord, int]:
    """The shortest u with letters = u^k."""
    n = len(letters)
    for size in range(1, n + 1):
        if n % size == 0 and letters[:size] * (n // size) == letters:
            return letters[:size], n // size
    return letters, 1

def _canonical_base(u: LetterWord) -> LetterWord:
    """A fixed representative of u up to rotation and inversion."""
    inverse = tuple(-a for a in reversed(u))
    return min(_rotations(u) | _rotations(inverse), key=lambda w: (sum(1 for a in w if a < 0), w))

def declared_order(orders: Iterable[OrderSpec], word: FreeWord) -> Optional[int]:
    """The order declared for a word of length <= 2, up to rotation and inversion."""
    if len(word) == 0:
        return 1
    base = _canonical_base(word.letters)
    for w, k in orders:
        if w.letters == base:
            return k
    return None

def representative_word(R: int, rows: int) -> TwistWord:
    """D_x^R D_y^rows, the simplest monodromy with invariants R and n = rows."""
    return TwistWord([(TwistGen.X, R), (TwistGen.Y, rows)])

def order_specs(relations: Iterable[FreeWord]) -> List[OrderSpec]:
    """Orders forced by relators that are powers of a word of length <= 2.

       Powers of the same base (up to rotation and inversion) combine by gcd.
    """
    found: Dict[LetterWord, int] = {}
    for r in relations:
        _, core = r.cyclic_reduction()
        if core.is_identity():
            continue
        u, k = _period(core.letters)
        if len(u) > 2:
            continue
        base = _canonical_base(u)
        found[base] = gcd(found.get(base, 0), k)
    return [(FreeWord(base), k) for base, k in sorted(found.items(), key=lambda item: (len(item[0]), item[0]))]

def _trivial_modulo(word: FreeWord, relations: Sequence[FreeWord], orders: Sequence[OrderSpec]) -> bool:
    """Is word trivial because of a single relation: identity, a cyclic conjugate of a
       relation or its inverse, or a power of one generator covered by a declared order?
    """
    _, core = word.cyclic_reduction()
    if core.is_identity():
        return True
    rotations = _rotations(core.letters)
    for r in relations:
        _, rc = r.cyclic_reduction()
        if rc.letters in rotations or rc.inverse().letters in rotations:
            return True
    gens = {abs(a) for a in core.letters}
    if len(gens) == 1:
        g = gens.pop()
        power = abs(sum(1 if a > 0 else -1 for a in core.letters))
        for w, k in orders:
            if w.letters == (g,) and k > 0 and power % k == 0:
                return True
    return False

class CasePlan:
    """A cover template for one case: rows as words in free generators, and the relations they must satisfy."""

    case_tag: CaseTag
    m: int
    """Number of cover rows; a divisor of n."""

    R: int
    slope: Slope
    """The slope the cover is built for (after the swap, if any)."""

    swapped: bool
    """True when the plan uses the swapped invariants of the bundle."""

    word: TwistWord
    """The monodromy the cover lifts; the swapped word for swapped plans."""

    names: Tuple[str, ...]
    template: Tuple[FreeWord, ...]
    """template[i] is sigma_(i+1) as a word in the generators."""

    relations: Tuple[FreeWord, ...]
    orders: Tuple[OrderSpec, ...]
    realization: Realization
    guard: HypothesisResult

    central: Tuple[int, ...]
    """1-based generators assumed central (Case 5 only)."""

    cyclic: Optional[CyclicSolution]

    def __init__(
            self,
            case_tag: CaseTag,
            m: int,
            R: int,
            slope: Slope,
            *,
            word: TwistWord,
            template: Sequence[FreeWord],
            names: Sequence[str],
            relations: Sequence[FreeWord],
            guard: HypothesisResult,
            swapped: bool=False,
            central: Sequence[int]=(),
            cyclic: Optional[CyclicSolution]=None
          ):
        self.case_tag = case_tag
        self.m = m
        self.R = R
        self.slope = slope
        self.word = word
        self.template = tuple(template)
        self.names = tuple(names)
        self.relations = tuple(relations)
        self.orders = tuple(order_specs(self.relations))
        self.realization = _REALIZATIONS[case_tag]
        self.guard = guard
        self.swapped = swapped
        self.central = tuple(central)
        self.cyclic = cyclic

    @property
    def num_generators(self) -> int:
        return len(self.names)

    def presentation(self) -> GroupPresentation:
        return GroupPresentation(self.num_generators, self.relations, names=self.names)

    def order_of(self, word: FreeWord) -> Optional[int]:
        """The declared order of a word of length <= 2, if the relations force one."""
        return declared_order(self.orders, word)

    def triangle(self) -> Tuple[int, int, int]:
        """(order a, order b, order ab) for a two-generator plan."""
        if self.num_generators != 2:
            raise FiberCoverError(f"Case {self.case_tag.value} has {self.num_generators} generators, not 2")
        result: List[int] = []
        for w in (_g(1), _g(2), _g(1) * _g(2)):
            k = self.order_of(w)
            if k is None:
                raise FiberCoverError(f"Case {self.case_tag.value} relations do not fix the order of {format_word(w, self.names)}")
            result.append(k)
        return result[0], result[1], result[2]

    def check_template(self) -> bool:
        """Conditions I and II hold for the template modulo the relations."""
        return all(_trivial_modulo(w, self.relations, self.orders) for w in condition_I_II_words(self.template))

    def sigmas(self, images: Sequence[Permutation], degree: Optional[int]=None) -> List[Permutation]:
        return [evaluate_word(images, t, degree) for t in self.template]

    def cut_data(self, images: Sequence[Permutation], degree: Optional[int]=None) -> CutData:
        if degree is None:
            degree = max(p.size for p in images)
        return CutData(self.sigmas(images, degree), d=degree)

    def to_jsonable(self) -> JsonableDict:
        result: JsonableDict = dict(
            case=self.case_tag.value,
            m=self.m,
            R=self.R,
            slope=self.slope.to_jsonable(),
            swapped=self.swapped,
            word=str(self.word),
            realization=self.realization.value,
            generators=list(self.names),
            template=[format_word(t, self.names) for t in self.template],
            relations=[format_word(r, self.names) for r in self.relations],
            orders=[dict(word=format_word(w, self.names), order=k) for w, k in self.orders],
            guard=self.guard.reason,
          )
        if self.cyclic is not None:
            result['cyclic'] = self.cyclic.to_jsonable()
        return result

    def __str__(self) -> str:
        flag = ", swapped" if self.swapped else ""
        return f"CasePlan(case={self.case_tag.value}, m={self.m}, R={self.R}, slope={self.slope}{flag})"

    def __repr__(self) -> str:
        return str(self)

def cases_for_rows(m: int) -> List[CaseTag]:
    """The cases that build an m-row cover, in the order they are tried.

       On six rows the explicit cyclic cover of 3b comes before the quotient search of 3a.
    """
    if m == 4:
        return [CaseTag.CASE_1]
    if m == 5:
        return [CaseTag.CASE_2A]
    if m == 6:
        return [CaseTag.CASE_3B, CaseTag.CASE_3A]
    if m == 7:
        return [CaseTag.CASE_5A, CaseTag.CASE_5B]
    if m >= 8 and m % 2 == 0:
        return [CaseTag.CASE_4A, CaseTag.CASE_4B]
    if m >= 9:
        return [CaseTag.CASE_2B]
    return []

def build_plan(
        tag: CaseTag,
        m: int,
        R: int,
        s: Slope,
        *,
        word: TwistWord,
        guard: Optional[HypothesisResult]=None,
        swapped: bool=False
      ) -> CasePlan:
    """The plan for one case and row count, without consulting the guard.

       Raises DegenerateSolutionError when a cyclic case has modulus 0.
    """
    if tag not in cases_for_rows(m):
        raise FiberCoverError(f"Case {tag.value} does not build {m}-row covers")
    if guard is None:
        guard = check_hypothesis(tag, R, s, m=m)
    if _REALIZATIONS[tag] is Realization.CYCLIC:
        solution = cyclic_solution(m // 2, R, s)
        c = _g(1)
        template = [c ** e for e in solution.exponents] * 2
        relations = [c ** solution.order]
        plan = CasePlan(
            tag, m, R, s,
            word=word, template=template, names=['c'], relations=relations,
            guard=guard, swapped=swapped, cyclic=solution
          )
    else:
        rows, names, extra, central = _template(tag, m)
        relations = condition_III_words(rows, R, s) + [r for r in extra if not r.is_identity()]
        plan = CasePlan(
            tag, m, R, s,
            word=word, template=rows, names=names, relations=relations,
            guard=guard, swapped=swapped, central=central
          )
    if not plan.check_template():
        raise FiberCoverError(f"Template for case {tag.value} with m={m} fails conditions I and II")
    return plan

def plan_cover(inv: BundleInvariants, s: Slope, *, use_swapped: bool=True) -> CasePlan:
    """The first case whose guard holds, over divisors m >= 4 of n in increasing order.

       When the standard invariants give nothing, the swapped word D_x <-> D_y is
       tried with slope (mu, -lambda). Raises NoApplicableCase listing every
       failed guard.
    """
    failures: Dict[str, str] = {}
    variants: List[Tuple[bool, TwistWord, Slope]] = [(False, inv.word, s)]
    if use_swapped:
        variants.append((True, inv.word.swapped(), s.with_lambda_negated()))
    for swapped, word, slope in variants:
        label = 'swapped' if swapped else 'standard'
        try:
            R, n = inv.variant(swapped)
        except FiberCoverError as e:
            failures[label] = str(e)
            continue
        divisors = [m for m in range(4, n + 1) if n % m == 0]
        if len(divisors) == 0:
            failures[label] = f"n = {n} has no divisor m >= 4"
            continue
        for m in divisors:
            for tag in cases_for_rows(m):
                key = f"{label}:m={m}:{tag.value}"
                guard = check_hypothesis(tag, R, slope, m=m)
                if not guard:
                    failures[key] = guard.reason
                    continue
                try:
                    plan = build_plan(tag, m, R, slope, word=word, guard=guard, swapped=swapped)
                except DegenerateSolutionError as e:
                    failures[key] = str(e)
                    continue
                logger.debug(f"Planned {plan} for {inv.word}")
                return plan
    raise NoApplicableCase(failures)
