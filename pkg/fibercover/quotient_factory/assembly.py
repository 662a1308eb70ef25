# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
Seven-row covers from a triangle quotient and an abelian group.

Case 5 templates have three generators, one of which is central. Deleting it
leaves a triangle group; abelianizing all the relations leaves a finite
abelian group B. The generators act on (triangle points) x B, the central one
by translation only, and the orbit of the base point gives the cover width.
"""

from __future__ import annotations

from collections import deque

from sympy.combinatorics import Permutation

from ..internal_types import *
from ..constants import DEFAULT_DEGREE_CAP, DEFAULT_NODE_BUDGET, DEFAULT_GROUP_ORDER_CAP
from ..exceptions import (
    FiberCoverError,
    DegenerateSolutionError,
    GuardViolation,
    PreconditionError,
    SearchBudgetExhausted,
  )
from ..pkg_logging import logger
from ..word_algebra import FreeWord
from ..slope_calculus import Slope, CaseTag, check_hypothesis
from ..cover_engine import CutData, check_condition_I_II, check_condition_III
from ..homology_engine.snf import IntMatrix, smith_normal_form
from .plan import CasePlan, Realization, build_plan, declared_order, order_specs, representative_word
from .triangle import iter_triangle_witnesses
from .witness import QuotientWitness, regular_images

class AbelianFactor:
    """Z^g / (abelianized relations), keeping only the finite cyclic factors."""

    moduli: Tuple[int, ...]
    """Orders of the cyclic factors, each > 1."""

    vectors: Tuple[Tuple[int, ...], ...]
    """vectors[g - 1] is the image of generator g."""

    def __init__(self, moduli: Sequence[int], vectors: Sequence[Sequence[int]]):
        self.moduli = tuple(moduli)
        self.vectors = tuple(tuple(v % d for v, d in zip(vec, self.moduli)) for vec in vectors)

    @property
    def order(self) -> int:
        result = 1
        for d in self.moduli:
            result *= d
        return result

    def index(self, element: Sequence[int]) -> int:
        """Mixed-radix position of an element."""
        result = 0
        for v, d in zip(element, self.moduli):
            result = result * d + v % d
        return result

    def element(self, index: int) -> List[int]:
        out: List[int] = []
        for d in reversed(self.moduli):
            out.append(index % d)
            index //= d
        return list(reversed(out))

    def translate(self, index: int, generator: int) -> int:
        element = self.element(index)
        shift = self.vectors[generator - 1]
        return self.index([v + s for v, s in zip(element, shift)])

    def __str__(self) -> str:
        return f"AbelianFactor(moduli={list(self.moduli)})"

    def __repr__(self) -> str:
        return str(self)

def abelian_factor(relations: Sequence[FreeWord], num_generators: int) -> AbelianFactor:
    """The torsion of the abelianized presentation, with the image of each generator.

       With U M V = D, generator j maps to row j of V, coordinate i taken mod d_i.
    """
    rows = [r.abelianize(num_generators) for r in relations]
    if len(rows) == 0:
        return AbelianFactor([], [[] for _ in range(num_generators)])
    snf = smith_normal_form(IntMatrix(rows, ncols=num_generators), with_transforms=True)
    assert snf.right is not None
    keep = [i for i, d in enumerate(snf.diagonal) if d > 1]
    moduli = [snf.diagonal[i] for i in keep]
    vectors = [[snf.right.entries[j][i] for i in keep] for j in range(num_generators)]
    return AbelianFactor(moduli, vectors)

def _reduced_relations(plan: CasePlan) -> List[FreeWord]:
    """The plan's relations with the central generators deleted."""
    kill = {g: FreeWord.identity() for g in plan.central}
    reduced: List[FreeWord] = []
    for r in plan.relations:
        w = r.substitute(kill)
        if not w.is_identity() and w not in reduced:
            reduced.append(w)
    return reduced

def _free_pair(plan: CasePlan) -> Tuple[int, int]:
    free = [g for g in range(1, plan.num_generators + 1) if g not in plan.central]
    if len(free) != 2:
        raise PreconditionError(f"{plan} does not leave two non-central generators")
    return free[0], free[1]

def assembly_triangle(plan: CasePlan) -> Tuple[int, int, int]:
    """(order u, order v, order uv) for the non-central generators u < v, as forced
       by the relations with the central generator deleted.
    """
    u, v = _free_pair(plan)
    orders = order_specs(_reduced_relations(plan))
    result: List[int] = []
    for w in (FreeWord((u,)), FreeWord((v,)), FreeWord((u, v))):
        k = declared_order(orders, w)
        if k is None:
            raise DegenerateSolutionError(f"Relations of {plan} do not bound the order of {w}")
        result.append(k)
    return result[0], result[1], result[2]

def _orbit_images(arrays: Sequence[Sequence[int]], size: int) -> List[Permutation]:
    """The generators restricted to the orbit of point 0, relabelled 0.. in BFS order."""
    label = {0: 0}
    order = [0]
    queue = deque([0])
    while len(queue) > 0:
        p = queue.popleft()
        for arr in arrays:
            q = arr[p]
            if q not in label:
                label[q] = len(order)
                order.append(q)
                queue.append(q)
    return [Permutation([label[arr[p]] for p in order]) for arr in arrays]

def assemble(plan: CasePlan, triangle_images: Sequence[Permutation], factor: AbelianFactor) -> CutData:
    """Cut data for the plan from images of the two non-central generators and the abelian factor.

       The triangle images are used as given; iter_assemblies passes their regular representation.
    """
    u, v = _free_pair(plan)
    t = max(p.size for p in triangle_images)
    tri = {u: triangle_images[0], v: triangle_images[1]}
    order = factor.order
    size = t * order
    arrays: List[List[int]] = []
    for g in range(1, plan.num_generators + 1):
        perm = tri.get(g)
        moves = list(range(t)) if perm is None else Permutation(perm.array_form, size=t).array_form
        shifts = [factor.translate(b, g) for b in range(order)]
        arrays.append([moves[p // order] * order + shifts[p % order] for p in range(size)])
    images = _orbit_images(arrays, size)
    degree = images[0].size
    logger.debug(f"Assembled {plan.case_tag.value} cover width {degree} from triangle degree {t} and {factor}")
    return plan.cut_data(images, degree)

def iter_assemblies(
        plan: CasePlan,
        degree_cap: int=DEFAULT_DEGREE_CAP,
        *,
        node_budget: int=DEFAULT_NODE_BUDGET,
        group_order_cap: int=DEFAULT_GROUP_ORDER_CAP
      ) -> Iterator[CutData]:
    """Successive cut data for a Case 5 plan, one per triangle quotient, each
       triangle quotient acting on itself by right multiplication.

       A triangle part with an order below 2 is trivial, and only the abelian
       factor is used.
    """
    if plan.realization is not Realization.ASSEMBLY:
        raise PreconditionError(f"Case {plan.case_tag.value} is not an assembly case")
    factor = abelian_factor(plan.relations, plan.num_generators)
    p, q, r = assembly_triangle(plan)
    reduced = _reduced_relations(plan)
    u, v = _free_pair(plan)
    if min(p, q, r) < 2:
        logger.debug(f"Triangle part ({p}, {q}, {r}) of {plan} is trivial")
        witnesses: Iterable[Sequence[Permutation]] = [[Permutation([0]), Permutation([0])]]
    else:
        witnesses = (w.images for w in iter_triangle_witnesses(p, q, r, degree_cap, node_budget=node_budget))
    seen: Set[Tuple[Tuple[int, ...], ...]] = set()
    for pair in witnesses:
        # check the deleted-generator relations with the pair placed at u and v
        full = [Permutation([0])] * plan.num_generators
        full[u - 1], full[v - 1] = pair[0], pair[1]
        candidate = QuotientWitness(full)
        if not candidate.satisfies(reduced):
            logger.debug(f"Triangle witness of degree {candidate.degree} misses a relation of {plan}")
            continue
        regular = regular_images(pair, group_order_cap)
        if regular is None:
            continue
        key = tuple(tuple(img.array_form) for img in regular)
        if key in seen:
            continue
        seen.add(key)
        cd = assemble(plan, regular, factor)
        cond_i, cond_ii = check_condition_I_II(cd)
        if not (cond_i and cond_ii and check_condition_III(cd, plan.R, plan.slope)):
            raise FiberCoverError(f"Assembled cut data for {plan} fails conditions I-III")
        yield cd

def case5_assembly(
        variant: Union[CaseTag, str],
        R: int,
        s: Slope,
        degree_cap: int=DEFAULT_DEGREE_CAP,
        *,
        node_budget: int=DEFAULT_NODE_BUDGET,
        group_order_cap: int=DEFAULT_GROUP_ORDER_CAP
      ) -> CutData:
    """sigma_1 .. sigma_7 for Case 5a or 5b. Raises GuardViolation when the guard fails;
       a triangle search that runs out of budget raises SearchBudgetExhausted.
    """
    tag = variant if isinstance(variant, CaseTag) else CaseTag(variant)
    if tag not in (CaseTag.CASE_5A, CaseTag.CASE_5B):
        raise PreconditionError(f"Case 5 variant must be 5a or 5b, got {tag.value}")
    guard = check_hypothesis(tag, R, s, m=7)
    if not guard:
        raise GuardViolation(tag.value, guard.reason)
    plan = build_plan(tag, 7, R, s, word=representative_word(R, 7), guard=guard)
    for cd in iter_assemblies(plan, degree_cap, node_budget=node_budget, group_order_cap=group_order_cap):
        return cd
    raise SearchBudgetExhausted(
        f"No triangle witness completes {plan} within degree {degree_cap}",
        dict(degree_cap=degree_cap, node_budget=node_budget, group_order_cap=group_order_cap, triangle=list(assembly_triangle(plan)))
      )
