# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
Turning a case plan into concrete covers, each with a lift of the monodromy
along which the surgery curve closes.
"""

from __future__ import annotations

from itertools import islice

from ..internal_types import *
from ..constants import DEFAULT_DEGREE_CAP, DEFAULT_NODE_BUDGET, DEFAULT_WITNESS_ATTEMPTS, DEFAULT_GROUP_ORDER_CAP
from ..exceptions import DisconnectedCoverError, SearchBudgetExhausted
from ..pkg_logging import logger
from ..cover_engine import CoverRep, Intertwiner, build_rep, lifting_intertwiner
from .plan import CasePlan, Realization
from .witness import QuotientWitness
from .coxeter import iter_coxeter_witnesses
from .doubled import doubled_cyclic_cover
from .assembly import iter_assemblies

class CoverCandidate:
    """A cover built from a plan, and the intertwiner that lifts the monodromy and the slope."""

    plan: CasePlan
    rep: CoverRep
    tau: Intertwiner
    witness: Optional[QuotientWitness]
    """The quotient the cover was built from, in its regular representation."""

    def __init__(self, plan: CasePlan, rep: CoverRep, tau: Intertwiner, witness: Optional[QuotientWitness]=None):
        self.plan = plan
        self.rep = rep
        self.tau = tau
        self.witness = witness

    @property
    def degree(self) -> int:
        return self.rep.degree

    def to_jsonable(self) -> JsonableDict:
        result: JsonableDict = dict(degree=self.degree)
        if self.rep.cut_data is not None:
            result['cut_data'] = self.rep.cut_data.to_jsonable()
        if self.witness is not None:
            result['quotient'] = self.witness.to_jsonable()
            result['group_order'] = self.witness.degree
        if self.plan.cyclic is not None:
            result['cyclic'] = self.plan.cyclic.to_jsonable()
        return result

    def __str__(self) -> str:
        return f"CoverCandidate(case={self.plan.case_tag.value}, degree={self.degree})"

    def __repr__(self) -> str:
        return str(self)

def _raw_covers(
        plan: CasePlan,
        degree_cap: int,
        node_budget: int,
        group_order_cap: int
      ) -> Iterator[Tuple[CoverRep, Optional[QuotientWitness]]]:
    """Covers for the plan; quotient witnesses are replaced by their regular representations."""
    if plan.realization is Realization.CYCLIC:
        assert plan.cyclic is not None
        yield doubled_cyclic_cover(plan.cyclic, plan.slope, monodromy=plan.word), None
        return
    if plan.realization is Realization.ASSEMBLY:
        for cd in iter_assemblies(plan, degree_cap, node_budget=node_budget, group_order_cap=group_order_cap):
            yield build_rep(cd), None
        return
    seen: Set[Tuple[Tuple[int, ...], ...]] = set()
    for small in iter_coxeter_witnesses(plan, degree_cap, node_budget=node_budget):
        witness = small.regular(group_order_cap)
        if witness is None:
            continue
        # witnesses generating the same marked group have the same regular images
        key = tuple(tuple(p.array_form) for p in witness.images)
        if key in seen:
            continue
        seen.add(key)
        try:
            rep = build_rep(plan.cut_data(witness.images, witness.degree))
        except DisconnectedCoverError as e:
            logger.debug(f"Quotient of order {witness.degree} gives a cover with {len(e.orbits)} components")
            continue
        yield rep, witness

def realize_plan(
        plan: CasePlan,
        *,
        degree_cap: int=DEFAULT_DEGREE_CAP,
        node_budget: int=DEFAULT_NODE_BUDGET,
        attempts: int=DEFAULT_WITNESS_ATTEMPTS,
        group_order_cap: int=DEFAULT_GROUP_ORDER_CAP
      ) -> Iterator[CoverCandidate]:
    """Up to `attempts` covers for the plan, each validated intrinsically.

       Raises SearchBudgetExhausted if the searches end without a single valid cover.
    """
    produced = 0
    for rep, witness in islice(_raw_covers(plan, degree_cap, node_budget, group_order_cap), attempts):
        tau = lifting_intertwiner(rep, plan.word, plan.slope)
        if tau is None:
            logger.warning(f"Cover of degree {rep.degree} for {plan} does not lift slope {plan.slope}")
            continue
        produced += 1
        logger.debug(f"Cover of degree {rep.degree} for {plan}")
        yield CoverCandidate(plan, rep, tau, witness)
    if produced == 0:
        raise SearchBudgetExhausted(
            f"No valid cover for {plan} within degree {degree_cap} and group order {group_order_cap}",
            dict(degree_cap=degree_cap, node_budget=node_budget, attempts=attempts, group_order_cap=group_order_cap, case=plan.case_tag.value)
          )
