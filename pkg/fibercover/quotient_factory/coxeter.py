# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
Quotients of the Coxeter-type groups presented by case plans with free
generators.
"""

from __future__ import annotations

from ..internal_types import *
from ..constants import DEFAULT_DEGREE_CAP, DEFAULT_NODE_BUDGET
from ..exceptions import PreconditionError, SearchBudgetExhausted
from ..pkg_logging import logger
from .plan import CasePlan, Realization
from .triangle import iter_triangle_witnesses
from .witness import QuotientWitness, QuotientSearch

def iter_coxeter_witnesses(
        plan: CasePlan,
        degree_cap: int=DEFAULT_DEGREE_CAP,
        *,
        node_budget: int=DEFAULT_NODE_BUDGET
      ) -> Iterator[QuotientWitness]:
    """Witnesses for the plan's presentation with its declared orders exact.

       Two-generator plans go through the triangle search; the witnesses are
       re-labelled with the plan's generator names and checked against all of its
       relations.
    """
    if plan.realization in (Realization.CYCLIC, Realization.ASSEMBLY):
        raise PreconditionError(f"Case {plan.case_tag.value} is not realized by a Coxeter quotient")
    if plan.num_generators == 2:
        for t in iter_triangle_witnesses(*plan.triangle(), degree_cap, node_budget=node_budget):
            witness = QuotientWitness(t.images, plan.orders, names=plan.names)
            if witness.satisfies(plan.relations) and witness.orders_exact():
                yield witness
            else:
                logger.debug(f"Triangle witness of degree {t.degree} does not satisfy {plan}")
        return
    search = QuotientSearch(plan.presentation(), plan.orders, degree_cap=degree_cap, node_budget=node_budget)
    for witness in search:
        logger.debug(f"Coxeter witness of degree {witness.degree} for {plan}")
        yield witness

def coxeter_quotient(
        plan: CasePlan,
        degree_cap: int=DEFAULT_DEGREE_CAP,
        *,
        node_budget: int=DEFAULT_NODE_BUDGET
      ) -> QuotientWitness:
    """The first witness for the plan, or SearchBudgetExhausted."""
    for witness in iter_coxeter_witnesses(plan, degree_cap, node_budget=node_budget):
        return witness
    raise SearchBudgetExhausted(
        f"No quotient for {plan} within degree {degree_cap}",
        dict(degree_cap=degree_cap, node_budget=node_budget, case=plan.case_tag.value)
      )
