# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""Cover templates for each case: case plans, finite quotients with certified orders, cyclic and assembled covers."""

from .witness import (
    OrderSpec,
    QuotientWitness,
    QuotientSearch,
    evaluate_word,
    regular_images,
    format_word,
    find_quotient,
  )
from .cyclic import (
    CyclicSolution,
    cyclic_modulus,
    cyclic_congruences,
    cyclic_conditions_hold,
    cyclic_solution,
    solve_congruences,
  )
from .triangle import (
    triangle_presentation,
    triangle_orders,
    triangle_closed_form,
    iter_triangle_witnesses,
    triangle_quotient,
  )
from .plan import (
    Realization,
    CasePlan,
    build_plan,
    plan_cover,
    cases_for_rows,
    condition_I_II_words,
    condition_III_words,
    order_specs,
    declared_order,
    representative_word,
    commutator,
  )
from .coxeter import iter_coxeter_witnesses, coxeter_quotient
from .doubled import horizontal_cut, doubled_cut_data, doubled_cyclic_cover, case3b_cover
from .assembly import AbelianFactor, abelian_factor, assembly_triangle, assemble, iter_assemblies, case5_assembly
from .realize import CoverCandidate, realize_plan
