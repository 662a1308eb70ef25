# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
Finite quotients of the triangle groups <a, b | a^p, b^q, (ab)^r> in which a,
b and ab keep their full orders.

Dihedral and spherical types have closed forms. Everything else is found by
the low-index search with increasing degree.
"""

from __future__ import annotations

from sympy.combinatorics import Permutation

from ..internal_types import *
from ..constants import DEFAULT_DEGREE_CAP, DEFAULT_NODE_BUDGET
from ..exceptions import PreconditionError, SearchBudgetExhausted
from ..pkg_logging import logger
from ..word_algebra import FreeWord
from ..homology_engine import GroupPresentation
from .witness import QuotientWitness, QuotientSearch, OrderSpec

A_WORD = FreeWord((1,))
B_WORD = FreeWord((2,))
AB_WORD = FreeWord((1, 2))

TRIANGLE_NAMES = ('a', 'b')

def triangle_presentation(p: int, q: int, r: int) -> GroupPresentation:
    return GroupPresentation(2, [A_WORD ** p, B_WORD ** q, AB_WORD ** r], names=TRIANGLE_NAMES)

def triangle_orders(p: int, q: int, r: int) -> List[OrderSpec]:
    return [(A_WORD, p), (B_WORD, q), (AB_WORD, r)]

def _dihedral(r: int) -> Tuple[Permutation, Permutation]:
    """Two reflections of an r-gon whose product is a rotation by one step."""
    if r == 2:
        return Permutation([1, 0, 3, 2]), Permutation([2, 3, 0, 1])
    a = Permutation([(-j) % r for j in range(r)])
    b = Permutation([(1 - j) % r for j in range(r)])
    return a, b

_SPHERICAL: Dict[Tuple[int, int, int], Callable[[], Tuple[Permutation, Permutation]]] = {
    # A4, S4 and A5 on 4, 4 and 5 points
    (2, 3, 3): lambda: (Permutation([[0, 1], [2, 3]]), Permutation([[0, 1, 2]], size=4)),
    (2, 3, 4): lambda: (Permutation([[0, 1]], size=4), Permutation([[1, 2, 3]])),
    (2, 3, 5): lambda: (Permutation([[0, 1], [2, 3]], size=5), Permutation([[0, 2, 4]])),
  }

def _arrangements(a: Permutation, b: Permutation) -> List[Tuple[Permutation, Permutation]]:
    """Generating pairs of the same group realizing every permutation of the three orders."""
    c = ~(a * b)
    return [(a, b), (b, a), (b, c), (c, b), (c, a), (a, c)]

def triangle_closed_form(p: int, q: int, r: int) -> Optional[QuotientWitness]:
    """A witness from a dihedral or spherical construction, or None if the type has none."""
    key = tuple(sorted((p, q, r)))
    pair: Optional[Tuple[Permutation, Permutation]] = None
    if key[0] == 2 and key[1] == 2:
        pair = _dihedral(key[2])
    elif key in _SPHERICAL:
        pair = _SPHERICAL[key]()
    if pair is None:
        return None
    for a, b in _arrangements(*pair):
        witness = QuotientWitness([a, b], triangle_orders(p, q, r), names=TRIANGLE_NAMES)
        if witness.orders_exact():
            return witness
    logger.warning(f"Closed form for triangle type {key} did not realize orders {(p, q, r)}")
    return None

def _check_orders(p: int, q: int, r: int) -> None:
    if min(p, q, r) < 2:
        raise PreconditionError(f"Triangle orders must all be >= 2, got {(p, q, r)}")

def iter_triangle_witnesses(
        p: int,
        q: int,
        r: int,
        degree_cap: int=DEFAULT_DEGREE_CAP,
        *,
        node_budget: int=DEFAULT_NODE_BUDGET
      ) -> Iterator[QuotientWitness]:
    """Successive witnesses: the closed form if there is one, then search results by degree."""
    _check_orders(p, q, r)
    closed = triangle_closed_form(p, q, r)
    if closed is not None and closed.degree <= degree_cap:
        yield closed
    search = QuotientSearch(
        triangle_presentation(p, q, r),
        triangle_orders(p, q, r),
        degree_cap=degree_cap,
        node_budget=node_budget
      )
    for witness in search:
        if closed is not None and witness == closed:
            continue
        yield witness

def triangle_quotient(
        p: int,
        q: int,
        r: int,
        degree_cap: int=DEFAULT_DEGREE_CAP,
        *,
        node_budget: int=DEFAULT_NODE_BUDGET
      ) -> QuotientWitness:
    """Permutations a, b with order(a) = p, order(b) = q, order(ab) = r, transitive on
       at most degree_cap points.

       Raises SearchBudgetExhausted when none is found within the caps.
    """
    _check_orders(p, q, r)
    for witness in iter_triangle_witnesses(p, q, r, degree_cap, node_budget=node_budget):
        logger.debug(f"Triangle ({p}, {q}, {r}) witness of degree {witness.degree}")
        return witness
    raise SearchBudgetExhausted(
        f"No ({p}, {q}, {r}) triangle quotient within degree {degree_cap}",
        dict(degree_cap=degree_cap, node_budget=node_budget, triangle=[p, q, r])
      )
