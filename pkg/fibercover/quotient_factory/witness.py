# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
Finite permutation quotients of finitely presented groups, with certified
element orders.

Words are evaluated with the left factor applied first, matching the cut
permutation convention: the image of g h is images[g] * images[h] in sympy.
"""

from __future__ import annotations

from sympy.combinatorics import Permutation, PermutationGroup

from ..internal_types import *
from ..constants import DEFAULT_DEGREE_CAP, DEFAULT_NODE_BUDGET
from ..exceptions import SearchBudgetExhausted, FiberCoverError
from ..pkg_logging import logger
from ..word_algebra import FreeWord
from ..cover_engine import invert_array, orbits_of_arrays, perm_to_one_based, perm_from_one_based
from ..homology_engine import GroupPresentation, LowIndexSearch

OrderSpec = Tuple[FreeWord, int]
"""A word and the exact order its image must have."""

def format_word(word: Iterable[Letter], names: Sequence[str]) -> str:
    """Space-separated generator names, with "^-1" on inverse letters; "1" for the empty word."""
    parts: List[str] = []
    for a in word:
        name = names[abs(a) - 1] if abs(a) <= len(names) else f"g{abs(a)}"
        parts.append(name if a > 0 else f"{name}^-1")
    return " ".join(parts) if len(parts) > 0 else "1"

def evaluate_word(images: Sequence[Permutation], word: Iterable[Letter], degree: Optional[int]=None) -> Permutation:
    if degree is None:
        degree = images[0].size
    result = Permutation(list(range(degree)))
    inverses: Dict[int, Permutation] = {}
    for a in word:
        g = abs(a) - 1
        if a > 0:
            result = result * images[g]
        else:
            if g not in inverses:
                inverses[g] = ~images[g]
            result = result * inverses[g]
    return result

def regular_images(images: Sequence[Permutation], order_cap: int) -> Optional[List[Permutation]]:
    """The group generated by `images` acting on its own elements by right
       multiplication, h -> h * g, with elements numbered in breadth-first order
       from the identity. None when the group has more than order_cap elements.

       The map g -> (h -> h * g) is a faithful homomorphism for the sympy product,
       so every relation and element order of the images is preserved.
    """
    degree = max(p.size for p in images)
    gens = [Permutation(p.array_form, size=degree) for p in images]
    order = int(PermutationGroup(gens).order())
    if order > order_cap:
        logger.debug(f"Quotient of order {order} exceeds the group order cap {order_cap}")
        return None
    arrays = [g.array_form for g in gens]
    identity = tuple(range(degree))
    elements: List[Tuple[int, ...]] = [identity]
    index: Dict[Tuple[int, ...], int] = {identity: 0}
    tables: List[List[int]] = [[] for _ in arrays]
    k = 0
    while k < len(elements):
        h = elements[k]
        for arr, table in zip(arrays, tables):
            # sympy h * g applies h first
            hg = tuple(arr[i] for i in h)
            j = index.get(hg)
            if j is None:
                j = len(elements)
                index[hg] = j
                elements.append(hg)
            table.append(j)
        k += 1
    assert len(elements) == order
    return [Permutation(table) for table in tables]

class QuotientWitness:
    """Permutation images of the generators of a presented group, with certified orders."""

    degree: int

    images: Tuple[Permutation, ...]
    """images[g - 1] is the image of generator g, acting on 0..degree-1."""

    orders: Tuple[OrderSpec, ...]
    """Each word's image has exactly the given order."""

    names: Tuple[str, ...]

    def __init__(
            self,
            images: Sequence[Permutation],
            orders: Sequence[OrderSpec]=(),
            *,
            names: Optional[Sequence[str]]=None
          ):
        if len(images) == 0:
            raise FiberCoverError("A quotient witness needs at least one generator")
        degree = max(p.size for p in images)
        self.degree = degree
        self.images = tuple(p if p.size == degree else Permutation(p.array_form, size=degree) for p in images)
        self.orders = tuple((FreeWord(w), int(k)) for w, k in orders)
        if names is None:
            names = tuple(f"g{i + 1}" for i in range(len(images)))
        self.names = tuple(names)

    @property
    def num_generators(self) -> int:
        return len(self.images)

    def evaluate(self, word: Iterable[Letter]) -> Permutation:
        return evaluate_word(self.images, word, self.degree)

    def order_of(self, word: Iterable[Letter]) -> int:
        return int(self.evaluate(word).order())

    def satisfies(self, relators: Iterable[FreeWord]) -> bool:
        return all(self.evaluate(r).is_Identity for r in relators)

    def orders_exact(self) -> bool:
        return all(self.order_of(w) == k for w, k in self.orders)

    def is_transitive(self) -> bool:
        arrays = [p.array_form for p in self.images]
        return len(orbits_of_arrays(arrays, self.degree)) == 1

    def group_order(self) -> int:
        return int(PermutationGroup(list(self.images)).order())

    def regular(self, order_cap: int) -> Optional[QuotientWitness]:
        """The same quotient in its regular representation, of degree |H|, or None
           when |H| exceeds order_cap."""
        images = regular_images(self.images, order_cap)
        if images is None:
            return None
        return QuotientWitness(images, self.orders, names=self.names)

    def to_jsonable(self) -> JsonableDict:
        return dict(
            degree=self.degree,
            generators=list(self.names),
            images=[perm_to_one_based(p) for p in self.images],
            orders=[dict(word=format_word(w, self.names), letters=list(w.letters), order=k) for w, k in self.orders],
          )

    @classmethod
    def from_jsonable(cls, data: JsonableDict) -> QuotientWitness:
        try:
            images = [perm_from_one_based(cast(List[int], im)) for im in cast(List[Any], data['images'])]
            orders = [
                (FreeWord(cast(List[int], o['letters'])), int(cast(int, o['order'])))
                for o in cast(List[Dict[str, Any]], data.get('orders', []))
              ]
            names = cast(Optional[List[str]], data.get('generators'))
        except (KeyError, TypeError, ValueError) as e:
            raise FiberCoverError(f"Malformed quotient witness: {e}") from e
        return cls(images, orders, names=names)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuotientWitness):
            return NotImplemented
        return self.images == other.images and self.orders == other.orders

    def __str__(self) -> str:
        return f"QuotientWitness(degree={self.degree}, orders={[k for _, k in self.orders]})"

    def __repr__(self) -> str:
        return str(self)

def _stage_caps(start: int, degree_cap: int) -> List[int]:
    caps: List[int] = []
    d = max(1, min(start, degree_cap))
    while d < degree_cap:
        caps.append(d)
        d *= 2
    caps.append(degree_cap)
    return caps

class QuotientSearch:
    """Transitive permutation representations of a presentation with the required exact orders.

       Runs low-index searches with a growing index bound, so small witnesses come
       first. All stages share one node budget. After iteration, `exhausted` tells
       whether the search ran out of budget before covering every index up to the cap.
    """

    presentation: GroupPresentation
    orders: Tuple[OrderSpec, ...]
    degree_cap: int
    node_budget: int
    nodes: int
    exhausted: bool

    def __init__(
            self,
            presentation: GroupPresentation,
            orders: Sequence[OrderSpec],
            *,
            degree_cap: int=DEFAULT_DEGREE_CAP,
            node_budget: int=DEFAULT_NODE_BUDGET
          ):
        self.presentation = presentation
        self.orders = tuple(orders)
        self.degree_cap = degree_cap
        self.node_budget = node_budget
        self.nodes = 0
        self.exhausted = False

    def caps(self) -> Dict[str, Any]:
        return dict(degree_cap=self.degree_cap, node_budget=self.node_budget, nodes=self.nodes)

    def __iter__(self) -> Iterator[QuotientWitness]:
        start = max([4] + [k for _, k in self.orders])
        seen: Set[Tuple[Tuple[int, ...], ...]] = set()
        for cap in _stage_caps(start, self.degree_cap):
            search = LowIndexSearch(self.presentation, cap, node_budget=self.node_budget - self.nodes)
            for action in search:
                key = tuple(tuple(img) for img in action.images)
                if key in seen:
                    continue
                seen.add(key)
                # the coset table is a right action; rho(g) = (. g^-1) inverts it
                images = [Permutation(invert_array(img)) for img in action.images]
                witness = QuotientWitness(images, self.orders, names=self.presentation.names)
                if witness.orders_exact():
                    logger.debug(f"Quotient witness of degree {witness.degree} after {self.nodes + search.nodes} nodes")
                    yield witness
            self.nodes += search.nodes
            if not search.complete:
                self.exhausted = True
                return

def find_quotient(
        presentation: GroupPresentation,
        orders: Sequence[OrderSpec],
        *,
        degree_cap: int=DEFAULT_DEGREE_CAP,
        node_budget: int=DEFAULT_NODE_BUDGET
      ) -> QuotientWitness:
    """The first witness found, or SearchBudgetExhausted carrying the caps."""
    search = QuotientSearch(presentation, orders, degree_cap=degree_cap, node_budget=node_budget)
    for witness in search:
        return witness
    reason = "node budget" if search.exhausted else "degree cap"
    raise SearchBudgetExhausted(
        f"No quotient with the required orders {[k for _, k in orders]} within the {reason}",
        search.caps()
      )
