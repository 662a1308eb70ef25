# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
Subgroups of small index in a finitely presented group, as transitive coset
actions.

Coset tables are built by backtracking over the first undefined entry in
row-major order, numbering new cosets in order of first appearance. A
complete table built this way is standardized, so each subgroup is produced
exactly once. Relators are scanned forwards and backwards from every coset
after each definition; a one-letter gap is filled by deduction and a
contradiction prunes the branch.
"""

from __future__ import annotations

from ..internal_types import *
from ..constants import DEFAULT_NODE_BUDGET
from ..exceptions import FiberCoverError
from ..pkg_logging import logger
from .coset_action import CosetAction
from .presentation import GroupPresentation

_UNDEFINED = -1

class LowIndexResult:
    """The actions found, and whether the search ran to completion within its budget."""

    actions: List[CosetAction]
    complete: bool
    nodes: int

    def __init__(self, actions: List[CosetAction], complete: bool, nodes: int):
        self.actions = actions
        self.complete = complete
        self.nodes = nodes

    def of_index(self, index: int) -> List[CosetAction]:
        return [a for a in self.actions if a.degree == index]

    def __len__(self) -> int:
        return len(self.actions)

    def __iter__(self) -> Iterator[CosetAction]:
        return iter(self.actions)

    def __str__(self) -> str:
        flag = "" if self.complete else ", partial"
        return f"LowIndexResult({len(self.actions)} actions, {self.nodes} nodes{flag})"

    def __repr__(self) -> str:
        return str(self)

class _Table:
    """A partial coset table: rows[c][col] with columns for g_1, g_1^-1, g_2, ..."""

    k: int
    max_index: int
    rows: List[List[int]]

    def __init__(self, k: int, max_index: int):
        self.k = k
        self.max_index = max_index
        self.rows = [[_UNDEFINED] * (2 * k)]

    @staticmethod
    def col(letter: Letter) -> int:
        return 2 * (abs(letter) - 1) + (0 if letter > 0 else 1)

    def get(self, c: int, letter: Letter) -> int:
        return self.rows[c][self.col(letter)]

    def copy(self) -> _Table:
        t = _Table.__new__(_Table)
        t.k = self.k
        t.max_index = self.max_index
        t.rows = [list(r) for r in self.rows]
        return t

    def define(self, c: int, letter: Letter, d: int) -> bool:
        """Set c . letter = d and d . letter^-1 = c; False on conflict."""
        cur = self.get(c, letter)
        back = self.get(d, -letter)
        if cur != _UNDEFINED and cur != d:
            return False
        if back != _UNDEFINED and back != c:
            return False
        self.rows[c][self.col(letter)] = d
        self.rows[d][self.col(-letter)] = c
        return True

    def first_undefined(self) -> Optional[Tuple[int, int]]:
        for c, row in enumerate(self.rows):
            for j, v in enumerate(row):
                if v == _UNDEFINED:
                    return c, j
        return None

    def scan(self, relators: Sequence[Sequence[Letter]]) -> bool:
        """Check and deduce along every relator from every coset until nothing changes."""
        changed = True
        while changed:
            changed = False
            for c in range(len(self.rows)):
                for r in relators:
                    status = self._scan_one(c, r)
                    if status is None:
                        return False
                    changed = changed or status
        return True

    def _scan_one(self, c: int, r: Sequence[Letter]) -> Optional[bool]:
        """None on contradiction, True if a deduction was made, False otherwise."""
        n = len(r)
        f = c
        i = 0
        while i < n:
            nxt = self.get(f, r[i])
            if nxt == _UNDEFINED:
                break
            f = nxt
            i += 1
        if i == n:
            return None if f != c else False
        b = c
        j = n
        while j > i:
            prv = self.get(b, -r[j - 1])
            if prv == _UNDEFINED:
                break
            b = prv
            j -= 1
        if j == i:
            return None if f != b else False
        if j == i + 1:
            if not self.define(f, r[i], b):
                return None
            return True
        return False

class LowIndexSearch:
    """A resumable depth-first search for transitive coset actions of index <= max_index.

       Iterating yields each action as its table closes. `nodes` counts the tables
       expanded so far and `complete` is False once the node budget has cut the
       search short.
    """

    presentation: GroupPresentation
    max_index: int
    node_budget: int
    nodes: int
    complete: bool

    def __init__(self, p: GroupPresentation, max_index: int, *, node_budget: int=DEFAULT_NODE_BUDGET):
        if max_index < 1:
            raise FiberCoverError(f"Maximum index must be >= 1, got {max_index}")
        self.presentation = p
        self.max_index = max_index
        self.node_budget = node_budget
        self.nodes = 0
        self.complete = True

    def __iter__(self) -> Iterator[CosetAction]:
        k = self.presentation.num_generators
        relators = [tuple(r) for r in self.presentation.relators]
        stack: List[_Table] = []
        root = _Table(k, self.max_index)
        if root.scan(relators):
            stack.append(root)
        while len(stack) > 0:
            if self.nodes >= self.node_budget:
                self.complete = False
                logger.debug(f"Low-index search hit its node budget of {self.node_budget}")
                return
            table = stack.pop()
            self.nodes += 1
            gap = table.first_undefined()
            if gap is None:
                yield _to_action(table)
                continue
            c, j = gap
            letter: Letter = (j // 2 + 1) * (1 if j % 2 == 0 else -1)
            children: List[_Table] = []
            for d in range(len(table.rows)):
                if table.get(d, -letter) != _UNDEFINED:
                    continue
                child = table.copy()
                if child.define(c, letter, d) and child.scan(relators):
                    children.append(child)
            if len(table.rows) < self.max_index:
                child = table.copy()
                child.rows.append([_UNDEFINED] * (2 * k))
                if child.define(c, letter, len(child.rows) - 1) and child.scan(relators):
                    children.append(child)
            # depth first, exploring existing cosets before new ones
            stack.extend(reversed(children))

def low_index_subgroups(
        p: GroupPresentation,
        max_index: int,
        *,
        node_budget: int=DEFAULT_NODE_BUDGET
      ) -> LowIndexResult:
    """All subgroups of index <= max_index, as transitive coset actions on cosets 0..index-1
       with the subgroup at coset 0, up to equivalence.

       When the node budget runs out the result is flagged incomplete.
    """
    search = LowIndexSearch(p, max_index, node_budget=node_budget)
    found = list(search)
    found.sort(key=lambda a: (a.degree, a.images))
    logger.debug(f"Low-index search to index {max_index}: {len(found)} subgroups in {search.nodes} nodes")
    return LowIndexResult(found, search.complete, search.nodes)

def _to_action(table: _Table) -> CosetAction:
    """Convert a complete right-action table into left-action arrays rho(g) = (. g^-1)."""
    images: List[List[int]] = []
    for g in range(1, table.k + 1):
        images.append([table.get(c, -g) for c in range(len(table.rows))])
    return CosetAction(images, basepoint=0)
