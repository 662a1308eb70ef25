# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
Reidemeister-Schreier presentations of point stabilizers of coset actions.
"""

from __future__ import annotations

from ..internal_types import *
from ..exceptions import RelatorActionError
from ..pkg_logging import logger
from ..word_algebra import FreeWord
from .coset_action import CosetAction, SchreierTransversal
from .presentation import GroupPresentation
from .snf import SparseRow, abelian_invariants

class SubgroupPresentation:
    """A presentation of the stabilizer of the basepoint coset.

       Generator i (1-based) is the Schreier generator transversal.edges[i - 1];
       relators are the ambient relators read from every coset and rewritten.
    """

    ambient: GroupPresentation
    action: CosetAction
    transversal: SchreierTransversal
    relators: List[FreeWord]

    def __init__(self, ambient: GroupPresentation, action: CosetAction, transversal: SchreierTransversal, relators: List[FreeWord]):
        self.ambient = ambient
        self.action = action
        self.transversal = transversal
        self.relators = relators

    @property
    def num_generators(self) -> int:
        return self.transversal.num_schreier_generators

    @property
    def index(self) -> int:
        return self.action.degree

    def generator_words(self) -> List[FreeWord]:
        """Each Schreier generator as a word in the ambient generators."""
        return [self.transversal.schreier_generator_word(i) for i in range(self.num_generators)]

    def relation_rows(self) -> List[SparseRow]:
        rows: List[SparseRow] = []
        for r in self.relators:
            vec = r.abelianize(self.num_generators)
            row = {j: v for j, v in enumerate(vec) if v != 0}
            if len(row) > 0:
                rows.append(row)
        return rows

    def abelianization(self) -> Tuple[int, List[int]]:
        """(b1, torsion) of the subgroup."""
        return abelian_invariants(self.relation_rows(), self.num_generators)

    def __str__(self) -> str:
        return f"SubgroupPresentation(index={self.index}, generators={self.num_generators}, relators={len(self.relators)})"

    def __repr__(self) -> str:
        return str(self)

def reidemeister_schreier(ambient: GroupPresentation, action: CosetAction) -> SubgroupPresentation:
    """Presentation of the basepoint stabilizer of a transitive action of `ambient`.

       Raises RelatorActionError if some relator does not act trivially.
    """
    if action.num_generators != ambient.num_generators:
        raise RelatorActionError(
            f"Action has {action.num_generators} generators but the group has {ambient.num_generators}"
          )
    transversal = SchreierTransversal(action)
    relators: List[FreeWord] = []
    for k, r in enumerate(ambient.relators):
        for s in range(action.degree):
            letters, end = transversal.rewrite(r, s)
            if end != s:
                raise RelatorActionError(f"Relator {k + 1} ({r}) does not close at coset {s + 1}")
            rewritten = FreeWord(letters)
            if not rewritten.is_identity():
                relators.append(rewritten)
    logger.debug(
        f"Reidemeister-Schreier at index {action.degree}: "
        f"{transversal.num_schreier_generators} generators, {len(relators)} relators"
      )
    return SubgroupPresentation(ambient, action, transversal, relators)
