# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
Finitely presented groups, and the presentations of punctured-torus bundles
and their Dehn fillings.

Generators are numbered from 1; x = 1, y = 2 and the stable letter t = 3.
"""

from __future__ import annotations

from ..internal_types import *
from ..exceptions import FiberCoverError, PreconditionError
from ..constants import DEFAULT_MAX_RELATOR_LENGTH
from ..word_algebra import (
    FreeWord,
    TwistWord,
    TwistGen,
    twist_endo,
    boundary_conjugator,
    BOUNDARY_WORD,
    X,
    Y,
    T,
  )
from ..slope_calculus import Slope
from .snf import SparseRow, abelian_invariants

class GroupPresentation:
    """<g_1, ..., g_k | relators>."""

    num_generators: int
    relators: List[FreeWord]
    names: List[str]

    def __init__(self, num_generators: int, relators: Iterable[FreeWord], *, names: Optional[Sequence[str]]=None):
        self.num_generators = num_generators
        self.relators = [r for r in relators if not r.is_identity()]
        for r in self.relators:
            for a in r:
                if not 1 <= abs(a) <= num_generators:
                    raise FiberCoverError(f"Relator {r} uses a generator outside 1..{num_generators}")
        self.names = list(names) if names is not None else [f"g{i}" for i in range(1, num_generators + 1)]

    @classmethod
    def free(cls, rank: int) -> GroupPresentation:
        return cls(rank, [])

    def relation_rows(self) -> List[SparseRow]:
        """Abelianized relators, one sparse row per relator over 0-based generator columns."""
        rows: List[SparseRow] = []
        for r in self.relators:
            vec = r.abelianize(self.num_generators)
            rows.append({j: v for j, v in enumerate(vec) if v != 0})
        return rows

    def abelianization(self) -> Tuple[int, List[int]]:
        """(free rank, torsion factors) of the abelianization."""
        return abelian_invariants(self.relation_rows(), self.num_generators)

    def __str__(self) -> str:
        gens = ', '.join(self.names)
        rels = ', '.join(str(r) for r in self.relators)
        return f"<{gens} | {rels}>"

    def __repr__(self) -> str:
        return f"GroupPresentation({self.num_generators}, {len(self.relators)} relators)"

def image_length_bound(word: TwistWord) -> int:
    """An upper bound on the unreduced lengths of h(x) and h(y)."""
    lx, ly = 1, 1
    for gen, exponent in word.blocks:
        if gen is TwistGen.X:
            ly += abs(exponent) * lx
        else:
            lx += abs(exponent) * ly
    return max(lx, ly)

class MappingTorusPresentation(GroupPresentation):
    """pi_1 of the bundle with monodromy `word`, filled along `slope` when one is given.

       Relators are t g t^-1 h(g)^-1 for g in {x, y}, and for a filling
       alpha^mu beta^lambda with alpha = w^-1 t the meridian, where
       h(beta) = w beta w^-1. The explicit relators are only built when they
       are shorter than max_relator_length; the homology engine never needs
       them, since it rewrites the relators blockwise.
    """

    word: TwistWord
    slope: Optional[Slope]
    explicit: bool

    def __init__(self, word: TwistWord, slope: Optional[Slope]=None, *, max_relator_length: int=DEFAULT_MAX_RELATOR_LENGTH):
        self.word = word
        self.slope = slope
        bound = image_length_bound(word)
        self.explicit = bound <= max_relator_length
        relators: List[FreeWord] = []
        if self.explicit:
            e = twist_endo(word)
            relators.append(T * X * T.inverse() * e.x_image.inverse())
            relators.append(T * Y * T.inverse() * e.y_image.inverse())
            if slope is not None:
                relators.append(meridian_word(word) ** slope.mu * BOUNDARY_WORD ** slope.lam)
        super().__init__(3, relators, names=['x', 'y', 't'])

    def require_explicit(self) -> None:
        if not self.explicit:
            raise PreconditionError(
                f"Relators of {self.word.to_text()!r} exceed the configured length limit; use the blockwise homology path"
              )

    def __repr__(self) -> str:
        return f"MappingTorusPresentation({self.word.to_text()!r}, {self.slope})"

def meridian_word(word: TwistWord) -> FreeWord:
    """alpha = w^-1 t."""
    return boundary_conjugator(word).inverse() * T

def mapping_torus_presentation(
        word: TwistWord,
        s: Optional[Slope]=None,
        *,
        max_relator_length: int=DEFAULT_MAX_RELATOR_LENGTH
      ) -> MappingTorusPresentation:
    return MappingTorusPresentation(word, s, max_relator_length=max_relator_length)
