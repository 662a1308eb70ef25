# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
Transitive actions of a finitely generated group on cosets, Schreier
transversals, and abelianized rewriting of words into Schreier generators.

A CosetAction stores the left action arrays rho(g) used throughout the
package. Rewriting uses the coset table, which is the right action
s . g = rho(g)^-1 (s); both describe the same point stabilizer.
"""

from __future__ import annotations

from collections import deque

from ..internal_types import *
from ..exceptions import FiberCoverError, DisconnectedCoverError
from ..cover_engine import CoverRep, Intertwiner, invert_array, orbits_of_arrays, word_array
from ..word_algebra import FreeWord

class CosetAction:
    """rho(g) for generators g = 1..k, as 0-based left action arrays, with a basepoint coset."""

    degree: int
    images: List[List[int]]
    """images[g - 1] is rho(g)."""

    basepoint: int

    def __init__(self, images: Sequence[Sequence[int]], *, basepoint: int=0, check_transitive: bool=True):
        if len(images) == 0:
            raise FiberCoverError("A coset action needs at least one generator")
        self.degree = len(images[0])
        self.images = [list(img) for img in images]
        for g, img in enumerate(self.images, start=1):
            if sorted(img) != list(range(self.degree)):
                raise FiberCoverError(f"Image of generator {g} is not a permutation of degree {self.degree}")
        self.basepoint = basepoint
        if check_transitive:
            orbits = orbits_of_arrays(self.images, self.degree)
            if len(orbits) > 1:
                raise DisconnectedCoverError(orbits)

    @classmethod
    def from_cover(cls, rep: CoverRep, tau: Optional[Intertwiner]=None) -> CosetAction:
        """The fiber action (x, y), or the mapping-torus action (x, y, t -> tau)."""
        images = [rep.px, rep.py]
        if tau is not None:
            images.append(tau.tau)
        return cls(images, basepoint=rep.basepoint)

    @property
    def num_generators(self) -> int:
        return len(self.images)

    def word_array(self, word: Iterable[Letter]) -> List[int]:
        return word_array({g: img for g, img in enumerate(self.images, start=1)}, word, self.degree)

    def right_table(self) -> List[Dict[Letter, int]]:
        """table[s][a] = s . a for every letter a = +-g."""
        inverses = [invert_array(img) for img in self.images]
        table: List[Dict[Letter, int]] = [{} for _ in range(self.degree)]
        for g in range(1, self.num_generators + 1):
            fwd = inverses[g - 1]
            back = self.images[g - 1]
            for s in range(self.degree):
                table[s][g] = fwd[s]
                table[s][-g] = back[s]
        return table

    def acts_trivially(self, relator: Iterable[Letter]) -> bool:
        return all(i == j for i, j in enumerate(self.word_array(relator)))

    def to_jsonable(self) -> JsonableDict:
        return dict(degree=self.degree, images=[[v + 1 for v in img] for img in self.images], basepoint=self.basepoint + 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CosetAction):
            return NotImplemented
        return self.images == other.images and self.basepoint == other.basepoint

    def __hash__(self) -> int:
        return hash((tuple(tuple(img) for img in self.images), self.basepoint))

    def __str__(self) -> str:
        return f"CosetAction(degree={self.degree}, generators={self.num_generators})"

    def __repr__(self) -> str:
        return str(self)

class SchreierTransversal:
    """Breadth-first spanning tree of the coset graph from the basepoint.

       Letters are tried in the order x, x^-1, y, y^-1, t, t^-1 (generator order,
       positive before negative). Every non-tree edge (s, g), meaning s --g--> s . g,
       is a Schreier generator; they are numbered in (s, g) order.
    """

    degree: int
    num_generators: int
    table: List[Dict[Letter, int]]

    parent: List[Optional[Tuple[int, Letter]]]
    """parent[s] = (p, a) with p . a = s on the tree path; None at the basepoint."""

    order: List[int]
    """Cosets in breadth-first order."""

    gen_index: Dict[Tuple[int, int], int]
    """(s, g) -> Schreier generator index for non-tree edges."""

    edges: List[Tuple[int, int]]
    """Schreier generator index -> (s, g)."""

    def __init__(self, action: CosetAction):
        self.degree = action.degree
        self.num_generators = action.num_generators
        self.table = action.right_table()
        self.parent = [None] * self.degree
        seen = [False] * self.degree
        tree_edges: Set[Tuple[int, int]] = set()
        seen[action.basepoint] = True
        self.order = [action.basepoint]
        frontier = deque([action.basepoint])
        while len(frontier) > 0:
            s = frontier.popleft()
            for g in range(1, self.num_generators + 1):
                for a in (g, -g):
                    nxt = self.table[s][a]
                    if not seen[nxt]:
                        seen[nxt] = True
                        self.parent[nxt] = (s, a)
                        tree_edges.add((s, g) if a > 0 else (nxt, g))
                        self.order.append(nxt)
                        frontier.append(nxt)
        self.gen_index = {}
        self.edges = []
        for s in range(self.degree):
            for g in range(1, self.num_generators + 1):
                if (s, g) not in tree_edges:
                    self.gen_index[(s, g)] = len(self.edges)
                    self.edges.append((s, g))

    @property
    def num_schreier_generators(self) -> int:
        return len(self.edges)

    def representative(self, s: int) -> FreeWord:
        """The tree word u_s with basepoint . u_s = s."""
        letters: List[Letter] = []
        while True:
            p = self.parent[s]
            if p is None:
                break
            letters.append(p[1])
            s = p[0]
        return FreeWord(reversed(letters))

    def schreier_generator_word(self, index: int) -> FreeWord:
        """u_s g u_{s.g}^-1 in the ambient generators."""
        s, g = self.edges[index]
        return self.representative(s) * FreeWord.generator(g) * self.representative(self.table[s][g]).inverse()

    def rewrite(self, word: Iterable[Letter], start: int) -> Tuple[List[Letter], int]:
        """Rewrite a word read from coset `start` into signed 1-based Schreier generator
           indices; also returns the end coset."""
        out: List[Letter] = []
        s = start
        for a in word:
            if a > 0:
                idx = self.gen_index.get((s, a))
                if idx is not None:
                    out.append(idx + 1)
                s = self.table[s][a]
            else:
                prev = self.table[s][a]
                idx = self.gen_index.get((prev, -a))
                if idx is not None:
                    out.append(-(idx + 1))
                s = prev
        return out, s

    def letter_cocycle(self, letter: Letter) -> CocycleData:
        """Cocycle data of a single letter."""
        n = self.num_schreier_generators
        nxt = [self.table[s][letter] for s in range(self.degree)]
        vecs: List[List[int]] = []
        for s in range(self.degree):
            vec = [0] * n
            if letter > 0:
                idx = self.gen_index.get((s, letter))
                if idx is not None:
                    vec[idx] = 1
            else:
                idx = self.gen_index.get((nxt[s], -letter))
                if idx is not None:
                    vec[idx] = -1
            vecs.append(vec)
        return CocycleData(nxt, vecs)

    def word_cocycle(self, word: Iterable[Letter]) -> CocycleData:
        result = CocycleData.identity(self.degree, self.num_schreier_generators)
        letters: Dict[Letter, CocycleData] = {}
        for a in word:
            if a not in letters:
                letters[a] = self.letter_cocycle(a)
            result = result.concat(letters[a])
        return result

class CocycleData:
    """For a word w: the end coset s . w and the abelianized rewrite of w read from s,
       for every coset s.

       Concatenation, powers and inverses combine these without expanding w,
       which is what makes images of long monodromies tractable.
    """

    next: List[int]
    vecs: List[List[int]]

    def __init__(self, nxt: List[int], vecs: List[List[int]]):
        self.next = nxt
        self.vecs = vecs

    @classmethod
    def identity(cls, degree: int, num_schreier_generators: int) -> CocycleData:
        return cls(list(range(degree)), [[0] * num_schreier_generators for _ in range(degree)])

    @property
    def degree(self) -> int:
        return len(self.next)

    def concat(self, other: CocycleData) -> CocycleData:
        """Data of the word self * other."""
        nxt = [other.next[m] for m in self.next]
        vecs = [
            [a + b for a, b in zip(self.vecs[s], other.vecs[self.next[s]])]
            for s in range(self.degree)
          ]
        return CocycleData(nxt, vecs)

    def inverse(self) -> CocycleData:
        back = [0] * self.degree
        for s, m in enumerate(self.next):
            back[m] = s
        return CocycleData(back, [[-v for v in self.vecs[back[s]]] for s in range(self.degree)])

    def power(self, exponent: int) -> CocycleData:
        base = self if exponent >= 0 else self.inverse()
        result = CocycleData.identity(self.degree, len(self.vecs[0]) if self.degree > 0 else 0)
        e = abs(exponent)
        while e > 0:
            if e & 1:
                result = result.concat(base)
            e >>= 1
            if e > 0:
                base = base.concat(base)
        return result

    def closes_at(self, s: int) -> bool:
        return self.next[s] == s
