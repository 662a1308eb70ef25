# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
Lifting the monodromy and the surgery curve to a cover.

An intertwiner for an automorphism e of pi_1(F) is a sheet permutation tau
with tau o P_g o tau^-1 = P_{e(g)} for g in {x, y}. It exists exactly when
e lifts to the cover, and it is the image of the stable letter t in the
mapping-torus representation.
"""

from __future__ import annotations

from collections import deque

from sympy.combinatorics import Permutation

from ..internal_types import *
from ..exceptions import FiberCoverError
from ..pkg_logging import logger
from ..word_algebra import TwistWord, TwistEndo, TwistGen
from ..slope_calculus import Slope
from .cover_rep import CoverRep
from .permutations import (
    as_perm,
    compose_arrays,
    invert_array,
    power_array,
    is_identity_array,
    orbits_of_arrays,
    cycle_type,
    perm_to_one_based,
    perm_from_one_based,
    as_array,
  )

Monodromy = Union[TwistWord, TwistEndo]

class Intertwiner:
    """A lift of the monodromy to a cover, as a sheet permutation."""

    tau: List[int]
    """0-based image array."""

    def __init__(self, tau: Sequence[int]):
        self.tau = list(tau)

    @property
    def degree(self) -> int:
        return len(self.tau)

    @property
    def perm(self) -> Permutation:
        return as_perm(self.tau)

    def power(self, exponent: int) -> List[int]:
        return power_array(self.tau, exponent)

    def to_jsonable(self) -> List[int]:
        return perm_to_one_based(self.tau)

    @classmethod
    def from_jsonable(cls, data: Sequence[int]) -> Intertwiner:
        return cls(as_array(perm_from_one_based(data)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Intertwiner):
            return NotImplemented
        return self.tau == other.tau

    def __lt__(self, other: Intertwiner) -> bool:
        return self.tau < other.tau

    def __hash__(self) -> int:
        return hash(tuple(self.tau))

    def __str__(self) -> str:
        return f"Intertwiner({self.to_jsonable()})"

    def __repr__(self) -> str:
        return str(self)

def _propagate(
        rep: CoverRep,
        targets: Sequence[Sequence[int]],
        target_inverses: Sequence[Sequence[int]],
        anchor: int
      ) -> Optional[List[int]]:
    """The unique tau with tau(basepoint) = anchor compatible with the actions, or None."""
    degree = rep.degree
    sources = [rep.px, rep.py]
    source_inverses = [invert_array(rep.px), invert_array(rep.py)]
    tau = [-1] * degree
    used = [False] * degree
    tau[rep.basepoint] = anchor
    used[anchor] = True
    frontier = deque([rep.basepoint])
    while len(frontier) > 0:
        s = frontier.popleft()
        ts = tau[s]
        for k in range(2):
            for src, dst in ((sources[k], targets[k]), (source_inverses[k], target_inverses[k])):
                nbr = src[s]
                want = dst[ts]
                have = tau[nbr]
                if have < 0:
                    if used[want]:
                        return None
                    tau[nbr] = want
                    used[want] = True
                    frontier.append(nbr)
                elif have != want:
                    return None
    return tau

def _target_arrays(rep: CoverRep, e: Monodromy) -> Tuple[List[int], List[int]]:
    return rep.twisted_arrays(e)

def find_intertwiners(rep: CoverRep, e: Monodromy) -> List[Intertwiner]:
    """All tau with tau P_g tau^-1 = P_{e(g)} for g in {x, y}, sorted.

       Each candidate image of the basepoint determines tau by propagation along
       the transitive action, so there are at most `degree` intertwiners.
    """
    qx, qy = _target_arrays(rep, e)
    if cycle_type(qx) != cycle_type(rep.px) or cycle_type(qy) != cycle_type(rep.py):
        logger.debug(f"No intertwiners for {rep}: cycle types differ")
        return []
    targets = [qx, qy]
    target_inverses = [invert_array(qx), invert_array(qy)]
    result: List[Intertwiner] = []
    for anchor in range(rep.degree):
        tau = _propagate(rep, targets, target_inverses, anchor)
        if tau is not None:
            result.append(Intertwiner(tau))
    result.sort()
    logger.debug(f"Found {len(result)} intertwiners for {rep}")
    return result

def is_intertwiner(rep: CoverRep, e: Monodromy, tau: Intertwiner) -> bool:
    if tau.degree != rep.degree:
        return False
    qx, qy = _target_arrays(rep, e)
    return (
        compose_arrays(tau.tau, rep.px) == compose_arrays(qx, tau.tau) and
        compose_arrays(tau.tau, rep.py) == compose_arrays(qy, tau.tau)
      )

def deck_group(rep: CoverRep) -> List[Intertwiner]:
    """Permutations commuting with P_x and P_y."""
    return find_intertwiners(rep, TwistEndo.identity())

def canonical_intertwiner(rep: CoverRep, word: TwistWord) -> Optional[Intertwiner]:
    """tau_x^R for a cover built from cut data, where tau_x(i, j) = (i, pi_i(j)) with
       pi_i = sigma_1 ... sigma_{i-1} (row 1 fixed) and R is the sum of the D_x exponents.

       This lifts D_x to the cover; D_y^s lifts to the identity when n divides s.
       Returns None when the rep has no cut data or tau_x^R does not intertwine.
    """
    c = rep.cut_data
    if c is None:
        return None
    d = c.d
    tau_x = [0] * rep.degree
    prefix = c.identity()
    for i in range(c.n):
        arr = prefix.array_form
        for j in range(d):
            tau_x[i * d + j] = i * d + arr[j]
        prefix = prefix * c.sigma[i]
    R = sum(word.exponents(TwistGen.X))
    tau = Intertwiner(power_array(tau_x, R))
    if not is_intertwiner(rep, word, tau):
        logger.debug(f"tau_x^{R} does not intertwine {word} on {rep}")
        return None
    return tau

def meridian_array(rep: CoverRep, tau: Intertwiner, monodromy: Optional[TwistWord]=None) -> List[int]:
    """The action of the meridian alpha = w^-1 t, where e(beta) = w beta w^-1.

       Without a monodromy word, w is taken to be trivial and alpha acts as tau.
    """
    if monodromy is None:
        return list(tau.tau)
    pw = rep.boundary_conjugator_array(monodromy)
    return compose_arrays(invert_array(pw), tau.tau)

def surgery_lifts(
        rep: CoverRep,
        tau: Intertwiner,
        R_unused: Optional[int],
        s: Slope,
        *,
        monodromy: Optional[TwistWord]=None
      ) -> bool:
    """True when every lift of alpha^mu beta^lambda closes: P_alpha^mu o P_beta^lambda = id.

       For covers built from cut data with n dividing every D_y exponent the
       meridian acts as tau itself, so this is tau^mu P_beta^lambda = id.
    """
    alpha = meridian_array(rep, tau, monodromy)
    curve = compose_arrays(power_array(alpha, s.mu), power_array(rep.beta_array(), s.lam))
    return is_identity_array(curve)

def boundary_tori(rep: CoverRep, tau: Intertwiner, *, monodromy: Optional[TwistWord]=None) -> int:
    """Boundary tori of the mapping-torus cover: orbits of <P_beta, P_alpha> on sheets."""
    if tau.degree != rep.degree:
        raise FiberCoverError(f"Intertwiner degree {tau.degree} does not match cover degree {rep.degree}")
    alpha = meridian_array(rep, tau, monodromy)
    return len(orbits_of_arrays([rep.beta_array(), alpha], rep.degree))

def lifting_intertwiner(rep: CoverRep, word: TwistWord, s: Slope) -> Optional[Intertwiner]:
    """An intertwiner for `word` along which every lift of the surgery curve closes, or None.

       The canonical lift is tried first; the full search runs only when it fails.
    """
    canonical = canonical_intertwiner(rep, word)
    if canonical is not None and surgery_lifts(rep, canonical, None, s, monodromy=word):
        return canonical
    for tau in find_intertwiners(rep, word):
        if surgery_lifts(rep, tau, None, s, monodromy=word):
            return tau
    return None
