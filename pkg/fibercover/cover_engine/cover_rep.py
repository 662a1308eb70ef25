# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
Finite covers of the punctured torus as permutation representations of
pi_1(F) = <x, y>.

The action is a left action: P_{uv} = P_u o P_v. Sheet (row i, column j) of
a cover built from cut data is numbered i*d + j.
"""

from __future__ import annotations

from ..internal_types import *
from ..exceptions import DisconnectedCoverError, FiberCoverError
from ..pkg_logging import logger
from ..word_algebra import FreeWord, TwistWord, TwistGen, TwistEndo, BOUNDARY_WORD
from .cut_data import CutData
from .permutations import (
    as_array,
    compose_arrays,
    power_array,
    orbits_of_arrays,
    word_array,
    cycle_type,
    perm_to_one_based,
    perm_from_one_based,
  )

class CoverRep:
    """A connected finite cover of the fiber: images of x and y acting on sheets 0..D-1."""

    degree: int
    px: List[int]
    """Image array of x."""

    py: List[int]
    """Image array of y."""

    basepoint: int

    cut_data: Optional[CutData]
    """The cut data this cover was built from, if any."""

    def __init__(self, px: Sequence[int], py: Sequence[int], *, basepoint: int=0, cut_data: Optional[CutData]=None, check_connected: bool=True):
        if len(px) != len(py):
            raise FiberCoverError(f"Generator images have different degrees {len(px)} and {len(py)}")
        self.degree = len(px)
        self.px = list(px)
        self.py = list(py)
        for name, arr in (('x', self.px), ('y', self.py)):
            if sorted(arr) != list(range(self.degree)):
                raise FiberCoverError(f"Image of {name} is not a permutation")
        if not 0 <= basepoint < self.degree:
            raise FiberCoverError(f"Basepoint {basepoint} out of range")
        self.basepoint = basepoint
        self.cut_data = cut_data
        if check_connected:
            orbits = self.orbits()
            if len(orbits) > 1:
                raise DisconnectedCoverError(orbits)

    def gen_arrays(self) -> Dict[int, List[int]]:
        return {1: self.px, 2: self.py}

    def orbits(self) -> List[List[int]]:
        return orbits_of_arrays([self.px, self.py], self.degree)

    def word_array(self, word: Union[FreeWord, Iterable[Letter]]) -> List[int]:
        """Image array of P_word."""
        return word_array(self.gen_arrays(), word, self.degree)

    def beta_array(self) -> List[int]:
        return self.word_array(BOUNDARY_WORD)

    def twisted_arrays(self, monodromy: Union[TwistWord, TwistEndo]) -> Tuple[List[int], List[int]]:
        """(P_{e(x)}, P_{e(y)}) for the monodromy's action e on pi_1.

           For a TwistWord this iterates over the blocks without expanding e(x), e(y),
           whose lengths grow exponentially in the word length.
        """
        if isinstance(monodromy, TwistEndo):
            return self.word_array(monodromy.x_image), self.word_array(monodromy.y_image)
        qx, qy = self.px, self.py
        for gen, exponent in monodromy.blocks:
            if gen is TwistGen.X:
                qy = compose_arrays(qy, power_array(qx, exponent))
            else:
                qx = compose_arrays(power_array(qy, exponent), qx)
        return qx, qy

    def boundary_conjugator_array(self, monodromy: TwistWord) -> List[int]:
        """P_w for the w of boundary_conjugator(monodromy), computed blockwise.

           The meridian alpha = w^-1 t then acts as P_w^-1 o tau.
        """
        qy = self.py
        qx = self.px
        pw = list(range(self.degree))
        for gen, exponent in monodromy.blocks:
            if gen is TwistGen.X:
                qy = compose_arrays(qy, power_array(qx, exponent))
            else:
                pw = compose_arrays(power_array(qy, exponent), pw)
                qx = compose_arrays(power_array(qy, exponent), qx)
        return pw

    def to_jsonable(self) -> JsonableDict:
        result: JsonableDict = dict(
            degree=self.degree,
            x=perm_to_one_based(self.px),
            y=perm_to_one_based(self.py),
            basepoint=self.basepoint + 1,
          )
        if self.cut_data is not None:
            result['cut_data'] = self.cut_data.to_jsonable()
        return result

    @classmethod
    def from_jsonable(cls, data: JsonableDict) -> CoverRep:
        try:
            px = as_array(perm_from_one_based(cast(List[int], data['x'])))
            py = as_array(perm_from_one_based(cast(List[int], data['y'])))
            basepoint = int(cast(int, data.get('basepoint', 1))) - 1
        except (KeyError, TypeError, ValueError) as e:
            raise FiberCoverError(f"Malformed cover: {e}") from e
        cut_data = None
        if 'cut_data' in data:
            cut_data = CutData.from_jsonable(cast(JsonableDict, data['cut_data']))
        return cls(px, py, basepoint=basepoint, cut_data=cut_data)

    def __str__(self) -> str:
        return f"CoverRep(degree={self.degree})"

    def __repr__(self) -> str:
        return str(self)

def cut_data_arrays(c: CutData) -> Tuple[List[int], List[int]]:
    """P_x(i, j) = (i, sigma_i(j)); P_y(i, j) = (i + 1, cut_i(j))."""
    n, d = c.n, c.d
    px = [0] * (n * d)
    py = [0] * (n * d)
    for i in range(n):
        sig = c.sigma[i].array_form
        cut = c.advance[i].array_form if i in c.advance else None
        nxt = (i + 1) % n
        for j in range(d):
            px[i * d + j] = i * d + sig[j]
            py[i * d + j] = nxt * d + (j if cut is None else cut[j])
    return px, py

def build_rep(c: CutData) -> CoverRep:
    """The cover described by cut data. Raises DisconnectedCoverError if it is not connected."""
    px, py = cut_data_arrays(c)
    rep = CoverRep(px, py, cut_data=c)
    logger.debug(f"Built cover of degree {rep.degree} from {c.n} rows of width {c.d}")
    return rep

def restrict_to_orbit(c: CutData, orbit: Sequence[int]) -> CoverRep:
    """The connected cover given by one orbit of a disconnected cut-data action."""
    px, py = cut_data_arrays(c)
    index = {s: k for k, s in enumerate(sorted(orbit))}
    sub_px = [index[px[s]] for s in sorted(orbit)]
    sub_py = [index[py[s]] for s in sorted(orbit)]
    return CoverRep(sub_px, sub_py)

def euler_and_boundary(rep: CoverRep) -> Tuple[int, int]:
    """(Euler characteristic, number of boundary components) of the cover surface."""
    chi = -rep.degree
    components = len(cycle_type(rep.beta_array()))
    return chi, components
