# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
Framing transforms: homeomorphisms M_w(mu, lambda) ~ M_w'(mu', lambda') between
fillings of bundles whose monodromies are isotopic up to conjugation, together
with the induced map on slopes.

A transform with source w also matches w^j; the image is target^j with the
slope map raised to the j-th power.
"""

from __future__ import annotations

from ..internal_types import *
from ..exceptions import FiberCoverError, PatternMismatchError
from ..pkg_logging import logger
from ..word_algebra import (
    SL2Matrix,
    TwistWord,
    parse_twist_word,
    monodromy_matrix,
    sl2_conjugacy_witness_check,
  )
from .slope import Slope

SlopeMap = Tuple[Tuple[int, int], Tuple[int, int]]
"""(mu', lambda') = (a mu + b lambda, c mu + d lambda) for ((a, b), (c, d))."""

def _slope_map_det(m: SlopeMap) -> int:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]

def _slope_map_mul(m1: SlopeMap, m2: SlopeMap) -> SlopeMap:
    return (
        (m1[0][0] * m2[0][0] + m1[0][1] * m2[1][0], m1[0][0] * m2[0][1] + m1[0][1] * m2[1][1]),
        (m1[1][0] * m2[0][0] + m1[1][1] * m2[1][0], m1[1][0] * m2[0][1] + m1[1][1] * m2[1][1]),
      )

def _slope_map_pow(m: SlopeMap, exponent: int) -> SlopeMap:
    result: SlopeMap = ((1, 0), (0, 1))
    for _ in range(exponent):
        result = _slope_map_mul(result, m)
    return result

def _slope_map_inverse(m: SlopeMap) -> SlopeMap:
    det = _slope_map_det(m)
    return ((m[1][1] * det, -m[0][1] * det), (-m[1][0] * det, m[0][0] * det))

def shear(c: int) -> SlopeMap:
    """The map (mu, lambda) -> (mu, lambda + c mu)."""
    return ((1, 0), (c, 1))

class FramingTransform:
    """A monodromy substitution with its slope map."""

    name: str
    source: TwistWord
    target: TwistWord
    slope_map: SlopeMap

    witness: Optional[SL2Matrix]
    """A matrix conjugating the source monodromy matrix to the target's, when known."""

    def __init__(
            self,
            source: TwistWord,
            target: TwistWord,
            slope_map: SlopeMap,
            *,
            name: Optional[str]=None,
            witness: Optional[SL2Matrix]=None,
          ):
        if _slope_map_det(slope_map) not in (1, -1):
            raise FiberCoverError(f"Slope map {slope_map} is not invertible over the integers")
        self.source = source
        self.target = target
        self.slope_map = slope_map
        self.witness = witness
        self.name = name if name is not None else f"{source.to_text()} -> {target.to_text()}"

    @classmethod
    def identity(cls, word: TwistWord) -> FramingTransform:
        return cls(word, word, ((1, 0), (0, 1)), name="identity", witness=SL2Matrix.identity())

    @classmethod
    def from_jsonable(cls, data: JsonableDict) -> FramingTransform:
        """Accepts {"source": str, "target": str, "slope_map": [[a, b], [c, d]], "name"?: str,
           "witness"?: [a, b, c, d]}."""
        try:
            source = parse_twist_word(cast(str, data['source']))
            target = parse_twist_word(cast(str, data['target']))
            raw_map = cast(List[List[int]], data['slope_map'])
            slope_map: SlopeMap = ((int(raw_map[0][0]), int(raw_map[0][1])), (int(raw_map[1][0]), int(raw_map[1][1])))
        except (KeyError, IndexError, TypeError, ValueError) as e:
            raise FiberCoverError(f"Malformed framing transform {data!r}: {e}") from e
        witness_data = data.get('witness')
        witness = None if witness_data is None else SL2Matrix.from_jsonable(witness_data)
        name = data.get('name')
        return cls(source, target, slope_map, name=None if name is None else str(name), witness=witness)

    def to_jsonable(self) -> JsonableDict:
        result: JsonableDict = dict(
            name=self.name,
            source=self.source.to_text(),
            target=self.target.to_text(),
            slope_map=[list(self.slope_map[0]), list(self.slope_map[1])],
          )
        if self.witness is not None:
            result['witness'] = self.witness.to_jsonable()
        return result

    def map_slope(self, s: Slope, power: int=1) -> Slope:
        m = _slope_map_pow(self.slope_map, power)
        return Slope(m[0][0] * s.mu + m[0][1] * s.lam, m[1][0] * s.mu + m[1][1] * s.lam)

    def match_power(self, word: TwistWord) -> Optional[int]:
        """The j >= 1 with word == source^j, or None."""
        if len(self.source) == 0:
            return 1 if len(word) == 0 else None
        # each power of a nontrivial source adds at least 1 to the total |exponent|
        total = sum(abs(e) for _, e in word.blocks)
        for j in range(1, total + 1):
            if self.source ** j == word:
                return j
        return None

    def matrices_conjugate(self) -> Optional[bool]:
        """Check the stored witness against the monodromy matrices; None if there is no witness."""
        if self.witness is None:
            return None
        return sl2_conjugacy_witness_check(monodromy_matrix(self.source), monodromy_matrix(self.target), self.witness)

    def __str__(self) -> str:
        return f"FramingTransform({self.name})"

    def __repr__(self) -> str:
        return str(self)

def apply_framing(t: FramingTransform, word: TwistWord, s: Slope) -> Tuple[TwistWord, Slope]:
    """Map (word, slope) through t. word must equal t.source^j for some j >= 1."""
    power = t.match_power(word)
    if power is None:
        raise PatternMismatchError(f"{word.to_text()!r} is not a power of {t.source.to_text()!r}")
    new_word = t.target ** power
    new_slope = t.map_slope(s, power)
    logger.debug(f"Framing {t.name} (power {power}): {word.to_text()} {s} -> {new_word.to_text()} {new_slope}")
    return new_word, new_slope

def invert_framing(t: FramingTransform) -> FramingTransform:
    witness = None if t.witness is None else t.witness.inverse()
    return FramingTransform(t.target, t.source, _slope_map_inverse(t.slope_map), name=f"inverse of {t.name}", witness=witness)

_H = parse_twist_word("Dx Dy")
_G = parse_twist_word("Dy^5 Dx^-1")
_MINUS_ONE = parse_twist_word("(Dx Dy^-1 Dx)^2")
_I = parse_twist_word("Dx^2 Dy^-4 Dx Dy^-4 Dx")
_GH_CONJUGATOR = SL2Matrix(-1, 1, -2, 1)

BUILTIN_TRANSFORMS: Tuple[FramingTransform, ...] = (
    FramingTransform(_MINUS_ONE * _H, _G, shear(-1), name="(-1)h -> g", witness=_GH_CONJUGATOR),
    FramingTransform(_H ** 2, (_MINUS_ONE * _H) ** 2, shear(1), name="h^2 -> (-h)^2", witness=SL2Matrix.identity()),
    FramingTransform(_H ** 2, _G ** 2, shear(-1), name="h^2 -> g^2", witness=_GH_CONJUGATOR),
    FramingTransform(_H ** 3, _I, shear(1), name="h^3 -> i", witness=SL2Matrix.identity()),
    FramingTransform(_H ** 18, _G ** 18, shear(-9), name="h^18 -> g^18", witness=_GH_CONJUGATOR),
  )
"""The built-in framing identities relating h = Dx Dy, g = Dy^5 Dx^-1,
   (-1) = (Dx Dy^-1 Dx)^2 and i = Dx^2 Dy^-4 Dx Dy^-4 Dx."""
