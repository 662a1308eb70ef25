# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
Monodromy words in the Dehn twists D_x, D_y of the once-punctured torus,
their action on the free fundamental group <x, y> of the fiber, and their
monodromy matrices.

Composition convention: the word b_1 b_2 ... b_k acts on pi_1 as
phi_{b_1} o phi_{b_2} o ... o phi_{b_k}, so the abelianized matrix is the
left-to-right product of the block matrices, and D_x D_y has matrix
[[2,1],[1,1]]. Column i of a matrix is the abelianized image of generator i.
"""

from __future__ import annotations

from aenum import Enum as AEnum

from ..internal_types import *
from ..exceptions import FiberCoverError, WordSyntaxError
from .free_word import FreeWord, X, Y
from .sl2 import SL2Matrix, R_MATRIX, L_MATRIX

class TwistGen(AEnum):
    X = 'x'
    """The Dehn twist D_x about the curve x."""

    Y = 'y'
    """The Dehn twist D_y about the curve y."""

    def other(self) -> TwistGen:
        return TwistGen.Y if self is TwistGen.X else TwistGen.X

TwistBlock = Tuple[TwistGen, int]
"""A twist generator and its nonzero exponent."""

def normalize_blocks(blocks: Iterable[TwistBlock]) -> Tuple[TwistBlock, ...]:
    """Merge adjacent blocks with the same generator and drop zero exponents."""
    out: List[TwistBlock] = []
    for gen, exponent in blocks:
        if exponent == 0:
            continue
        if len(out) > 0 and out[-1][0] is gen:
            merged = out[-1][1] + exponent
            out.pop()
            if merged != 0:
                out.append((gen, merged))
        else:
            out.append((gen, exponent))
    return tuple(out)

class TwistWord:
    """A monodromy h = D_x^{r_1} D_y^{s_1} ... as a normalized sequence of signed twist powers."""

    blocks: Tuple[TwistBlock, ...]
    """Normalized blocks, left to right. len(self) is the block count."""

    def __init__(self, blocks: Iterable[TwistBlock]=()):
        self.blocks = normalize_blocks(blocks)

    @classmethod
    def parse(cls, text: str) -> TwistWord:
        return parse_twist_word(text)

    def __len__(self) -> int:
        return len(self.blocks)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TwistWord):
            return NotImplemented
        return self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash(self.blocks)

    def __mul__(self, other: TwistWord) -> TwistWord:
        return TwistWord(self.blocks + other.blocks)

    def __pow__(self, exponent: int) -> TwistWord:
        base = self if exponent >= 0 else self.inverse()
        return TwistWord(base.blocks * abs(exponent))

    def inverse(self) -> TwistWord:
        return TwistWord((g, -e) for g, e in reversed(self.blocks))

    def swapped(self) -> TwistWord:
        """The same word with D_x and D_y exchanged."""
        return TwistWord((g.other(), e) for g, e in self.blocks)

    def cyclically_normalized(self) -> TwistWord:
        """A conjugate of this word that starts with a D_x block and ends with a D_y block,
           with the wrap-around blocks merged.

           Conjugating the monodromy by a twist gives a homeomorphic bundle with the
           same framing, since twists fix the boundary.
        """
        result = self
        while len(result.blocks) > 1 and result.blocks[0][0] is result.blocks[-1][0]:
            first, last = result.blocks[0], result.blocks[-1]
            result = TwistWord(((first[0], first[1] + last[1]),) + result.blocks[1:-1])
        if len(result.blocks) > 1 and result.blocks[0][0] is TwistGen.Y:
            result = TwistWord(result.blocks[1:] + result.blocks[:1])
        return result

    def exponents(self, gen: TwistGen) -> List[int]:
        return [e for g, e in self.blocks if g is gen]

    def to_text(self) -> str:
        """Render in the parser's grammar; the empty word renders as ""."""
        parts: List[str] = []
        for gen, exponent in self.blocks:
            name = f"D{gen.value}"
            parts.append(name if exponent == 1 else f"{name}^{exponent}")
        return ' '.join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"TwistWord({self.to_text()!r})"

class _Parser:
    text: str
    pos: int

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ''

    def parse_int(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in '+-':
            self.pos += 1
        digits_start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits_start:
            raise WordSyntaxError("Expected an integer exponent", start)
        value = int(self.text[start:self.pos])
        if value == 0:
            raise WordSyntaxError("Zero exponent", start)
        return value

    def parse_exponent(self) -> int:
        if self.peek() == '^':
            self.pos += 1
            return self.parse_int()
        return 1

    def parse_sequence(self, closing: str) -> List[TwistBlock]:
        blocks: List[TwistBlock] = []
        while True:
            ch = self.peek()
            if ch == closing:
                return blocks
            start = self.pos
            if ch == '(':
                self.pos += 1
                inner = self.parse_sequence(')')
                if self.peek() != ')':
                    raise WordSyntaxError("Unclosed '('", start)
                self.pos += 1
                blocks.extend((TwistWord(inner) ** self.parse_exponent()).blocks)
            elif ch == 'D':
                self.pos += 1
                if self.pos >= len(self.text) or self.text[self.pos] not in 'xy':
                    raise WordSyntaxError("Expected 'Dx' or 'Dy'", start)
                gen = TwistGen(self.text[self.pos])
                self.pos += 1
                blocks.append((gen, self.parse_exponent()))
            elif ch == '':
                raise WordSyntaxError("Unexpected end of word", self.pos)
            else:
                raise WordSyntaxError(f"Unexpected character {ch!r}", self.pos)

def parse_twist_word(text: str) -> TwistWord:
    """Parse a monodromy word such as "Dx^2 Dy^-4 (Dx Dy)^3".

       Tokens are Dx or Dy with an optional ^<int>, and parenthesized groups with
       an optional ^<int>. Whitespace between tokens is optional. Zero exponents
       are rejected.
    """
    parser = _Parser(text)
    blocks = parser.parse_sequence('')
    if parser.peek() != '':
        raise WordSyntaxError(f"Unexpected {parser.peek()!r}", parser.pos)
    return TwistWord(blocks)

class TwistEndo:
    """An endomorphism of the free group <x, y>, given by the images of x and y."""

    x_image: FreeWord
    y_image: FreeWord

    def __init__(self, x_image: FreeWord, y_image: FreeWord):
        self.x_image = x_image
        self.y_image = y_image

    @classmethod
    def identity(cls) -> TwistEndo:
        return cls(X, Y)

    @classmethod
    def twist_power(cls, gen: TwistGen, exponent: int) -> TwistEndo:
        """D_x^r: x -> x, y -> y x^r.  D_y^s: x -> y^s x, y -> y."""
        if gen is TwistGen.X:
            return cls(X, Y * X ** exponent)
        return cls(Y ** exponent * X, Y)

    def images(self) -> Dict[int, FreeWord]:
        """Substitution map for FreeWord.substitute; the stable letter t is left alone."""
        return {1: self.x_image, 2: self.y_image}

    def apply(self, word: FreeWord) -> FreeWord:
        return word.substitute(self.images())

    def compose(self, inner: TwistEndo) -> TwistEndo:
        """self o inner: apply inner first."""
        return TwistEndo(self.apply(inner.x_image), self.apply(inner.y_image))

    def abelianization(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        """Integer matrix whose columns are the abelianized images of x and y."""
        cx = self.x_image.abelianize(2)
        cy = self.y_image.abelianize(2)
        return ((cx[0], cy[0]), (cx[1], cy[1]))

    def is_automorphism(self) -> bool:
        """Necessary test: the abelianization must be unimodular."""
        (a, b), (c, d) = self.abelianization()
        return a * d - b * c in (1, -1)

    def matrix(self) -> SL2Matrix:
        if not self.is_automorphism():
            raise FiberCoverError(f"{self} does not abelianize to a unimodular matrix")
        (a, b), (c, d) = self.abelianization()
        return SL2Matrix(a, b, c, d)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TwistEndo):
            return NotImplemented
        return self.x_image == other.x_image and self.y_image == other.y_image

    def __hash__(self) -> int:
        return hash((self.x_image, self.y_image))

    def __str__(self) -> str:
        return f"(x -> {self.x_image}, y -> {self.y_image})"

    def __repr__(self) -> str:
        return f"TwistEndo({self.x_image!r}, {self.y_image!r})"

def twist_endo(word: TwistWord) -> TwistEndo:
    """The action of the monodromy on pi_1 of the fiber."""
    result = TwistEndo.identity()
    for gen, exponent in word.blocks:
        result = result.compose(TwistEndo.twist_power(gen, exponent))
    return result

def monodromy_matrix(word: TwistWord) -> SL2Matrix:
    """Product of R^{r_i} and L^{s_i} in word order."""
    result = SL2Matrix.identity()
    for gen, exponent in word.blocks:
        result = result @ ((R_MATRIX if gen is TwistGen.X else L_MATRIX) ** exponent)
    return result

BOUNDARY_WORD = FreeWord((1, 2, -1, -2))
"""The longitude beta = x y x^-1 y^-1, oriented so that D_x fixes it exactly."""

def boundary_word() -> FreeWord:
    return BOUNDARY_WORD

def boundary_conjugator(word: TwistWord) -> FreeWord:
    """The w with twist_endo(word)(beta) == w beta w^-1 obtained by composing the
       twists' own conjugators (1 for D_x^r, y^s for D_y^s).

       The meridian of the bundle is alpha = w^-1 t, which commutes with beta.
       The word w can be very long; the cover and homology engines track its
       image without expanding it.
    """
    endo = TwistEndo.identity()
    w = FreeWord.identity()
    for gen, exponent in word.blocks:
        if gen is TwistGen.Y:
            w = endo.y_image ** exponent * w
        endo = endo.compose(TwistEndo.twist_power(gen, exponent))
    return w
