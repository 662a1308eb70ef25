# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
Freely reduced words in a free group with a small number of named generators.

Letters are signed 1-based generator indices: +1 is x, -1 is x^-1, +2 is y,
and so on. Words are immutable and always freely reduced.
"""

from __future__ import annotations

from ..internal_types import *
from ..exceptions import FiberCoverError

GENERATOR_NAMES: Tuple[str, ...] = ('x', 'y', 't')
"""Display names for generator indices 1, 2, 3; inverses print in upper case."""

def free_reduce(letters: Iterable[Letter]) -> LetterWord:
    """Cancel adjacent inverse pairs until none remain."""
    stack: List[Letter] = []
    for letter in letters:
        if letter == 0:
            raise FiberCoverError("Letter 0 is not a generator")
        if len(stack) > 0 and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)

def letter_name(letter: Letter) -> str:
    idx = abs(letter) - 1
    name = GENERATOR_NAMES[idx] if idx < len(GENERATOR_NAMES) else f"g{idx + 1}"
    return name if letter > 0 else name.upper()

class FreeWord:
    """A freely reduced word over signed generator indices."""

    letters: LetterWord
    """The reduced letters, left to right."""

    def __init__(self, letters: Iterable[Letter]=()):
        self.letters = free_reduce(letters)

    @classmethod
    def identity(cls) -> FreeWord:
        return cls(())

    @classmethod
    def generator(cls, index: int) -> FreeWord:
        """The word consisting of the single 1-based generator `index`."""
        return cls((index,))

    @classmethod
    def from_str(cls, text: str) -> FreeWord:
        """Parse a word such as "xyXY" (upper case is inverse) or "1" for the identity."""
        letters: List[Letter] = []
        for pos, ch in enumerate(text):
            if ch.isspace() or ch in '1*.':
                continue
            lower = ch.lower()
            if lower not in GENERATOR_NAMES:
                raise FiberCoverError(f"Unknown generator {ch!r} at position {pos} in {text!r}")
            index = GENERATOR_NAMES.index(lower) + 1
            letters.append(index if ch == lower else -index)
        return cls(letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __mul__(self, other: FreeWord) -> FreeWord:
        return FreeWord(self.letters + other.letters)

    def inverse(self) -> FreeWord:
        return FreeWord(tuple(-a for a in reversed(self.letters)))

    def __pow__(self, exponent: int) -> FreeWord:
        base = self if exponent >= 0 else self.inverse()
        return FreeWord(base.letters * abs(exponent))

    def is_identity(self) -> bool:
        return len(self.letters) == 0

    def substitute(self, images: Mapping[int, FreeWord]) -> FreeWord:
        """Replace each generator index by its image word; generators without an image are kept."""
        out: List[Letter] = []
        for a in self.letters:
            image = images.get(abs(a))
            if image is None:
                out.append(a)
            elif a > 0:
                out.extend(image.letters)
            else:
                out.extend(-b for b in reversed(image.letters))
        return FreeWord(out)

    def abelianize(self, num_generators: int) -> List[int]:
        """Exponent sum of each generator."""
        counts = [0] * num_generators
        for a in self.letters:
            counts[abs(a) - 1] += 1 if a > 0 else -1
        return counts

    def cyclic_reduction(self) -> Tuple[FreeWord, FreeWord]:
        """Return (u, c) with self == u c u^-1 and c cyclically reduced."""
        letters = self.letters
        i = 0
        j = len(letters) - 1
        while i < j and letters[i] == -letters[j]:
            i += 1
            j -= 1
        return FreeWord(letters[:i]), FreeWord(letters[i:j + 1])

    def conjugator_to(self, base: FreeWord) -> Optional[FreeWord]:
        """Return w with self == w base w^-1, or None if self is not conjugate to base.

           base must be cyclically reduced.
        """
        u, core = self.cyclic_reduction()
        n = len(base.letters)
        if len(core.letters) != n:
            return None
        if n == 0:
            return FreeWord.identity()
        doubled = base.letters + base.letters
        for shift in range(n):
            if doubled[shift:shift + n] == core.letters:
                # core = b2 b1 where base = b1 b2 and len(b1) == shift
                b1 = FreeWord(base.letters[:shift])
                return u * b1.inverse()
        return None

    def __str__(self) -> str:
        if len(self.letters) == 0:
            return '1'
        return ''.join(letter_name(a) for a in self.letters)

    def __repr__(self) -> str:
        return f"FreeWord({str(self)!r})"

X = FreeWord.generator(1)
"""The fiber generator x."""

Y = FreeWord.generator(2)
"""The fiber generator y."""

T = FreeWord.generator(3)
"""The mapping torus stable letter t."""
