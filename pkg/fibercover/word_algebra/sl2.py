# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
2x2 integer matrices of determinant +-1, with the twist generators
R = [[1,1],[0,1]] and L = [[1,0],[1,1]].
"""

from __future__ import annotations

from ..internal_types import *
from ..exceptions import FiberCoverError

class SL2Matrix:
    """An integer 2x2 matrix [[a, b], [c, d]] with determinant +-1.

       Monodromy matrices always have determinant 1; determinant -1 is
       allowed so the same type can carry conjugators.
    """
    a: int
    b: int
    c: int
    d: int

    def __init__(self, a: int, b: int, c: int, d: int):
        self.a = int(a)
        self.b = int(b)
        self.c = int(c)
        self.d = int(d)
        det = self.det()
        if det not in (1, -1):
            raise FiberCoverError(f"Matrix {self.rows()} has determinant {det}, not +-1")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> SL2Matrix:
        return cls(rows[0][0], rows[0][1], rows[1][0], rows[1][1])

    @classmethod
    def from_jsonable(cls, data: Jsonable) -> SL2Matrix:
        """Accepts either four row-major integers or a nested 2x2 list."""
        if not isinstance(data, list):
            raise FiberCoverError(f"Expected a list for a matrix, got {data!r}")
        if len(data) == 4:
            return cls(*(int(cast(Any, v)) for v in data))
        if len(data) == 2 and all(isinstance(r, list) and len(r) == 2 for r in data):
            return cls.from_rows(cast(List[List[int]], data))
        raise FiberCoverError(f"Malformed matrix {data!r}")

    @classmethod
    def identity(cls) -> SL2Matrix:
        return cls(1, 0, 0, 1)

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def rows(self) -> List[List[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def to_jsonable(self) -> List[int]:
        """Row-major four integers."""
        return [self.a, self.b, self.c, self.d]

    def __matmul__(self, other: SL2Matrix) -> SL2Matrix:
        return SL2Matrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
          )

    def __neg__(self) -> SL2Matrix:
        return SL2Matrix(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> SL2Matrix:
        det = self.det()
        return SL2Matrix(self.d * det, -self.b * det, -self.c * det, self.a * det)

    def __pow__(self, exponent: int) -> SL2Matrix:
        base = self if exponent >= 0 else self.inverse()
        result = SL2Matrix.identity()
        e = abs(exponent)
        while e > 0:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def trace(self) -> int:
        return self.a + self.d

    def apply(self, vector: Tuple[int, int]) -> Tuple[int, int]:
        return (self.a * vector[0] + self.b * vector[1], self.c * vector[0] + self.d * vector[1])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SL2Matrix):
            return NotImplemented
        return self.to_jsonable() == other.to_jsonable()

    def __hash__(self) -> int:
        return hash(tuple(self.to_jsonable()))

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"

    def __repr__(self) -> str:
        return f"SL2Matrix({self.a}, {self.b}, {self.c}, {self.d})"

R_MATRIX = SL2Matrix(1, 1, 0, 1)
"""Abelianized action of the x-twist."""

L_MATRIX = SL2Matrix(1, 0, 1, 1)
"""Abelianized action of the y-twist."""

def sl2_conjugacy_witness_check(A: SL2Matrix, B: SL2Matrix, C: SL2Matrix) -> bool:
    """True iff C A C^-1 == B exactly."""
    return C @ A @ C.inverse() == B
