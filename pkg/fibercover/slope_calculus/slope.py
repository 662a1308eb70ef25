# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
Filling slopes: coprime pairs (mu, lambda) naming the curve alpha^mu beta^lambda
that bounds a disk in the filled manifold.
"""

from __future__ import annotations

from math import gcd

from ..internal_types import *
from ..exceptions import SlopeError

class Slope:
    """A coprime pair (mu, lambda) other than (0, 0)."""

    mu: int
    """Exponent of the meridian alpha (the suspension of a boundary point)."""

    lam: int
    """Exponent of the longitude beta (the fiber boundary)."""

    def __init__(self, mu: int, lam: int):
        mu = int(mu)
        lam = int(lam)
        if gcd(mu, lam) != 1:
            raise SlopeError(f"Slope ({mu}, {lam}) is not a coprime pair")
        self.mu = mu
        self.lam = lam

    @classmethod
    def from_jsonable(cls, data: Jsonable) -> Slope:
        if isinstance(data, dict):
            try:
                return cls(cast(int, data['mu']), cast(int, data['lambda']))
            except KeyError as e:
                raise SlopeError(f"Slope is missing field {e}") from e
        if isinstance(data, list) and len(data) == 2:
            return cls(cast(int, data[0]), cast(int, data[1]))
        raise SlopeError(f"Malformed slope {data!r}")

    def to_jsonable(self) -> JsonableDict:
        return {'mu': self.mu, 'lambda': self.lam}

    def as_tuple(self) -> Tuple[int, int]:
        return (self.mu, self.lam)

    def __neg__(self) -> Slope:
        return Slope(-self.mu, -self.lam)

    def normalized(self) -> Slope:
        """The representative of +-(mu, lambda) with mu > 0, or (0, 1)."""
        if self.mu < 0 or (self.mu == 0 and self.lam < 0):
            return -self
        return self

    def with_lambda_negated(self) -> Slope:
        return Slope(self.mu, -self.lam)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Slope):
            return NotImplemented
        return self.as_tuple() == other.as_tuple()

    def __lt__(self, other: Slope) -> bool:
        return self.as_tuple() < other.as_tuple()

    def __hash__(self) -> int:
        return hash(self.as_tuple())

    def __str__(self) -> str:
        return f"({self.mu}, {self.lam})"

    def __repr__(self) -> str:
        return f"Slope({self.mu}, {self.lam})"
