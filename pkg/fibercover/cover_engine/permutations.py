# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
Permutation helpers shared by the cover engine and the homology engine.

Public values are sympy Permutations. Inner loops work on 0-based image
arrays (p[i] is the image of i). compose(p, q) is the function composition
p o q (apply q first); for sympy Permutations this is q*p.
"""

from __future__ import annotations

from sympy.combinatorics import Permutation

from ..internal_types import *
from ..exceptions import FiberCoverError

def as_array(p: Union[Permutation, Sequence[int]], degree: Optional[int]=None) -> List[int]:
    """0-based image array of p, padded to degree with fixed points."""
    arr = list(p.array_form) if isinstance(p, Permutation) else list(p)
    if degree is not None:
        if len(arr) > degree:
            raise FiberCoverError(f"Permutation of size {len(arr)} does not fit degree {degree}")
        arr.extend(range(len(arr), degree))
    return arr

def as_perm(arr: Sequence[int], degree: Optional[int]=None) -> Permutation:
    return Permutation(as_array(arr, degree), size=degree if degree is not None else len(arr))

def perm_from_one_based(images: Sequence[int]) -> Permutation:
    """Build a permutation from 1-based one-line image notation."""
    arr = [int(v) - 1 for v in images]
    if sorted(arr) != list(range(len(arr))):
        raise FiberCoverError(f"{list(images)} is not a permutation in one-line notation")
    return Permutation(arr, size=len(arr))

def perm_to_one_based(p: Union[Permutation, Sequence[int]], degree: Optional[int]=None) -> List[int]:
    return [v + 1 for v in as_array(p, degree)]

def identity_array(degree: int) -> List[int]:
    return list(range(degree))

def compose_arrays(p: Sequence[int], q: Sequence[int]) -> List[int]:
    """p o q as arrays."""
    return [p[j] for j in q]

def invert_array(p: Sequence[int]) -> List[int]:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return inv

def power_array(p: Sequence[int], exponent: int) -> List[int]:
    base = list(p) if exponent >= 0 else invert_array(p)
    result = identity_array(len(p))
    e = abs(exponent)
    while e > 0:
        if e & 1:
            result = compose_arrays(result, base)
        base = compose_arrays(base, base)
        e >>= 1
    return result

def is_identity_array(p: Sequence[int]) -> bool:
    return all(i == j for i, j in enumerate(p))

def compose(p: Permutation, q: Permutation) -> Permutation:
    """p o q: apply q first."""
    return q * p

def orbits_of_arrays(gens: Sequence[Sequence[int]], degree: int) -> List[List[int]]:
    """Orbits of the group generated by the image arrays, each sorted, in order of least element."""
    seen = [False] * degree
    orbits: List[List[int]] = []
    for start in range(degree):
        if seen[start]:
            continue
        seen[start] = True
        orbit = [start]
        frontier = [start]
        while len(frontier) > 0:
            i = frontier.pop()
            for g in gens:
                j = g[i]
                if not seen[j]:
                    seen[j] = True
                    orbit.append(j)
                    frontier.append(j)
        orbits.append(sorted(orbit))
    return orbits

def cycle_type(p: Sequence[int]) -> Tuple[int, ...]:
    """Sorted cycle lengths, fixed points included."""
    seen = [False] * len(p)
    lengths: List[int] = []
    for start in range(len(p)):
        if seen[start]:
            continue
        n = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = p[i]
            n += 1
        lengths.append(n)
    return tuple(sorted(lengths))

def word_array(gen_arrays: Mapping[int, Sequence[int]], word: Iterable[Letter], degree: int) -> List[int]:
    """Left-action image of a word: P_{a_1 ... a_k} = P_{a_1} o ... o P_{a_k}."""
    inverses: Dict[int, List[int]] = {}
    result = identity_array(degree)
    for a in word:
        if a > 0:
            g = gen_arrays[a]
        else:
            if -a not in inverses:
                inverses[-a] = invert_array(gen_arrays[-a])
            g = inverses[-a]
        result = compose_arrays(result, g)
    return result
