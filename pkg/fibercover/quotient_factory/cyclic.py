# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
Cyclic solutions of the abelianized cover conditions.

With k rows and sigma_i = c^(e_i) for an N-cycle c, conditions I-III become
congruences mod N in the exponents. Write P = R*mu, l = lambda and
S_i = e_1 + ... + e_i. The system is

    P*S_i + l*(e_(i+1) - e_i) = 0   for i = 1..k (e_(k+1) = e_1)
    S_k = 0

with e_1 = 1. Taking the exponents palindromic (e_i = e_(k+1-i), so e_k = 1)
pairs row i with row k-i, leaving the first half of the rows. Scaling by
powers of l gives an integer recurrence f_1 = 1,

    f_(i+1) = l*f_i - P * sum_(j<=i) l^(i-j) f_j,   e_i = f_i / l^(i-1),

and the closing condition (S_(k/2) = 0 for even k, 2*S_((k-1)/2) + e_((k+1)/2) = 0
for odd k) becomes N = 0 for an integer N depending only on k, P and l.
"""

from __future__ import annotations

from math import gcd

from sympy.combinatorics import Permutation

from ..internal_types import *
from ..exceptions import DegenerateSolutionError, PreconditionError
from ..pkg_logging import logger
from ..slope_calculus import Slope
from ..homology_engine.snf import IntMatrix, smith_normal_form

def _recurrence(k: int, P: int, l: int) -> List[int]:
    """f_1 .. f_(h+1) for h = k // 2 (index 0 holds f_1)."""
    h = k // 2
    f = [1]
    while len(f) < h + 1:
        i = len(f)
        tail = sum(l ** (i - j) * f[j - 1] for j in range(1, i + 1))
        f.append(l * f[-1] - P * tail)
    return f

def cyclic_modulus(k: int, R: int, s: Slope) -> int:
    """The signed modulus N of the cyclic solution for k rows.

       N = R mu - 3 lambda for k = 3 and R mu - 2 lambda for k = 4.
    """
    if k < 3:
        raise PreconditionError(f"Cyclic solutions need k >= 3 rows, got {k}")
    P = R * s.mu
    l = s.lam
    h = k // 2
    f = _recurrence(k, P, l)
    if k % 2 == 0:
        total = sum(l ** (h - j) * f[j - 1] for j in range(1, h + 1))
    else:
        total = 2 * sum(l ** (h - j + 1) * f[j - 1] for j in range(1, h + 1)) + f[h]
    return -total

def cyclic_congruences(k: int, R: int, s: Slope) -> List[List[int]]:
    """Coefficient rows over (e_1, ..., e_k) of the full abelianized system, all = 0 mod N."""
    P = R * s.mu
    l = s.lam
    rows: List[List[int]] = []
    for i in range(1, k + 1):
        row = [P if j <= i else 0 for j in range(1, k + 1)]
        nxt = i % k
        row[nxt] += l
        row[i - 1] -= l
        rows.append(row)
    rows.append([1] * k)
    return rows

def cyclic_conditions_hold(k: int, R: int, s: Slope, modulus: int, exponents: Sequence[int]) -> bool:
    """Substitute the exponents into every congruence of the system."""
    N = abs(modulus)
    if len(exponents) != k:
        return False
    for row in cyclic_congruences(k, R, s):
        if sum(a * e for a, e in zip(row, exponents)) % N != 0:
            return False
    return True

def _balanced(value: int, N: int) -> int:
    """The representative of value mod N in (-N/2, N/2]."""
    r = value % N
    return r - N if 2 * r > N else r

def solve_congruences(rows: Sequence[Sequence[int]], rhs: Sequence[int], modulus: int) -> Optional[List[int]]:
    """Some x with rows . x = rhs (mod modulus), or None if there is none.

       Uses the Smith normal form U A V = D: solve D y = U b one coordinate at a
       time and map back with x = V y.
    """
    N = abs(modulus)
    if N == 0:
        raise PreconditionError("Congruences need a nonzero modulus")
    ncols = len(rows[0])
    snf = smith_normal_form(IntMatrix(rows, ncols=ncols), with_transforms=True)
    assert snf.left is not None and snf.right is not None
    c = snf.left.apply(rhs)
    y = [0] * ncols
    for i, ci in enumerate(c):
        d = snf.diagonal[i] if i < len(snf.diagonal) else 0
        g = gcd(d, N)
        if ci % g != 0:
            return None
        if i >= ncols:
            continue
        reduced = N // g
        if reduced == 1:
            y[i] = 0
        else:
            y[i] = (ci // g) * pow((d // g) % reduced, -1, reduced) % reduced
    return [v % N for v in snf.right.apply(y)]

def _palindrome_rows(k: int) -> List[List[int]]:
    """e_(k+1-i) - e_i over the unknowns e_2 .. e_k, for i = 1 .. k//2 (e_1 is on the right-hand side)."""
    rows: List[List[int]] = []
    for i in range(1, k // 2 + 1):
        row = [0] * (k - 1)
        row[k - i - 1] += 1
        if i > 1:
            row[i - 2] -= 1
        rows.append(row)
    return rows

def _palindrome_rhs(k: int) -> List[int]:
    return [1] + [0] * (k // 2 - 1)

class CyclicSolution:
    """A modulus N and exponents e_1 = 1, e_2, ..., e_k with sigma_i = c^(e_i) for an N-cycle c."""

    k: int
    R: int
    slope: Slope

    modulus: int
    """Signed N; the cycle has length |N|."""

    exponents: Tuple[int, ...]
    """e_1 .. e_k, balanced mod |N|."""

    palindromic: bool
    """True when the exponents came from the palindromic reduction."""

    def __init__(self, k: int, R: int, slope: Slope, modulus: int, exponents: Sequence[int], *, palindromic: bool=True):
        self.k = k
        self.R = R
        self.slope = slope
        self.modulus = modulus
        self.exponents = tuple(exponents)
        self.palindromic = palindromic

    @property
    def order(self) -> int:
        return abs(self.modulus)

    def cycle(self) -> Permutation:
        N = self.order
        return Permutation([(j + 1) % N for j in range(N)])

    def sigmas(self) -> List[Permutation]:
        c = self.cycle()
        return [c ** e for e in self.exponents]

    def check(self) -> bool:
        return cyclic_conditions_hold(self.k, self.R, self.slope, self.modulus, self.exponents)

    def to_jsonable(self) -> JsonableDict:
        return dict(
            k=self.k,
            R=self.R,
            slope=self.slope.to_jsonable(),
            modulus=self.modulus,
            exponents=list(self.exponents),
          )

    def __str__(self) -> str:
        return f"CyclicSolution(k={self.k}, N={self.modulus}, e={list(self.exponents)})"

    def __repr__(self) -> str:
        return str(self)

def cyclic_solution(k: int, R: int, s: Slope) -> CyclicSolution:
    """Exponents for the k-row cyclic cover. Raises DegenerateSolutionError when N = 0.

       The palindromic reduction needs lambda invertible mod N; otherwise the full
       congruence system is solved directly, palindromic exponents first.
    """
    N = cyclic_modulus(k, R, s)
    if N == 0:
        raise DegenerateSolutionError(f"Cyclic modulus is 0 for k={k}, R={R}, slope {s}")
    M = abs(N)
    P = R * s.mu
    l = s.lam
    palindromic = gcd(l, M) == 1
    if palindromic:
        f = _recurrence(k, P, l)
        inv_l = pow(l % M, -1, M) if M > 1 else 0
        half = [f[i] * pow(inv_l, i, M) % M if M > 1 else 0 for i in range(len(f))]
        exps = [0] * k
        for i in range(k):
            exps[i] = half[min(i, k - 1 - i)]
        exps[0] = 1
        exps[k - 1] = 1
    else:
        rows = cyclic_congruences(k, R, s)
        # e_1 = 1 is fixed; move its column to the right-hand side
        rhs = [-row[0] for row in rows]
        rest_rows = [row[1:] for row in rows]
        rest = solve_congruences(rest_rows + _palindrome_rows(k), rhs + _palindrome_rhs(k), M)
        palindromic = rest is not None
        if rest is None:
            rest = solve_congruences(rest_rows, rhs, M)
        if rest is None:
            raise DegenerateSolutionError(f"No cyclic solution mod {M} for k={k}, R={R}, slope {s}")
        exps = [1] + rest
    solution = CyclicSolution(k, R, s, N, [_balanced(e, M) if M > 1 else 0 for e in exps], palindromic=palindromic)
    if not solution.check():
        raise DegenerateSolutionError(f"{solution} does not satisfy the abelianized conditions")
    logger.debug(f"Cyclic solution for k={k}, R={R}, slope {s}: {solution}")
    return solution
