# Copyright (c) 2023 Samuel J. McKelvie
#
# MIT License - See LICENSE file accompanying this package.
#

"""
Exact integer matrices and their Smith normal form.

Relation matrices coming out of Reidemeister-Schreier rewriting are large,
sparse, and mostly +-1. They are first reduced by eliminating unit pivots on
a sparse representation; whatever is left is put in Smith normal form by a
dense extended-Euclid elimination that always pivots on the entry of least
absolute value.
"""

from __future__ import annotations

from ..internal_types import *
from ..exceptions import FiberCoverError
from ..pkg_logging import logger

SparseRow = Dict[int, int]
"""Column index -> nonzero entry."""

class IntMatrix:
    """A dense matrix of Python ints."""

    nrows: int
    ncols: int
    entries: List[List[int]]

    def __init__(self, entries: Iterable[Iterable[int]], *, ncols: Optional[int]=None):
        self.entries = [[int(v) for v in row] for row in entries]
        self.nrows = len(self.entries)
        if ncols is None:
            if self.nrows == 0:
                raise FiberCoverError("Column count is required for a matrix with no rows")
            ncols = len(self.entries[0])
        self.ncols = ncols
        for row in self.entries:
            if len(row) != ncols:
                raise FiberCoverError(f"Ragged matrix: row of length {len(row)} in a matrix with {ncols} columns")

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> IntMatrix:
        return cls([[0] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], nrows: int) -> IntMatrix:
        return cls([[col[i] for col in columns] for i in range(nrows)], ncols=len(columns))

    @classmethod
    def from_sparse_rows(cls, rows: Sequence[SparseRow], ncols: int) -> IntMatrix:
        dense = []
        for row in rows:
            r = [0] * ncols
            for j, v in row.items():
                r[j] = v
            dense.append(r)
        return cls(dense, ncols=ncols)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    def column(self, j: int) -> List[int]:
        return [row[j] for row in self.entries]

    def columns(self) -> List[List[int]]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> IntMatrix:
        return IntMatrix([self.column(j) for j in range(self.ncols)], ncols=self.nrows)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.ncols != other.nrows:
            raise FiberCoverError(f"Shape mismatch {self.shape} @ {other.shape}")
        cols = other.columns()
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.entries],
            ncols=other.ncols
          )

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        if self.shape != other.shape:
            raise FiberCoverError(f"Shape mismatch {self.shape} - {other.shape}")
        return IntMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            ncols=self.ncols
          )

    def apply(self, v: Sequence[int]) -> List[int]:
        return [sum(a * b for a, b in zip(row, v)) for row in self.entries]

    def sparse_rows(self) -> List[SparseRow]:
        return [{j: v for j, v in enumerate(row) if v != 0} for row in self.entries]

    def to_jsonable(self) -> List[List[int]]:
        return [list(row) for row in self.entries]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.shape, tuple(tuple(row) for row in self.entries)))

    def __str__(self) -> str:
        return f"IntMatrix({self.entries})"

    def __repr__(self) -> str:
        return str(self)

class SNFResult:
    """The invariant factors of a matrix, with optional unimodular witnesses U, V such that U M V = D."""

    shape: Tuple[int, int]

    diagonal: List[int]
    """min(rows, cols) entries d_1 | d_2 | ..., nonnegative, zeros last."""

    rank: int

    left: Optional[IntMatrix]
    right: Optional[IntMatrix]

    def __init__(self, shape: Tuple[int, int], diagonal: List[int], *, left: Optional[IntMatrix]=None, right: Optional[IntMatrix]=None):
        self.shape = shape
        self.diagonal = diagonal
        self.rank = sum(1 for v in diagonal if v != 0)
        self.left = left
        self.right = right

    @property
    def invariant_factors(self) -> List[int]:
        return self.diagonal

    def torsion(self) -> List[int]:
        """Invariant factors greater than 1."""
        return [v for v in self.diagonal if v > 1]

    def cokernel_rank(self) -> int:
        """Free rank of Z^cols / rowspace, for a relation matrix with one row per relator."""
        return self.shape[1] - self.rank

    def diagonal_matrix(self) -> IntMatrix:
        m, n = self.shape
        d = IntMatrix.zeros(m, n)
        for k, v in enumerate(self.diagonal):
            d.entries[k][k] = v
        return d

    def __str__(self) -> str:
        return f"SNFResult(shape={self.shape}, rank={self.rank}, diagonal={self.diagonal})"

    def __repr__(self) -> str:
        return str(self)

def _eliminate_unit_pivots(rows: List[SparseRow]) -> Tuple[int, List[SparseRow]]:
    """Remove +-1 pivots (and their row and column) until none remain.

       Returns the number of pivots removed and the residual rows. Removing a
       unit pivot leaves the remaining invariant factors unchanged.
    """
    active: Dict[int, SparseRow] = {k: dict(row) for k, row in enumerate(rows) if len(row) > 0}
    col_rows: Dict[int, Set[int]] = {}
    for k, row in active.items():
        for j in row:
            col_rows.setdefault(j, set()).add(k)
    pivots = 0
    progress = True
    while progress:
        progress = False
        for k in sorted(active, key=lambda key: len(active[key])):
            row = active.get(k)
            if row is None:
                continue
            units = [j for j, v in row.items() if v == 1 or v == -1]
            if len(units) == 0:
                continue
            c = min(units, key=lambda j: (len(col_rows[j]), j))
            u = row[c]
            for other in sorted(col_rows[c]):
                if other == k:
                    continue
                target = active[other]
                factor = target[c] * u
                for j, v in row.items():
                    nv = target.get(j, 0) - factor * v
                    if nv == 0:
                        if j in target:
                            del target[j]
                            col_rows[j].discard(other)
                    else:
                        if j not in target:
                            col_rows.setdefault(j, set()).add(other)
                        target[j] = nv
                if len(target) == 0:
                    del active[other]
            for j in row:
                col_rows[j].discard(k)
            del active[k]
            pivots += 1
            progress = True
    return pivots, [active[k] for k in sorted(active)]

def _dense_snf(
        a: List[List[int]],
        left: Optional[List[List[int]]]=None,
        right: Optional[List[List[int]]]=None,
      ) -> List[int]:
    """In-place SNF of a; left and right, when given, accumulate the row and column operations."""
    m = len(a)
    n = len(a[0]) if m > 0 else 0

    def swap_rows(i1: int, i2: int) -> None:
        if i1 != i2:
            a[i1], a[i2] = a[i2], a[i1]
            if left is not None:
                left[i1], left[i2] = left[i2], left[i1]

    def swap_cols(j1: int, j2: int) -> None:
        if j1 != j2:
            for row in a:
                row[j1], row[j2] = row[j2], row[j1]
            if right is not None:
                for row in right:
                    row[j1], row[j2] = row[j2], row[j1]

    def add_row(dst: int, src: int, k: int) -> None:
        """row dst += k * row src"""
        rs, rd = a[src], a[dst]
        for j in range(n):
            if rs[j] != 0:
                rd[j] += k * rs[j]
        if left is not None:
            ls, ld = left[src], left[dst]
            for j in range(len(ld)):
                ld[j] += k * ls[j]

    def add_col(dst: int, src: int, k: int) -> None:
        """col dst += k * col src"""
        for row in a:
            if row[src] != 0:
                row[dst] += k * row[src]
        if right is not None:
            for row in right:
                row[dst] += k * row[src]

    s = 0
    while s < min(m, n):
        best: Optional[Tuple[int, int]] = None
        best_abs = 0
        for i in range(s, m):
            row = a[i]
            for j in range(s, n):
                v = row[j]
                if v != 0 and (best is None or abs(v) < best_abs):
                    best = (i, j)
                    best_abs = abs(v)
                    if best_abs == 1:
                        break
            if best_abs == 1:
                break
        if best is None:
            break
        swap_rows(s, best[0])
        swap_cols(s, best[1])
        while True:
            p = a[s][s]
            for i in range(s + 1, m):
                if a[i][s] != 0:
                    add_row(i, s, -(a[i][s] // p))
            for j in range(s + 1, n):
                if a[s][j] != 0:
                    add_col(j, s, -(a[s][j] // p))
            rest_col = [i for i in range(s + 1, m) if a[i][s] != 0]
            rest_row = [j for j in range(s + 1, n) if a[s][j] != 0]
            if len(rest_col) > 0 or len(rest_row) > 0:
                # a remainder smaller than the pivot is left; make it the new pivot
                cands = [(abs(a[i][s]), 0, i) for i in rest_col] + [(abs(a[s][j]), 1, j) for j in rest_row]
                _, kind, idx = min(cands)
                if kind == 0:
                    swap_rows(s, idx)
                else:
                    swap_cols(s, idx)
                continue
            bad_row = None
            for i in range(s + 1, m):
                if any(a[i][j] % p != 0 for j in range(s + 1, n)):
                    bad_row = i
                    break
            if bad_row is None:
                break
            add_row(s, bad_row, 1)
        if a[s][s] < 0:
            a[s] = [-v for v in a[s]]
            if left is not None:
                left[s] = [-v for v in left[s]]
        s += 1
    return [a[k][k] for k in range(min(m, n))]

def smith_normal_form(M: IntMatrix, *, with_transforms: bool=False) -> SNFResult:
    """Exact Smith normal form.

       Without transforms, unit pivots are first eliminated sparsely; the dense
       elimination only sees what remains.
    """
    m, n = M.shape
    if with_transforms:
        a = [list(row) for row in M.entries]
        left = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
        right = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        diagonal = _dense_snf(a, left, right)
        return SNFResult((m, n), diagonal, left=IntMatrix(left, ncols=m), right=IntMatrix(right, ncols=n))
    return sparse_smith_normal_form(M.sparse_rows(), n, nrows=m)

def sparse_smith_normal_form(rows: Sequence[SparseRow], ncols: int, *, nrows: Optional[int]=None) -> SNFResult:
    """Invariant factors of the matrix with the given sparse rows."""
    m = len(rows) if nrows is None else nrows
    pivots, residual = _eliminate_unit_pivots(list(rows))
    used_cols = sorted({j for row in residual for j in row})
    col_pos = {j: k for k, j in enumerate(used_cols)}
    dense = []
    for row in residual:
        r = [0] * len(used_cols)
        for j, v in row.items():
            r[col_pos[j]] = v
        dense.append(r)
    logger.debug(f"SNF of {m}x{ncols}: {pivots} unit pivots, dense residual {len(dense)}x{len(used_cols)}")
    residual_diag = [v for v in _dense_snf(dense) if v != 0] if len(dense) > 0 and len(used_cols) > 0 else []
    nonzero = [1] * pivots + residual_diag
    diagonal = nonzero + [0] * (min(m, ncols) - len(nonzero))
    return SNFResult((m, ncols), diagonal)

def abelian_invariants(relations: Sequence[SparseRow], num_generators: int) -> Tuple[int, List[int]]:
    """(free rank, torsion factors > 1) of the abelian group with the given relation rows."""
    snf = sparse_smith_normal_form(relations, num_generators)
    return num_generators - snf.rank, snf.torsion()
