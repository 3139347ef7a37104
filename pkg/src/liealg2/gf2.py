"""Dense exact linear algebra over GF(2) using int bitsets.

Vectors are Python ints (bit j = coordinate j), matrices are tuples of row
bitmasks.  Everything is deterministic: elimination scans columns left to
right and picks the lowest remaining row as pivot, solve() zeroes all free
variables, so witnesses are reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple


@dataclass(frozen=True)
class Gf2Matrix:
    nrows: int
    ncols: int
    rows: Tuple[int, ...]  # row bitmasks, bit j = column j

    def __post_init__(self) -> None:
        if len(self.rows) != self.nrows:
            raise ValueError("row count mismatch")
        mask = (1 << self.ncols) - 1
        for r in self.rows:
            if r & ~mask:
                raise ValueError("row has bits beyond ncols")

    @staticmethod
    def from_rows(rows: Sequence[int], ncols: int) -> "Gf2Matrix":
        return Gf2Matrix(len(rows), ncols, tuple(rows))

    @staticmethod
    def from_dense(entries: Sequence[Sequence[int]]) -> "Gf2Matrix":
        nrows = len(entries)
        ncols = len(entries[0]) if nrows else 0
        rows = []
        for row in entries:
            if len(row) != ncols:
                raise ValueError("ragged matrix")
            rows.append(sum((int(x) & 1) << j for j, x in enumerate(row)))
        return Gf2Matrix(nrows, ncols, tuple(rows))

    @staticmethod
    def identity(n: int) -> "Gf2Matrix":
        return Gf2Matrix(n, n, tuple(1 << i for i in range(n)))

    @staticmethod
    def zero(nrows: int, ncols: int) -> "Gf2Matrix":
        return Gf2Matrix(nrows, ncols, (0,) * nrows)

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def column(self, j: int) -> int:
        c = 0
        for i, r in enumerate(self.rows):
            c |= ((r >> j) & 1) << i
        return c

    def transpose(self) -> "Gf2Matrix":
        cols = [self.column(j) for j in range(self.ncols)]
        return Gf2Matrix(self.ncols, self.nrows, tuple(cols))

    def apply(self, v: int) -> int:
        """Matrix-vector product M*v (v indexed by columns)."""
        out = 0
        for i, r in enumerate(self.rows):
            out |= parity(r & v) << i
        return out

    def matmul(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        rows = []
        for r in self.rows:
            acc = 0
            m = r
            while m:
                low = m & -m
                acc ^= other.rows[low.bit_length() - 1]
                m ^= low
            rows.append(acc)
        return Gf2Matrix(self.nrows, other.ncols, tuple(rows))

    def is_zero(self) -> bool:
        return all(r == 0 for r in self.rows)

    def stack(self, other: "Gf2Matrix") -> "Gf2Matrix":
        if self.ncols != other.ncols:
            raise ValueError("dimension mismatch")
        return Gf2Matrix(self.nrows + other.nrows, self.ncols,
                         self.rows + other.rows)


def parity(x: int) -> int:
    return x.bit_count() & 1


def vector_from_bits(bits: Iterable[int]) -> int:
    v = 0
    for j, b in enumerate(bits):
        v |= (int(b) & 1) << j
    return v


def vector_to_bits(v: int, length: int) -> List[int]:
    return [(v >> j) & 1 for j in range(length)]


def _rref(rows: List[int], ncols: int) -> Tuple[List[int], List[int]]:
    """Reduced row echelon form in place; returns (rows, pivot columns)."""
    pivots: List[int] = []
    rank = 0
    for col in range(ncols):
        bit = 1 << col
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r] & bit:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r] & bit:
                rows[r] ^= rows[rank]
        pivots.append(col)
        rank += 1
    return rows, pivots


def rank(m: Gf2Matrix) -> int:
    _, pivots = _rref(list(m.rows), m.ncols)
    return len(pivots)


def solve(m: Gf2Matrix, b: int) -> Optional[int]:
    """Some x with M x = b, or None if b is not in the image.

    Deterministic: free variables are set to zero.
    """
    if b >> m.nrows:
        raise ValueError("rhs has bits beyond nrows")
    aug_col = 1 << m.ncols
    rows = [m.rows[i] | (((b >> i) & 1) * aug_col) for i in range(m.nrows)]
    rows, pivots = _rref(rows, m.ncols)
    for r in rows[len(pivots):]:
        if r & aug_col:
            return None
    x = 0
    for r, col in enumerate(pivots):
        if rows[r] & aug_col:
            x |= 1 << col
    return x


def nullspace(m: Gf2Matrix) -> List[int]:
    """Deterministic basis of ker M, one vector per free column."""
    rows, pivots = _rref(list(m.rows), m.ncols)
    pivot_set = set(pivots)
    basis = []
    for col in range(m.ncols):
        if col in pivot_set:
            continue
        v = 1 << col
        for r, pcol in enumerate(pivots):
            if rows[r] & (1 << col):
                v |= 1 << pcol
        basis.append(v)
    return basis


def in_image(m: Gf2Matrix, b: int) -> bool:
    return solve(m, b) is not None


def mat_pow_is_zero(m: Gf2Matrix, n: int) -> bool:
    """Whether M^n = 0, by repeated squaring past n."""
    if m.nrows != m.ncols:
        raise ValueError("square matrix required")
    acc = m
    steps = 1
    while steps < n:
        if acc.is_zero():
            return True
        acc = acc.matmul(acc)
        steps *= 2
    return acc.is_zero()
