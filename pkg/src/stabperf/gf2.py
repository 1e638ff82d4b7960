"""GF(2) linear algebra on integer bitmasks.

Vectors are Python ints (bit i = coordinate i), matrices are lists of row
masks.  Everything is exact; nothing here touches floating point.
"""

from __future__ import annotations

import numpy as np


def parity(x: int) -> int:
    return x.bit_count() & 1


def rank(rows: list[int]) -> int:
    """Rank of the row space over GF(2)."""
    pivots: list[int] = []
    for row in rows:
        for p in pivots:
            row = min(row, row ^ p)
        if row:
            pivots.append(row)
    return len(pivots)


def in_span(rows: list[int], v: int) -> bool:
    """True iff v lies in the GF(2) row space of rows."""
    return rank(rows + [v]) == rank(rows)


class LinearSolver:
    """Solves M x = b over GF(2) for a fixed matrix M (m rows, ncols bits).

    Rows are reduced once; each solve() is a back-substitution.  Free
    variables are set to zero, so solutions are deterministic.
    """

    def __init__(self, rows: list[int], ncols: int):
        self.m = len(rows)
        self.ncols = ncols
        # RREF with a transform record: red[i] = current row, ops[i] = which
        # original rows were combined into it.
        red = list(rows)
        ops = [1 << i for i in range(self.m)]
        pivots: list[tuple[int, int]] = []  # (column, row index)
        r = 0
        for col in range(ncols):
            bit = 1 << col
            pivot = next((i for i in range(r, self.m) if red[i] & bit), None)
            if pivot is None:
                continue
            red[r], red[pivot] = red[pivot], red[r]
            ops[r], ops[pivot] = ops[pivot], ops[r]
            for i in range(self.m):
                if i != r and red[i] & bit:
                    red[i] ^= red[r]
                    ops[i] ^= ops[r]
            pivots.append((col, r))
            r += 1
        self.rank = r
        self._red = red
        self._ops = ops
        self._pivots = pivots

    def solve(self, b: int) -> int | None:
        """A solution x of M x = b, or None when inconsistent."""
        # Transformed rhs: bit i of (ops[i] . b).
        x = 0
        rhs = [parity(self._ops[i] & b) for i in range(self.m)]
        for col, row in self._pivots:
            if rhs[row]:
                x |= 1 << col
        for i in range(self.rank, self.m):
            if rhs[i]:
                return None
        return x


def popcount_u64(a: np.ndarray) -> np.ndarray:
    """Vectorized popcount of a uint64 array."""
    return np.bitwise_count(a)


def pack_bits_rows(bits: np.ndarray) -> np.ndarray:
    """Pack a (m, k) 0/1 array (k <= 62) into int64 keys, bit j = column j."""
    k = bits.shape[1]
    weights = (1 << np.arange(k, dtype=np.int64))
    return bits.astype(np.int64) @ weights
