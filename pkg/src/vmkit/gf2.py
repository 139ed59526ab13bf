"""Dense GF(2) matrices, rank, and the cut-rank function of a graph.

Rows are bit-packed into Python ints (bit j of ``data[i]`` is entry
(i, j)).  Rank goes through the selected kernel backend; see
``vmkit._kernels``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from vmkit import _kernels
from vmkit.errors import VmkitError


@dataclass(frozen=True)
class BitMatrix:
    """Immutable dense matrix over GF(2).

    Invariant: every row fits in ``cols`` bits (padding bits are zero).
    """

    rows: int
    cols: int
    data: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise VmkitError("matrix dimensions must be nonnegative")
        if len(self.data) != self.rows:
            raise VmkitError("row count does not match data length")
        limit = 1 << self.cols
        for r in self.data:
            if not 0 <= r < limit:
                raise VmkitError("row has bits outside the column range")

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[int]]) -> "BitMatrix":
        """Build from a list of 0/1 rows."""
        nrows = len(entries)
        ncols = len(entries[0]) if nrows else 0
        data = []
        for row in entries:
            if len(row) != ncols:
                raise VmkitError("ragged rows")
            data.append(sum(1 << j for j, e in enumerate(row) if e % 2))
        return cls(nrows, ncols, tuple(data))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    def get(self, i: int, j: int) -> int:
        return (self.data[i] >> j) & 1

    def to_entries(self) -> list:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.data]

    def transpose(self) -> "BitMatrix":
        cols = []
        for j in range(self.cols):
            cols.append(sum(1 << i for i, r in enumerate(self.data) if (r >> j) & 1))
        return BitMatrix(self.cols, self.rows, tuple(cols))

    def submatrix(self, row_idx: Iterable[int], col_idx: Iterable[int]) -> "BitMatrix":
        col_idx = list(col_idx)
        data = []
        for i in row_idx:
            r = self.data[i]
            data.append(sum(1 << jj for jj, j in enumerate(col_idx) if (r >> j) & 1))
        return BitMatrix(len(data), len(col_idx), tuple(data))


def rank(matrix: BitMatrix) -> int:
    """GF(2) row rank.  The input is never modified."""
    return _kernels.rank_masks(matrix.data, matrix.cols)


def rank_of_masks(rows: Sequence[int], ncols: int) -> int:
    """Rank of raw bit-packed rows, bypassing BitMatrix construction."""
    return _kernels.rank_masks(rows, ncols)


def cut_rank(graph, subset) -> int:
    """Cut-rank of a vertex subset: rank of the S x (V minus S) block of
    the adjacency matrix.  Empty and full subsets give 0 directly.

    ``subset`` is an iterable of vertex labels; unknown labels raise
    InvalidVertexError.
    """
    mask = graph.mask_of(subset)
    return cut_rank_mask(graph, mask)


def cut_rank_mask(graph, mask: int) -> int:
    """Cut-rank from a precomputed index mask (internal fast path)."""
    full = (1 << graph.n) - 1
    if mask == 0 or mask == full:
        return 0
    comp = full ^ mask
    rows = []
    m = mask
    while m:
        i = (m & -m).bit_length() - 1
        m &= m - 1
        rows.append(graph.rows[i] & comp)
    return _kernels.rank_masks(rows, graph.n)


def cutrank_table(graph) -> bytearray:
    """Cut-rank of every vertex subset, indexed by subset mask."""
    return _kernels.cutrank_table(graph.rows, graph.n)
