"""Pure-Python kernels: GF(2) rank, cut-rank tables, depth feasibility.

These are the hot inner loops of every exact search in the package.  A
compiled twin lives in ``_fastcore.pyx``; both expose the same three
functions and are interchangeable (see ``vmkit._kernels``).

Bit conventions: a matrix row or a vertex subset is a Python int whose
bit i refers to column/vertex index i.
"""

from __future__ import annotations

from typing import List, Sequence


def rank_masks(rows: Sequence[int], ncols: int) -> int:
    """GF(2) rank of bit-packed rows via xor elimination.

    ``ncols`` is accepted for interface parity with the compiled kernel
    (which needs it to pick a word width); the computation itself only
    looks at set bits.
    """
    pivots: dict[int, int] = {}
    for r in rows:
        cur = r
        while cur:
            low = cur & -cur
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = cur
                break
            cur ^= piv
    return len(pivots)


def cutrank_table(adj: Sequence[int], n: int) -> bytearray:
    """Table of cut-ranks for every vertex subset of an n-vertex graph.

    ``adj[i]`` is the neighbor mask of vertex i.  Entry ``t[S]`` is the
    GF(2) rank of the S x (complement of S) adjacency submatrix; zeroing
    the columns inside S is equivalent to deleting them, so no column
    compaction is needed.  Uses the symmetry t[S] == t[~S] to halve work.
    """
    full = (1 << n) - 1
    table = bytearray(1 << n)
    for mask in range(1 << n):
        comp = full ^ mask
        if comp < mask:
            table[mask] = table[comp]
            continue
        pivots: dict[int, int] = {}
        m = mask
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            cur = adj[i] & comp
            while cur:
                low = cur & -cur
                piv = pivots.get(low)
                if piv is None:
                    pivots[low] = cur
                    break
                cur ^= piv
        table[mask] = len(pivots)
    return table


def depth_levels(rho: Sequence[int], n: int, k: int) -> List[bytearray]:
    """Feasibility bitmaps for width-k bounded-height decompositions.

    ``levels[h][W]`` is 1 iff the vertex set W can be the leaf set of a
    rooted subtree of height at most h in which every internal node has
    at least two children and width at most k, where the width of a node
    with child leaf-sets P1..Pd and leaf set W counts every union of
    parts both with and without the outside complement.  By symmetry of
    the cut-rank function the complement side of a union U reads
    ``rho[W ^ U]``, so the whole check stays inside subsets of W.

    The full vertex set is feasible at height k iff the graph admits a
    width-k, radius-k decomposition.
    """
    size = 1 << n
    levels = [bytearray(size) for _ in range(k + 1)]
    for i in range(n):
        levels[0][1 << i] = 1

    for h in range(1, k + 1):
        prev = levels[h - 1]
        cur = levels[h]
        cur[:] = prev
        for w in range(3, size):
            if cur[w] or (w & (w - 1)) == 0 or rho[w] > k:
                continue
            if _partition_feasible(w, rho, prev, k):
                cur[w] = 1
    return levels


def _partition_feasible(w: int, rho: Sequence[int], prev: bytearray, k: int) -> bool:
    """Search for a partition of w into >= 2 prev-feasible parts whose
    every partial union U keeps both rho[U] and rho[w ^ U] within k."""

    def rec(remaining: int, unions: List[int], nparts: int) -> bool:
        if not remaining:
            return nparts >= 2
        low = remaining & -remaining
        rest = remaining ^ low
        sub = rest
        while True:
            part = sub | low
            if prev[part]:
                grown = unions[:]
                ok = True
                for u in unions:
                    nu = u | part
                    if rho[nu] > k or rho[w ^ nu] > k:
                        ok = False
                        break
                    grown.append(nu)
                if ok and rec(remaining ^ part, grown, nparts + 1):
                    return True
            if not sub:
                return False
            sub = (sub - 1) & rest

    return rec(w, [0], 0)
