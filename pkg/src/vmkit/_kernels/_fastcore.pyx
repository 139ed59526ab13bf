# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(2) kernels: rank, cut-rank tables, depth feasibility.

Word-level twin of ``vmkit._kernels.pure`` for inputs that fit in 64-bit
rows; wider inputs are delegated to the pure backend.  See that module
for the algorithm notes.
"""

from libc.stdlib cimport free, malloc

cdef extern from *:
    int __builtin_ctzll(unsigned long long)
    int __builtin_popcount(unsigned int)

ctypedef unsigned long long u64


def rank_masks(rows, ncols):
    """GF(2) rank of bit-packed rows."""
    if ncols > 64:
        from vmkit._kernels import pure
        return pure.rank_masks(rows, ncols)
    cdef u64 piv[64]
    cdef u64 occupied = 0
    cdef u64 cur
    cdef int idx
    cdef int rank = 0
    for r in rows:
        cur = <u64> r
        while cur:
            idx = __builtin_ctzll(cur)
            if occupied >> idx & 1:
                cur ^= piv[idx]
            else:
                piv[idx] = cur
                occupied |= (<u64> 1) << idx
                rank += 1
                break
    return rank


def cutrank_table(adj, int n):
    """Cut-rank of every vertex subset (see the pure twin)."""
    if n > 24:
        from vmkit._kernels import pure
        return pure.cutrank_table(adj, n)
    cdef u64 aj[24]
    cdef u64 piv[64]
    cdef u64 occupied, cur, comp
    cdef int i, idx, rank
    cdef long mask, m
    cdef long size = 1 << n
    cdef long full = size - 1
    for i in range(n):
        aj[i] = <u64> adj[i]
    out = bytearray(size)
    cdef unsigned char[:] ov = out
    for mask in range(size):
        if (full ^ mask) < mask:
            ov[mask] = ov[full ^ mask]
            continue
        comp = <u64> (full ^ mask)
        rank = 0
        occupied = 0
        m = mask
        while m:
            i = __builtin_ctzll(<u64> m)
            m &= m - 1
            cur = aj[i] & comp
            while cur:
                idx = __builtin_ctzll(cur)
                if occupied >> idx & 1:
                    cur ^= piv[idx]
                else:
                    piv[idx] = cur
                    occupied |= (<u64> 1) << idx
                    rank += 1
                    break
        ov[mask] = <unsigned char> rank
    return out


def depth_levels(rho, int n, int k):
    """Feasibility bitmaps for width-k bounded-height decompositions
    (see the pure twin for the recurrence)."""
    if n > 20:
        from vmkit._kernels import pure
        return pure.depth_levels(rho, n, k)
    cdef long size = 1 << n
    cdef bytes rho_b = bytes(rho)
    cdef const unsigned char[:] rv = rho_b
    levels = [bytearray(size) for _ in range(k + 1)]
    cdef unsigned char[:] base = levels[0]
    cdef int i
    for i in range(n):
        base[1 << i] = 1

    cdef unsigned int * buf = <unsigned int *> malloc(size * sizeof(unsigned int))
    if buf is NULL:
        raise MemoryError()
    cdef unsigned char[:] prev
    cdef unsigned char[:] cur
    cdef long w
    cdef int h
    try:
        for h in range(1, k + 1):
            prev = levels[h - 1]
            cur = levels[h]
            cur[:] = prev
            for w in range(3, size):
                if cur[w] or __builtin_popcount(<unsigned int> w) < 2 or rv[w] > k:
                    continue
                buf[0] = 0
                if _feasible(<unsigned int> w, <unsigned int> w, 0, 1, &rv[0], &prev[0], k, buf, 0):
                    cur[w] = 1
    finally:
        free(buf)
    return levels


cdef bint _feasible(unsigned int remaining, unsigned int w, int ubase, int ulen,
                    const unsigned char * rho, const unsigned char * prev,
                    int k, unsigned int * buf, int nparts) noexcept:
    if remaining == 0:
        return nparts >= 2
    cdef unsigned int low = remaining & (-remaining)
    cdef unsigned int rest = remaining ^ low
    cdef unsigned int sub = rest
    cdef unsigned int part, nu
    cdef int i
    cdef bint ok
    while True:
        part = sub | low
        if prev[part]:
            ok = True
            for i in range(ulen):
                nu = buf[ubase + i] | part
                if rho[nu] > k or rho[w ^ nu] > k:
                    ok = False
                    break
                buf[ubase + ulen + i] = nu
            # grown union list is old entries followed by the new ones
            if ok and _feasible(remaining ^ part, w, ubase, ulen * 2,
                                rho, prev, k, buf, nparts + 1):
                return True
        if sub == 0:
            return False
        sub = (sub - 1) & rest
