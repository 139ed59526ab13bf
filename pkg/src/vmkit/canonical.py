"""Canonical forms, isomorphism, induced-subgraph search, and exhaustive
enumeration of small non-isomorphic graphs.

Canonical labeling uses iterative color refinement (neighbor-count
signatures) with individualization backtracking; interchangeable twin
vertices are branched only once.  The canonical key of a graph is the
lexicographically smallest byte serialization of any refinement-
respecting relabeling, so two graphs are isomorphic iff their keys are
equal.  Exact but deliberately capped: beyond ``ISO_CAP`` vertices,
operations refuse instead of approximating.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from vmkit.errors import BudgetError
from vmkit.graphs import Graph

ISO_CAP = 12

_key_cache: Dict[Tuple, bytes] = {}
_CACHE_LIMIT = 1 << 21


@dataclass(frozen=True)
class CanonicalGraph:
    """Canonical adjacency bits plus the relabeling that produced them.

    ``relabeling[v]`` is the canonical position assigned to vertex v.
    """

    n: int
    key: bytes
    relabeling: Dict

    def __eq__(self, other):
        return isinstance(other, CanonicalGraph) and self.key == other.key

    def __hash__(self):
        return hash(self.key)


def _refine(n: int, rows: Sequence[int], colors: List[int]) -> List[int]:
    """Stable 1-dimensional refinement: split color classes by the
    multiset of neighbor colors until nothing changes.  New class ids
    follow the sorted signature order, so the result is independent of
    the input labeling."""
    while True:
        ncolors = max(colors) + 1
        cellmask = [0] * ncolors
        for v, c in enumerate(colors):
            cellmask[c] |= 1 << v
        sigs = [
            (colors[v],) + tuple((rows[v] & cm).bit_count() for cm in cellmask)
            for v in range(n)
        ]
        order = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        if len(order) == ncolors:
            return colors
        colors = [order[s] for s in sigs]


def _cells(n: int, colors: List[int]) -> List[List[int]]:
    ncolors = max(colors) + 1
    cells: List[List[int]] = [[] for _ in range(ncolors)]
    for v in range(n):
        cells[colors[v]].append(v)
    return cells


def _leaf_key(n: int, rows: Sequence[int], order: List[int], width: int) -> bytes:
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    out = bytearray([n])
    for v in order:
        r = rows[v]
        packed = 0
        while r:
            j = (r & -r).bit_length() - 1
            r &= r - 1
            packed |= 1 << pos[j]
        out += packed.to_bytes(width, "little")
    return bytes(out)


def canonical_key_rows(
    n: int,
    rows: Sequence[int],
    init_colors: Optional[Sequence[int]] = None,
    node_cap: int = 1_000_000,
) -> Tuple[bytes, Tuple[int, ...]]:
    """Canonical key and witness permutation for an index graph.

    ``init_colors`` fixes an initial partition that every considered
    relabeling must respect (used for bipartition-respecting matroid
    isomorphism).  Returns (key, order) where order[i] is the vertex
    placed at canonical position i.
    """
    if n == 0:
        return b"\x00", ()
    width = (n + 7) // 8
    best: List = [None, None]
    visited = [0]
    if init_colors is None:
        colors0 = [0] * n
    else:
        # refinement assumes contiguous class ids starting at 0
        dense = {c: i for i, c in enumerate(sorted(set(init_colors)))}
        colors0 = [dense[c] for c in init_colors]

    def rec(colors: List[int]):
        visited[0] += 1
        if visited[0] > node_cap:
            raise BudgetError("canonical labeling search exceeded its node cap")
        colors = _refine(n, rows, colors)
        cells = _cells(n, colors)
        target = None
        for cell in cells:
            if len(cell) > 1:
                target = cell
                break
        if target is None:
            order = [cell[0] for cell in cells]
            key = _leaf_key(n, rows, order, width)
            if best[0] is None or key < best[0]:
                best[0], best[1] = key, order
            return
        reps: List[int] = []
        for v in target:
            both = (1 << v)
            if any(
                not (rows[u] ^ rows[v]) & ~(both | (1 << u))
                for u in reps
            ):
                continue  # twin of an already-tried vertex
            reps.append(v)
            branched = [c + 1 if c > colors[v] else c for c in colors]
            for u in target:
                if u != v:
                    branched[u] = colors[v] + 1
            rec(branched)

    rec(colors0)
    return best[0], tuple(best[1])


def canonical_key(graph: Graph) -> bytes:
    """Cached canonical key of a graph's unlabeled structure."""
    cache_id = (graph.n, graph.rows)
    key = _key_cache.get(cache_id)
    if key is None:
        key, _ = canonical_key_rows(graph.n, graph.rows)
        if len(_key_cache) >= _CACHE_LIMIT:
            _key_cache.clear()
        _key_cache[cache_id] = key
    return key


def canonical_form(graph: Graph) -> CanonicalGraph:
    key, order = canonical_key_rows(graph.n, graph.rows)
    relabeling = {graph.labels[v]: i for i, v in enumerate(order)}
    # keep the cache warm for the common key-only path
    _key_cache.setdefault((graph.n, graph.rows), key)
    return CanonicalGraph(graph.n, key, relabeling)


def is_isomorphic(g: Graph, h: Graph, cap: int = ISO_CAP) -> bool:
    """Exact isomorphism via canonical forms, capped at ``cap`` vertices."""
    if g.n != h.n:
        return False
    if g.n > cap:
        raise BudgetError(f"isomorphism is exact only up to {cap} vertices")
    if g.edge_count() != h.edge_count() or g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_key(g) == canonical_key(h)


def _pattern_order(h: Graph) -> List[int]:
    """Vertex order for the induced-match backtracking: start at a
    maximum-degree vertex, then greedily maximize adjacency to the
    already-ordered prefix."""
    if h.n == 0:
        return []
    remaining = set(range(h.n))
    order = [max(remaining, key=lambda v: (h.rows[v].bit_count(), -v))]
    remaining.remove(order[0])
    while remaining:
        placed = 0
        for v in order:
            placed |= 1 << v
        nxt = max(
            remaining,
            key=lambda v: ((h.rows[v] & placed).bit_count(), h.rows[v].bit_count(), -v),
        )
        order.append(nxt)
        remaining.remove(nxt)
    return order


def contains_induced(g: Graph, h: Graph) -> Tuple[bool, Optional[Tuple]]:
    """Does g have an induced subgraph isomorphic to h?

    Returns (found, witness) where the witness is the sorted tuple of
    host vertex labels spanning the copy.  Patterns larger than the host
    report (False, None).
    """
    if h.n > g.n:
        return False, None
    if h.n == 0:
        return True, ()
    order = _pattern_order(h)
    gn = g.n
    grows = g.rows
    hrows = h.rows
    mapping = [0] * len(order)

    def rec(t: int, used: int) -> bool:
        if t == len(order):
            return True
        p = order[t]
        for v in range(gn):
            if used >> v & 1:
                continue
            ok = True
            for s in range(t):
                if (grows[v] >> mapping[s] & 1) != (hrows[p] >> order[s] & 1):
                    ok = False
                    break
            if ok:
                mapping[t] = v
                if rec(t + 1, used | 1 << v):
                    return True
        return False

    if rec(0, 0):
        return True, tuple(sorted(g.labels[v] for v in mapping))
    return False, None


_enum_cache: Dict[int, List[Graph]] = {}


def nonisomorphic_graphs(n: int) -> List[Graph]:
    """All non-isomorphic graphs on exactly n vertices (labels 1..n),
    sorted by canonical key.  Built by augmenting the (n-1)-vertex list
    with every possible neighborhood of a new vertex."""
    if n < 1:
        return []
    cached = _enum_cache.get(n)
    if cached is not None:
        return cached
    if n == 1:
        out = [Graph([1])]
    else:
        seen: Dict[bytes, Graph] = {}
        for g in nonisomorphic_graphs(n - 1):
            for nbr in range(1 << (n - 1)):
                rows = [r | ((nbr >> i & 1) << (n - 1)) for i, r in enumerate(g.rows)]
                rows.append(nbr)
                cand = Graph.from_rows(range(1, n + 1), rows)
                key = canonical_key(cand)
                if key not in seen:
                    seen[key] = cand
        out = [seen[k] for k in sorted(seen)]
    _enum_cache[n] = out
    return out


def graphs_up_to(n: int) -> List[Graph]:
    """All non-isomorphic graphs with 1..n vertices."""
    out: List[Graph] = []
    for m in range(1, n + 1):
        out.extend(nonisomorphic_graphs(m))
    return out
