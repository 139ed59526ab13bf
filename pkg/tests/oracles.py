"""Independent naive oracles used by the tests.

Everything here avoids the package's bit-packed kernels and search
pruning on purpose: ranks use list-of-list Gaussian elimination mod 2,
parameters enumerate their whole tree/ordering spaces, and isomorphism
walks vertex bijections directly.
"""

from __future__ import annotations

from itertools import permutations
from typing import Dict, List, Sequence, Tuple


def naive_rank(entries: Sequence[Sequence[int]]) -> int:
    """Gaussian elimination mod 2 on integer entries, no bit packing."""
    mat = [list(row) for row in entries]
    if not mat or not mat[0]:
        return 0
    nrows, ncols = len(mat), len(mat[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = None
        for i in range(row, nrows):
            if mat[i][col] % 2 == 1:
                pivot = i
                break
        if pivot is None:
            continue
        mat[row], mat[pivot] = mat[pivot], mat[row]
        for i in range(nrows):
            if i != row and mat[i][col] % 2 == 1:
                for j in range(ncols):
                    mat[i][j] = (mat[i][j] + mat[row][j]) % 2
        row += 1
        rank += 1
        if row == nrows:
            break
    return rank


def graph_entries(graph) -> List[List[int]]:
    return [[graph.rows[i] >> j & 1 for j in range(graph.n)] for i in range(graph.n)]


def naive_cut_rank(graph, subset) -> int:
    inside = [graph.index(v) for v in subset]
    outside = [i for i in range(graph.n) if i not in inside]
    entries = [[graph.rows[i] >> j & 1 for j in outside] for i in inside]
    return naive_rank(entries)


def naive_rho_table(graph) -> List[int]:
    table = []
    for mask in range(1 << graph.n):
        subset = [graph.labels[i] for i in range(graph.n) if mask >> i & 1]
        table.append(naive_cut_rank(graph, subset))
    return table


def oracle_isomorphic(g, h) -> bool:
    """Exhaustive search over vertex bijections (adjacency check only)."""
    if g.n != h.n:
        return False
    n = g.n

    def extend(mapping: List[int], used: List[bool]) -> bool:
        i = len(mapping)
        if i == n:
            return True
        for j in range(n):
            if used[j]:
                continue
            if all((g.rows[i] >> a & 1) == (h.rows[j] >> mapping[a] & 1) for a in range(i)):
                mapping.append(j)
                used[j] = True
                if extend(mapping, used):
                    return True
                mapping.pop()
                used[j] = False
        return False

    return extend([], [False] * n)


# -- naive decomposition trees -------------------------------------------------

Tree = Tuple[List[Tuple[int, int]], Dict[int, int], int]
# (edges, leaf node -> vertex index, node count)


def _rooted_series_trees(leaf_ids: Tuple[int, ...], next_node: int):
    """All rooted trees on the given leaves in which every internal node
    (including the root) has at least two children.  Yields
    (root, edges, leafmap, next_free_node)."""
    if len(leaf_ids) == 1:
        node = next_node
        yield node, [], {node: leaf_ids[0]}, next_node + 1
        return
    for blocks in _set_partitions(list(leaf_ids)):
        if len(blocks) < 2:
            continue
        yield from _assemble(blocks, next_node)


def _assemble(blocks: List[List[int]], next_node: int):
    root = next_node

    def rec(i: int, edges, leafmap, free):
        if i == len(blocks):
            yield root, edges, leafmap, free
            return
        block = tuple(blocks[i])
        for sub_root, sub_edges, sub_map, free2 in _rooted_series_trees(block, free):
            yield from rec(
                i + 1,
                edges + sub_edges + [(root, sub_root)],
                {**leafmap, **sub_map},
                free2,
            )

    yield from rec(0, [], {}, next_node + 1)


def _set_partitions(items: List[int]):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def all_decomposition_trees(n: int):
    """Every unrooted leaf-labeled tree on n >= 2 leaves with no
    degree-2 node: rooted series trees on the first n-1 leaves with the
    last leaf attached at the root."""
    last = n - 1
    for root, edges, leafmap, free in _rooted_series_trees(tuple(range(n - 1)), n):
        if len(leafmap) == 1:
            # two leaves overall: a single edge
            (leaf_node, vertex), = leafmap.items()
            yield [(leaf_node, free)], {leaf_node: vertex, free: last}
            continue
        yield edges + [(root, free)], {**leafmap, free: last}


def all_cubic_trees(n: int):
    """Every unrooted leaf-labeled cubic tree (internal degree 3) on n
    leaves, by repeated leaf insertion into each edge."""
    if n < 2:
        return
    trees = [([(0, 1)], {0: 0, 1: 1}, 2)]
    for leaf in range(2, n):
        grown = []
        for edges, leafmap, free in trees:
            for idx, (u, v) in enumerate(edges):
                mid, tip = free, free + 1
                new_edges = edges[:idx] + edges[idx + 1:] + [(u, mid), (mid, v), (mid, tip)]
                new_map = dict(leafmap)
                new_map[tip] = leaf
                grown.append((new_edges, new_map, free + 2))
        trees = grown
    for edges, leafmap, _ in trees:
        yield edges, leafmap


def _tree_adjacency(edges) -> Dict[int, List[int]]:
    adj: Dict[int, List[int]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    return adj


def _tree_radius(edges) -> int:
    adj = _tree_adjacency(edges)
    nodes = list(adj)
    best = None
    for start in nodes:
        dist = {start: 0}
        frontier = [start]
        far = 0
        while frontier:
            nxt = []
            for v in frontier:
                for u in adj[v]:
                    if u not in dist:
                        dist[u] = dist[v] + 1
                        far = max(far, dist[u])
                        nxt.append(u)
            frontier = nxt
        if best is None or far < best:
            best = far
    return best


def _tree_width(edges, leafmap: Dict[int, int], rho: List[int]) -> int:
    """Width by definition: for every non-leaf node, every union of the
    parts left by deleting it."""
    adj = _tree_adjacency(edges)
    width = 0
    for v, nbrs in adj.items():
        if len(nbrs) <= 1:
            continue
        parts = []
        for u in nbrs:
            mask = 0
            stack = [u]
            seen = {v, u}
            while stack:
                x = stack.pop()
                if x in leafmap:
                    mask |= 1 << leafmap[x]
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            parts.append(mask)
        for pick in range(1 << len(parts)):
            union = 0
            for i, pm in enumerate(parts):
                if pick >> i & 1:
                    union |= pm
            width = max(width, rho[union])
    return width


def naive_rank_depth(graph) -> int:
    """Minimum over all decomposition trees of max(width, radius)."""
    if graph.n < 2:
        return 0
    rho = naive_rho_table(graph)
    best = None
    for edges, leafmap in all_decomposition_trees(graph.n):
        value = max(_tree_width(edges, leafmap, rho), _tree_radius(edges))
        if best is None or value < best:
            best = value
            if best == 1:
                break
    return best


def naive_rank_width(graph) -> int:
    """Minimum over all cubic trees of the maximum edge cut."""
    if graph.n < 2:
        return 0
    rho = naive_rho_table(graph)
    best = None
    for edges, leafmap in all_cubic_trees(graph.n):
        adj = _tree_adjacency(edges)
        worst = 0
        for a, b in edges:
            mask = 0
            stack = [a]
            seen = {b, a}
            while stack:
                x = stack.pop()
                if x in leafmap:
                    mask |= 1 << leafmap[x]
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            worst = max(worst, rho[mask])
        if best is None or worst < best:
            best = worst
            if best == 0:
                break
    return best


def naive_linear_rank_width(graph) -> int:
    """Minimum over all vertex orderings of the max proper-prefix cut."""
    if graph.n < 2:
        return 0
    rho = naive_rho_table(graph)
    best = None
    for perm in permutations(range(graph.n)):
        mask = 0
        worst = 0
        for v in perm[:-1]:
            mask |= 1 << v
            worst = max(worst, rho[mask])
            if best is not None and worst >= best:
                break
        if best is None or worst < best:
            best = worst
    return best


def naive_chromatic(graph) -> int:
    if graph.n == 0:
        return 0
    for k in range(1, graph.n + 1):
        if _naive_colorable(graph, k):
            return k
    return graph.n


def _naive_colorable(graph, k: int) -> bool:
    colors = [0] * graph.n

    def rec(i: int) -> bool:
        if i == graph.n:
            return True
        for c in range(k):
            ok = True
            for j in range(i):
                if graph.rows[i] >> j & 1 and colors[j] == c:
                    ok = False
                    break
            if ok:
                colors[i] = c
                if rec(i + 1):
                    return True
        return False

    return rec(0)


def naive_clique(graph) -> int:
    best = 0
    for mask in range(1 << graph.n):
        vs = [i for i in range(graph.n) if mask >> i & 1]
        if all(graph.rows[a] >> b & 1 for ai, a in enumerate(vs) for b in vs[ai + 1:]):
            best = max(best, len(vs))
    return best
