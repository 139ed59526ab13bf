"""Decomposition trees and exact width/depth parameters.

A decomposition of a ground set is a tree plus a bijection from the
ground elements onto the tree's leaves.  The width of a non-leaf node
is the maximum connectivity value over all unions of the parts into
which deleting the node splits the ground set; the radius is the
minimum eccentricity over tree nodes.  Everything is generic over a
symmetric connectivity function, so graphs (cut-rank) and binary
matroids (connectivity) share one depth engine.

All parameter searches are exact and capped; beyond the cap they raise
BudgetError rather than approximate.
"""

from __future__ import annotations

import random
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from vmkit import _kernels
from vmkit.canonical import canonical_key
from vmkit.errors import (
    BalanceError,
    BudgetError,
    DecompositionError,
    InvalidNodeError,
    MergeError,
    VmkitError,
)
from vmkit.gf2 import cut_rank_mask, cutrank_table
from vmkit.graphs import Graph

NODE_DEGREE_CAP = 20
DEPTH_CAP = 8
RANK_WIDTH_CAP = 10
LRW_CAP = 16


class ConnectivitySystem:
    """Ground set plus a symmetric set function given by a full table
    over subset masks (built eagerly for graphs/matroids) or a callable
    memoized per mask."""

    __slots__ = ("ground", "_pos", "_table", "_fn", "_memo")

    def __init__(self, ground: Sequence, table=None, fn=None):
        self.ground = tuple(ground)
        self._pos = {v: i for i, v in enumerate(self.ground)}
        if len(self._pos) != len(self.ground):
            raise VmkitError("ground elements must be distinct")
        self._table = table
        self._fn = fn
        self._memo: Dict[int, int] = {}
        if table is None and fn is None:
            raise VmkitError("need a table or a function")

    @classmethod
    def from_graph(cls, graph: Graph) -> "ConnectivitySystem":
        return cls(graph.labels, table=cutrank_table(graph))

    @classmethod
    def from_function(cls, ground: Sequence, fn) -> "ConnectivitySystem":
        """``fn`` receives a tuple of element labels."""
        return cls(ground, fn=fn)

    @property
    def n(self) -> int:
        return len(self.ground)

    def mask_of(self, subset: Iterable) -> int:
        mask = 0
        for v in subset:
            try:
                mask |= 1 << self._pos[v]
            except KeyError:
                raise VmkitError(f"unknown ground element {v!r}") from None
        return mask

    def labels_of(self, mask: int) -> Tuple:
        out = []
        while mask:
            i = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            out.append(self.ground[i])
        return tuple(out)

    def value_mask(self, mask: int) -> int:
        if self._table is not None:
            return self._table[mask]
        v = self._memo.get(mask)
        if v is None:
            v = self._fn(self.labels_of(mask))
            self._memo[mask] = v
        return v

    def value(self, subset: Iterable) -> int:
        return self.value_mask(self.mask_of(subset))

    def full_table(self) -> Sequence[int]:
        if self._table is None:
            self._table = bytearray(
                self.value_mask(m) for m in range(1 << self.n)
            )
        return self._table

    def validate(self, samples: int = 64, seed: int = 0):
        """Spot-check the system axioms: zero on the empty and full sets
        and symmetry on sampled subsets."""
        full = (1 << self.n) - 1
        if self.value_mask(0) != 0 or self.value_mask(full) != 0:
            raise VmkitError("connectivity must vanish on empty and full sets")
        rng = random.Random(seed)
        for _ in range(min(samples, 1 << self.n)):
            m = rng.randrange(1 << self.n)
            if self.value_mask(m) != self.value_mask(full ^ m):
                raise VmkitError(f"connectivity not symmetric at mask {m:b}")


# -- decomposition trees ------------------------------------------------------


class Decomposition:
    """Tree plus bijection from ground elements onto the tree leaves.

    Nodes are integers; the tree may consist of a single node (which is
    then its own leaf, carrying one element).
    """

    def __init__(self, edges: Iterable[Tuple[int, int]], sigma: Dict, nodes: Iterable[int] = None):
        self.edges = tuple(tuple(e) for e in edges)
        self.sigma = dict(sigma)
        node_set = set()
        for a, b in self.edges:
            node_set.add(a)
            node_set.add(b)
        node_set.update(self.sigma.values())
        if nodes is not None:
            node_set.update(nodes)
        self.nodes = tuple(sorted(node_set))
        self.adj: Dict[int, List[int]] = {v: [] for v in self.nodes}
        for a, b in self.edges:
            if a == b:
                raise DecompositionError("self-loop in decomposition tree")
            self.adj[a].append(b)
            self.adj[b].append(a)
        self._validate()

    def _validate(self):
        if not self.nodes:
            raise DecompositionError("empty tree")
        if len(self.edges) != len(self.nodes) - 1:
            raise DecompositionError("edge count does not match a tree")
        seen = {self.nodes[0]}
        stack = [self.nodes[0]]
        while stack:
            v = stack.pop()
            for u in self.adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        if len(seen) != len(self.nodes):
            raise DecompositionError("tree is not connected")
        leaves = set(self.leaves())
        assigned = list(self.sigma.values())
        if len(set(assigned)) != len(assigned):
            raise DecompositionError("sigma is not injective")
        if set(assigned) != leaves:
            raise DecompositionError("sigma must map onto exactly the leaves")

    def degree(self, node: int) -> int:
        return len(self.adj[node])

    def leaves(self) -> List[int]:
        return [v for v in self.nodes if len(self.adj[v]) <= 1]

    def internal_nodes(self) -> List[int]:
        return [v for v in self.nodes if len(self.adj[v]) > 1]

    def element_of(self, leaf: int):
        for element, node in self.sigma.items():
            if node == leaf:
                return element
        raise InvalidNodeError(f"node {leaf} carries no element")

    def ground(self) -> Tuple:
        return tuple(self.sigma.keys())

    def _component_leaves(self, start: int, blocked: int) -> List:
        """Elements on the leaves reachable from ``start`` without
        passing through ``blocked``."""
        seen = {start, blocked}
        stack = [start]
        found = []
        inverse = {node: el for el, node in self.sigma.items()}
        while stack:
            v = stack.pop()
            if v in inverse:
                found.append(inverse[v])
            for u in self.adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return found

    def parts_at(self, node: int) -> List[Tuple]:
        """The partition of the ground set induced by deleting a node."""
        return [tuple(self._component_leaves(u, node)) for u in sorted(self.adj[node])]

    def side_elements(self, a: int, b: int) -> List:
        """Ground elements on the ``a`` side of tree edge ab."""
        return self._component_leaves(a, b)

    def eccentricity(self, node: int) -> int:
        dist = {node: 0}
        frontier = [node]
        ecc = 0
        while frontier:
            nxt = []
            for v in frontier:
                for u in self.adj[v]:
                    if u not in dist:
                        dist[u] = dist[v] + 1
                        ecc = max(ecc, dist[u])
                        nxt.append(u)
            frontier = nxt
        if len(dist) != len(self.nodes):
            raise DecompositionError("tree is not connected")
        return ecc

    def __repr__(self):
        return f"Decomposition(nodes={len(self.nodes)}, ground={sorted(map(str, self.sigma))})"


class RankDecomposition(Decomposition):
    """Decomposition whose tree is subcubic: every node has degree one
    or three (a single edge or single node is allowed for tiny grounds)."""

    def _validate(self):
        super()._validate()
        for v in self.nodes:
            if len(self.adj[v]) not in (0, 1, 3):
                raise DecompositionError(f"node {v} has degree {len(self.adj[v])}, want 1 or 3")


def radius(decomp: Decomposition) -> int:
    """Minimum eccentricity over all tree nodes."""
    return min(decomp.eccentricity(v) for v in decomp.nodes)


def node_width(decomp: Decomposition, node: int, sys: ConnectivitySystem) -> int:
    """Exact width of a non-leaf node: the maximum connectivity over all
    unions of the parts around it.  By symmetry only half the subsets
    are evaluated (those omitting the last part)."""
    if node not in decomp.adj:
        raise InvalidNodeError(f"unknown node {node}")
    deg = decomp.degree(node)
    if deg <= 1:
        raise InvalidNodeError(f"node {node} is a leaf")
    if deg > NODE_DEGREE_CAP:
        raise BudgetError(f"node degree {deg} exceeds the cap {NODE_DEGREE_CAP}")
    part_masks = [sys.mask_of(part) for part in decomp.parts_at(node)]
    best = 0
    head = part_masks[:-1]
    for pick in range(1 << len(head)):
        union = 0
        for i, pm in enumerate(head):
            if pick >> i & 1:
                union |= pm
        best = max(best, sys.value_mask(union))
    return best


def decomposition_width(decomp: Decomposition, sys: ConnectivitySystem) -> int:
    """Maximum node width over non-leaf nodes (0 when there are none)."""
    internal = decomp.internal_nodes()
    if not internal:
        return 0
    return max(node_width(decomp, v, sys) for v in internal)


def edge_width(decomp: Decomposition, a: int, b: int, sys: ConnectivitySystem) -> int:
    """Connectivity of the leaf set on one side of a tree edge."""
    return sys.value_mask(sys.mask_of(decomp.side_elements(a, b)))


def rank_decomposition_width(decomp: Decomposition, sys: ConnectivitySystem) -> int:
    """Maximum edge width; 0 for the edgeless single-node tree."""
    if not decomp.edges:
        return 0
    return max(edge_width(decomp, a, b, sys) for a, b in decomp.edges)


# -- witness text format ------------------------------------------------------


def serialize_tree(decomp: Decomposition) -> str:
    """Nested-parenthesis rendering rooted at a tree center.  A leaf
    prints its element; an internal node prints its children in
    sorted-string order, so the output is reproducible."""
    root = min(decomp.nodes, key=lambda v: (decomp.eccentricity(v), v))
    inverse = {node: el for el, node in decomp.sigma.items()}

    def render(v: int, parent: Optional[int]) -> str:
        children = sorted(
            (render(u, v) for u in decomp.adj[v] if u != parent)
        )
        if v in inverse:
            base = str(inverse[v])
            return base + ("(" + ",".join(children) + ")" if children else "")
        return "(" + ",".join(children) + ")"

    return render(root, None)


def parse_tree(text: str) -> Decomposition:
    """Parse the nested-parenthesis witness format.  Labels consisting
    of digits become ints."""
    text = text.strip()
    pos = 0
    counter = [0]
    edges: List[Tuple[int, int]] = []
    sigma: Dict = {}

    def fresh() -> int:
        counter[0] += 1
        return counter[0] - 1

    def error(msg: str):
        raise DecompositionError(f"{msg} at position {pos}")

    def parse_node() -> int:
        nonlocal pos
        node = fresh()
        if pos < len(text) and text[pos] not in "(),":
            start = pos
            while pos < len(text) and text[pos] not in "(),":
                pos += 1
            token = text[start:pos].strip()
            if not token:
                error("empty label")
            label = int(token) if token.lstrip("-").isdigit() else token
            if label in sigma:
                error(f"duplicate label {label!r}")
            sigma[label] = node
        if pos < len(text) and text[pos] == "(":
            pos += 1
            while True:
                child = parse_node()
                edges.append((node, child))
                if pos >= len(text):
                    error("unclosed parenthesis")
                if text[pos] == ",":
                    pos += 1
                    continue
                if text[pos] == ")":
                    pos += 1
                    break
                error(f"unexpected character {text[pos]!r}")
        return node

    if not text:
        raise DecompositionError("empty witness text")
    root = parse_node()
    if pos != len(text):
        raise DecompositionError(f"trailing input at position {pos}")
    return Decomposition(edges, sigma, nodes=[root])


# -- depth (shared by graphs and matroids) ------------------------------------

_rd_cache: Dict[bytes, int] = {}


def system_depth(sys: ConnectivitySystem, cap: int = DEPTH_CAP) -> int:
    """Least k admitting a width-k, radius-k decomposition of the
    ground set; 0 below two elements."""
    k, _ = _depth_search(sys, cap, want_witness=False)
    return k


def system_depth_decomposition(sys: ConnectivitySystem, cap: int = DEPTH_CAP):
    return _depth_search(sys, cap, want_witness=True)


def rank_depth(graph: Graph, cap: int = DEPTH_CAP) -> int:
    """Rank-depth of a graph (cut-rank connectivity)."""
    if graph.n < 2:
        return 0
    if graph.n > cap:
        raise BudgetError(f"rank-depth is exact only up to {cap} vertices")
    key = canonical_key(graph)
    v = _rd_cache.get(key)
    if v is None:
        v = system_depth(ConnectivitySystem.from_graph(graph), cap=cap)
        _rd_cache[key] = v
    return v


def rank_depth_decomposition(graph: Graph, cap: int = DEPTH_CAP):
    """Rank-depth together with an optimal witness decomposition."""
    if graph.n > cap:
        raise BudgetError(f"rank-depth is exact only up to {cap} vertices")
    return system_depth_decomposition(ConnectivitySystem.from_graph(graph), cap=cap)


def _depth_search(sys: ConnectivitySystem, cap: int, want_witness: bool):
    n = sys.n
    if n < 2:
        return 0, None
    if n > cap:
        raise BudgetError(f"depth search is exact only up to {cap} elements")
    rho = sys.full_table()
    full = (1 << n) - 1
    upper = max(1, max(rho))
    for k in range(1, upper + 1):
        levels = _kernels.depth_levels(rho, n, k)
        if levels[k][full]:
            if not want_witness:
                return k, None
            return k, _witness_from_levels(sys, rho, levels, k)
    raise VmkitError("depth search failed to terminate")  # pragma: no cover


def _witness_from_levels(sys: ConnectivitySystem, rho, levels, k: int) -> Decomposition:
    """Rebuild a concrete witness tree from the feasibility bitmaps,
    taking the first valid partition in a fixed enumeration order."""
    counter = [0]
    edges: List[Tuple[int, int]] = []
    sigma: Dict = {}

    def fresh() -> int:
        counter[0] += 1
        return counter[0] - 1

    def build(w: int, h: int) -> int:
        node = fresh()
        if w & (w - 1) == 0:
            sigma[sys.ground[w.bit_length() - 1]] = node
            return node
        while h > 1 and levels[h - 1][w]:
            h -= 1  # use the shallowest feasible height for this set
        for part in _first_partition(w, rho, levels[h - 1], k):
            edges.append((node, build(part, h - 1)))
        return node

    full = (1 << sys.n) - 1
    root = build(full, k)
    return Decomposition(edges, sigma, nodes=[root])


def _first_partition(w: int, rho, prev, k: int) -> List[int]:
    parts: List[int] = []

    def rec(remaining: int, unions: List[int]) -> bool:
        if not remaining:
            return len(parts) >= 2
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
                if ok:
                    parts.append(part)
                    if rec(remaining ^ part, grown):
                        return True
                    parts.pop()
            if not sub:
                return False
            sub = (sub - 1) & rest

    if not rec(w, [0]):
        raise VmkitError("witness reconstruction diverged from feasibility table")
    return parts


# -- rank-width ---------------------------------------------------------------

_rw_cache: Dict[bytes, int] = {}


def rank_width(graph: Graph, cap: int = RANK_WIDTH_CAP) -> int:
    """Minimum over subcubic leaf trees of the maximum edge cut-rank."""
    if graph.n < 2:
        return 0
    if graph.n > cap:
        raise BudgetError(f"rank-width is exact only up to {cap} vertices")
    key = canonical_key(graph)
    v = _rw_cache.get(key)
    if v is None:
        v, _ = _rank_width_dp(graph)
        _rw_cache[key] = v
    return v


def rank_width_decomposition(graph: Graph, cap: int = RANK_WIDTH_CAP):
    """Rank-width plus an optimal rank-decomposition (None below two
    vertices)."""
    if graph.n < 2:
        return 0, None
    if graph.n > cap:
        raise BudgetError(f"rank-width is exact only up to {cap} vertices")
    value, choice = _rank_width_dp(graph)

    counter = [0]
    edges: List[Tuple[int, int]] = []
    sigma: Dict = {}

    def fresh() -> int:
        counter[0] += 1
        return counter[0] - 1

    def build(mask: int) -> int:
        node = fresh()
        if mask & (mask - 1) == 0:
            sigma[graph.labels[mask.bit_length() - 1]] = node
            return node
        s = choice[mask]
        edges.append((node, build(s)))
        edges.append((node, build(mask ^ s)))
        return node

    full = (1 << graph.n) - 1
    s = choice[full]
    left = build(s)
    right = build(full ^ s)
    edges.append((left, right))
    return value, RankDecomposition(edges, sigma)


def _rank_width_dp(graph: Graph):
    n = graph.n
    rho = cutrank_table(graph)
    size = 1 << n
    f = [0] * size
    choice = [0] * size
    for mask in range(size):
        if mask & (mask - 1) == 0 or mask == 0:
            continue
        low = mask & -mask
        rest = mask ^ low
        best = None
        best_s = 0
        sub = rest
        while True:
            s = sub | low
            other = mask ^ s
            if other:
                val = max(f[s], f[other], rho[s], rho[other])
                if best is None or val < best:
                    best, best_s = val, s
            if not sub:
                break
            sub = (sub - 1) & rest
        f[mask] = best
        choice[mask] = best_s
    return f[size - 1], choice


# -- linear rank-width --------------------------------------------------------

_lrw_cache: Dict[bytes, int] = {}


def linear_rank_width(graph: Graph, cap: int = LRW_CAP) -> int:
    """Minimum over vertex orderings of the maximum prefix cut-rank."""
    if graph.n < 2:
        return 0
    if graph.n > cap:
        raise BudgetError(f"linear rank-width is exact only up to {cap} vertices")
    key = canonical_key(graph) if graph.n <= 12 else None
    if key is not None and key in _lrw_cache:
        return _lrw_cache[key]
    v, _ = _lrw_dp(graph)
    if key is not None:
        _lrw_cache[key] = v
    return v


def linear_rank_width_ordering(graph: Graph, cap: int = LRW_CAP):
    """Linear rank-width plus an optimal vertex ordering."""
    if graph.n < 2:
        return 0, tuple(graph.labels)
    if graph.n > cap:
        raise BudgetError(f"linear rank-width is exact only up to {cap} vertices")
    value, pick = _lrw_dp(graph)
    order: List = []
    mask = (1 << graph.n) - 1
    while mask:
        v = pick[mask]
        order.append(graph.labels[v])
        mask ^= 1 << v
    order.reverse()
    return value, tuple(order)


def _lrw_dp(graph: Graph):
    n = graph.n
    rho = cutrank_table(graph)
    size = 1 << n
    full = size - 1
    g = [0] * size
    pick = [0] * size
    for mask in range(1, size):
        best = None
        best_v = 0
        m = mask
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            val = g[mask ^ (1 << i)]
            if best is None or val < best:
                best, best_v = val, i
        base = rho[mask] if mask != full else 0
        g[mask] = max(base, best)
        pick[mask] = best_v
    return g[full], pick


# -- balance partition --------------------------------------------------------


def balance_partition(graph: Graph, decomp: Decomposition, marked: Iterable, k: int):
    """Split the vertex set along a tree edge of a given rank-
    decomposition so that both sides keep more than k marked vertices
    and the cut has cut-rank at most the decomposition's width.

    Every tree edge is oriented toward the side holding more than k
    marked leaves (ties go to the side with the larger subtree); a node
    with all incident edges inward always exists, and one of its
    incident edges is a valid split.
    """
    marked_set = set(marked)
    unknown = marked_set - set(graph.labels)
    if unknown:
        raise BalanceError(f"marked vertices not in graph: {sorted(map(str, unknown))}")
    if k < 0:
        raise BalanceError("k must be nonnegative")
    if len(marked_set) <= 3 * k:
        raise BalanceError(f"need |M| >= 3k+1, got |M|={len(marked_set)}, k={k}")
    if k == 0 and len(marked_set) < 2:
        raise BalanceError("k=0 requires at least two marked vertices")
    if set(decomp.sigma.keys()) != set(graph.labels):
        raise BalanceError("decomposition ground set does not match the graph")
    for node in decomp.nodes:
        if decomp.degree(node) not in (0, 1, 3):
            raise BalanceError("balance partition expects a subcubic tree")

    q = rank_decomposition_width(decomp, ConnectivitySystem.from_graph(graph))

    sides: Dict[Tuple[int, int], List] = {}
    counts: Dict[Tuple[int, int], int] = {}
    for a, b in decomp.edges:
        for x, y in ((a, b), (b, a)):
            elems = decomp.side_elements(x, y)
            sides[(x, y)] = elems
            counts[(x, y)] = sum(1 for e in elems if e in marked_set)

    toward: Dict[Tuple[int, int], int] = {}
    for a, b in decomp.edges:
        ca, cb = counts[(a, b)], counts[(b, a)]
        if ca > k and cb > k:
            bigger = a if (len(sides[(a, b)]), -a) > (len(sides[(b, a)]), -b) else b
            toward[(a, b)] = bigger
        elif ca > k:
            toward[(a, b)] = a
        else:
            toward[(a, b)] = b

    sink = None
    stack = [min(decomp.nodes)]
    seen = set(stack)
    while stack:
        v = stack.pop()
        if all(toward[e] == v for e in decomp.edges if v in e) and decomp.edges:
            sink = v
            break
        for u in sorted(decomp.adj[v], reverse=True):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    if sink is None:
        raise BalanceError("no all-inward node; orientation is inconsistent")

    for u in sorted(decomp.adj[sink]):
        far = counts[(u, sink)]
        near = len(marked_set) - far
        if far > k and near > k:
            x_side = tuple(sorted(sides[(u, sink)]))
            y_side = tuple(sorted(set(graph.labels) - set(x_side)))
            cut = cut_rank_mask(graph, graph.mask_of(x_side))
            if cut > q:
                raise BalanceError("split violates the width bound")
            return x_side, y_side
    raise BalanceError("no balanced edge at the all-inward node")


# -- merge construction -------------------------------------------------------


def merge_decomposition(
    graph: Graph,
    side_a: Iterable,
    parts_a: Sequence[Decomposition],
    parts_b: Sequence[Decomposition],
    m: int,
    d: int,
) -> Decomposition:
    """Assemble a decomposition of the whole graph from per-component
    decompositions of both sides of a vertex partition.

    Two fresh hub nodes x and y joined by an edge pick up the component
    trees at their centers.  Requires every part to have width and
    radius at most m inside its own component and the partition cut to
    have cut-rank at most d >= 1; the result is checked to have radius
    at most m+2 and width at most m+d.
    """
    a_set = set(side_a)
    if not a_set or a_set == set(graph.labels):
        raise MergeError("side A must be a nonempty proper vertex subset")
    if a_set - set(graph.labels):
        raise MergeError("side A contains unknown vertices")
    if d < 1:
        raise MergeError("d must be at least 1")
    if m < 0:
        raise MergeError("m must be nonnegative")
    if cut_rank_mask(graph, graph.mask_of(a_set)) > d:
        raise MergeError(f"cut-rank of side A exceeds d={d}")

    b_set = set(graph.labels) - a_set
    comps_a = graph.induce(a_set).components()
    comps_b = graph.induce(b_set).components()
    _check_parts(graph, comps_a, parts_a, m, "A")
    _check_parts(graph, comps_b, parts_b, m, "B")

    edges: List[Tuple[int, int]] = [(0, 1)]
    sigma: Dict = {}
    next_id = [2]

    def attach(hub: int, part: Decomposition):
        offset = next_id[0]
        remap = {node: offset + i for i, node in enumerate(part.nodes)}
        next_id[0] += len(part.nodes)
        for pa, pb in part.edges:
            edges.append((remap[pa], remap[pb]))
        for element, node in part.sigma.items():
            sigma[element] = remap[node]
        internal = [v for v in part.nodes if part.degree(v) > 1]
        if not internal:
            if len(part.nodes) == 1:
                edges.append((hub, remap[part.nodes[0]]))
                return
            # two-leaf tree: its centers are leaves, so hang both leaves
            # off a fresh joint to keep sigma mapped onto leaves only
            joint = next_id[0]
            next_id[0] += 1
            edges.append((hub, joint))
            edges.append((joint, remap[part.nodes[0]]))
            edges.append((joint, remap[part.nodes[1]]))
            # drop the original leaf-leaf edge
            edges.remove((remap[part.edges[0][0]], remap[part.edges[0][1]]))
            return
        center = min(internal, key=lambda v: (part.eccentricity(v), v))
        edges.append((hub, remap[center]))

    for part in sorted(parts_a, key=_part_key):
        attach(0, part)
    for part in sorted(parts_b, key=_part_key):
        attach(1, part)

    merged = Decomposition(edges, sigma)
    sys = ConnectivitySystem.from_graph(graph)
    got_radius = radius(merged)
    got_width = decomposition_width(merged, sys)
    if got_radius > m + 2:
        raise MergeError(f"merged radius {got_radius} exceeds m+2={m + 2}")
    if got_width > m + d:
        raise MergeError(f"merged width {got_width} exceeds m+d={m + d}")
    return merged


def _part_key(part: Decomposition):
    return tuple(sorted(map(str, part.sigma.keys())))


def _check_parts(graph: Graph, comps: List[Tuple], parts: Sequence[Decomposition], m: int, tag: str):
    want = {frozenset(c) for c in comps}
    got = {frozenset(p.sigma.keys()) for p in parts}
    if want != got:
        raise MergeError(f"part decompositions of side {tag} do not match its components")
    if len(parts) != len(want):
        raise MergeError(f"duplicate part decompositions on side {tag}")
    for part in parts:
        sub = graph.induce(part.sigma.keys())
        sub_sys = ConnectivitySystem.from_graph(sub)
        if radius(part) > m:
            raise MergeError(f"a side-{tag} part has radius above m={m}")
        if decomposition_width(part, sub_sys) > m:
            raise MergeError(f"a side-{tag} part has width above m={m}")
