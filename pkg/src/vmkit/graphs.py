"""Labeled simple graphs with bit-packed adjacency, plus the generator
families used throughout the verification suites.

Graphs are immutable values: every operation returns a new Graph.
Vertex labels may be any hashable, mutually orderable values; the
generators use integers starting at 1.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Sequence, Tuple

from vmkit.errors import CompositionError, GenerationError, InvalidVertexError


class Graph:
    """A simple graph: ordered labels plus one neighbor bitmask per vertex.

    ``rows[i]`` has bit j set iff labels[i] and labels[j] are adjacent.
    Adjacency is symmetric and the diagonal is zero.
    """

    __slots__ = ("labels", "rows", "_pos")

    def __init__(self, labels: Sequence = (), edges: Iterable[Tuple] = ()):
        labels = tuple(labels)
        pos = {v: i for i, v in enumerate(labels)}
        if len(pos) != len(labels):
            raise InvalidVertexError("duplicate vertex labels")
        rows = [0] * len(labels)
        for u, v in edges:
            if u not in pos or v not in pos:
                raise InvalidVertexError(f"edge endpoint not a vertex: {(u, v)}")
            if u == v:
                raise InvalidVertexError(f"loop at {u!r} not allowed")
            rows[pos[u]] |= 1 << pos[v]
            rows[pos[v]] |= 1 << pos[u]
        self.labels = labels
        self.rows = tuple(rows)
        self._pos = pos

    @classmethod
    def from_rows(cls, labels: Sequence, rows: Sequence[int]) -> "Graph":
        """Trusted constructor from prebuilt neighbor masks."""
        g = cls.__new__(cls)
        g.labels = tuple(labels)
        g.rows = tuple(rows)
        g._pos = {v: i for i, v in enumerate(g.labels)}
        return g

    # -- basic accessors -------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, v) -> int:
        try:
            return self._pos[v]
        except KeyError:
            raise InvalidVertexError(f"unknown vertex {v!r}") from None

    def mask_of(self, vertices: Iterable) -> int:
        mask = 0
        for v in vertices:
            mask |= 1 << self.index(v)
        return mask

    def labels_of(self, mask: int) -> Tuple:
        out = []
        while mask:
            i = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            out.append(self.labels[i])
        return tuple(out)

    def has_edge(self, u, v) -> bool:
        return bool(self.rows[self.index(u)] >> self.index(v) & 1)

    def degree(self, v) -> int:
        return self.rows[self.index(v)].bit_count()

    def neighbors(self, v) -> Tuple:
        return self.labels_of(self.rows[self.index(v)])

    def edges(self) -> List[Tuple]:
        out = []
        for i in range(self.n):
            r = self.rows[i] >> (i + 1)
            j = i + 1
            while r:
                if r & 1:
                    out.append((self.labels[i], self.labels[j]))
                r >>= 1
                j += 1
        return out

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree_sequence(self) -> Tuple[int, ...]:
        return tuple(sorted(r.bit_count() for r in self.rows))

    # -- derived graphs ---------------------------------------------------

    def induce(self, vertices: Iterable) -> "Graph":
        """Induced subgraph on the given labels, original order kept."""
        mask = self.mask_of(vertices)
        keep = [i for i in range(self.n) if mask >> i & 1]
        remap = {old: new for new, old in enumerate(keep)}
        rows = []
        for i in keep:
            r = self.rows[i] & mask
            packed = 0
            while r:
                j = (r & -r).bit_length() - 1
                r &= r - 1
                packed |= 1 << remap[j]
            rows.append(packed)
        return Graph.from_rows([self.labels[i] for i in keep], rows)

    def delete(self, vertices: Iterable) -> "Graph":
        mask = self.mask_of(vertices)
        return self.induce(self.labels_of(((1 << self.n) - 1) ^ mask))

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        rows = [full ^ r ^ (1 << i) for i, r in enumerate(self.rows)]
        return Graph.from_rows(self.labels, rows)

    def relabel(self, mapping: Dict) -> "Graph":
        """Replace labels; mapping must cover every vertex injectively."""
        new = [mapping[v] for v in self.labels]
        if len(set(new)) != len(new):
            raise InvalidVertexError("relabeling is not injective")
        return Graph.from_rows(new, self.rows)

    # -- structure --------------------------------------------------------

    def components(self) -> List[Tuple]:
        """Vertex sets of connected components, smallest label first."""
        seen = 0
        comps = []
        for i in range(self.n):
            if seen >> i & 1:
                continue
            comp = 1 << i
            frontier = comp
            while frontier:
                nxt = 0
                m = frontier
                while m:
                    j = (m & -m).bit_length() - 1
                    m &= m - 1
                    nxt |= self.rows[j]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        out = [tuple(sorted(self.labels_of(c))) for c in comps]
        out.sort(key=lambda t: t[0])
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_bipartite(self) -> bool:
        color = {}
        for start in range(self.n):
            if start in color:
                continue
            color[start] = 0
            stack = [start]
            while stack:
                i = stack.pop()
                m = self.rows[i]
                while m:
                    j = (m & -m).bit_length() - 1
                    m &= m - 1
                    if j not in color:
                        color[j] = color[i] ^ 1
                        stack.append(j)
                    elif color[j] == color[i]:
                        return False
        return True

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.labels == other.labels and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.labels, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()!r})"


# -- generator families ------------------------------------------------------


def path(n: int) -> Graph:
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return Graph(range(1, n + 1), [(i, i + 1) for i in range(1, n)])


def complete(n: int) -> Graph:
    _need(n >= 1, f"complete needs n >= 1, got {n}")
    return Graph(range(1, n + 1), [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def edgeless(n: int) -> Graph:
    _need(n >= 1, f"edgeless needs n >= 1, got {n}")
    return Graph(range(1, n + 1))


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph(range(1, n + 1), [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def star(n: int) -> Graph:
    """K_{1,n}: n leaf vertices 1..n, hub labeled n+1."""
    _need(n >= 1, f"star needs n >= 1 leaves, got {n}")
    return Graph(range(1, n + 2), [(i, n + 1) for i in range(1, n + 1)])


def fan(t: int) -> Graph:
    """Path on t vertices plus a hub adjacent to all of them, hub last."""
    _need(t >= 1, f"fan needs t >= 1, got {t}")
    edges = [(i, i + 1) for i in range(1, t)] + [(i, t + 1) for i in range(1, t + 1)]
    return Graph(range(1, t + 2), edges)


def bull() -> Graph:
    """Triangle 1-2-3 with pendant 4 on 1 and pendant 5 on 2."""
    return Graph(range(1, 6), [(1, 2), (2, 3), (1, 3), (1, 4), (2, 5)])


def w4() -> Graph:
    """4-cycle 1-2-3-4 plus hub 5 adjacent to all cycle vertices."""
    return Graph(range(1, 6), [(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (2, 5), (3, 5), (4, 5)])


def bw3_complement() -> Graph:
    """Two triangles joined by a perfect matching, plus an apex on the
    second triangle.  Fixed edge list; vertices 1-3 and 4-6 are the
    triangles, 7 the apex."""
    edges = [
        (1, 2), (2, 3), (1, 3),
        (4, 5), (5, 6), (4, 6),
        (1, 4), (2, 5), (3, 6),
        (4, 7), (5, 7), (6, 7),
    ]
    return Graph(range(1, 8), edges)


def c5() -> Graph:
    return cycle(5)


def n_graph() -> Graph:
    """Triangle 1-2-3 with a distinct pendant vertex on each corner."""
    return Graph(range(1, 7), [(1, 2), (2, 3), (1, 3), (1, 4), (2, 5), (3, 6)])


def q_graph() -> Graph:
    """4-cycle 1-2-3-4 with pendants 5 and 6 on the opposite corners 1 and 3."""
    return Graph(range(1, 7), [(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (3, 6)])


def claw() -> Graph:
    return star(3)


def half_graph(g: Graph, h: Graph, order_g: Sequence = None, order_h: Sequence = None) -> Graph:
    """Half-graph join: disjoint union of g and h plus the cross edges
    v_i w_j for all i >= j (1-based positions in the given orders).

    Both graphs must have the same vertex count and disjoint label sets;
    orders default to sorted labels.
    """
    if g.n != h.n:
        raise CompositionError(f"operand sizes differ: {g.n} vs {h.n}")
    order_g = list(order_g) if order_g is not None else sorted(g.labels)
    order_h = list(order_h) if order_h is not None else sorted(h.labels)
    if sorted(order_g, key=g.index) != sorted(g.labels, key=g.index) or len(order_g) != g.n:
        raise CompositionError("order_g is not a permutation of V(g)")
    if sorted(order_h, key=h.index) != sorted(h.labels, key=h.index) or len(order_h) != h.n:
        raise CompositionError("order_h is not a permutation of V(h)")
    if set(g.labels) & set(h.labels):
        raise CompositionError("label sets overlap; relabel one operand")
    labels = list(g.labels) + list(h.labels)
    edges = g.edges() + h.edges()
    for i, v in enumerate(order_g, start=1):
        for j, w in enumerate(order_h, start=1):
            if i >= j:
                edges.append((v, w))
    return Graph(labels, edges)


def half_graph_family(family_a: str, family_b: str, n: int) -> Graph:
    """Half-graph of two same-size generator graphs; the second side is
    relabeled to n+1..2n and both orders follow the labels."""
    a = generate(family_a, [n])
    if a.n != n:
        raise GenerationError(f"family {family_a!r} with parameter {n} has {a.n} != {n} vertices")
    b = generate(family_b, [n]).relabel({i: i + n for i in range(1, n + 1)})
    return half_graph(a, b)


_FIXED = {
    "bull": bull,
    "w4": w4,
    "bw3c": bw3_complement,
    "c5": c5,
    "n_graph": n_graph,
    "q_graph": q_graph,
}

_SIZED = {
    "path": path,
    "complete": complete,
    "edgeless": edgeless,
    "cycle": cycle,
    "star": star,
    "fan": fan,
}


def generate(family: str, params: Sequence = ()) -> Graph:
    """Build a named family member.  ``params`` are ints (or strings for
    the half_graph side families)."""
    if family in _FIXED:
        if params:
            raise GenerationError(f"{family} takes no parameters")
        return _FIXED[family]()
    if family in _SIZED:
        if len(params) != 1:
            raise GenerationError(f"{family} takes exactly one size parameter")
        return _SIZED[family](_int_param(params[0]))
    if family == "half_graph":
        if len(params) != 3:
            raise GenerationError("half_graph takes: <family_a> <family_b> <n>")
        return half_graph_family(str(params[0]), str(params[1]), _int_param(params[2]))
    raise GenerationError(f"unknown family {family!r}")


def family_names() -> List[str]:
    return sorted(_FIXED) + sorted(_SIZED) + ["half_graph"]


def _int_param(p) -> int:
    try:
        return int(p)
    except (TypeError, ValueError):
        raise GenerationError(f"parameter {p!r} is not an integer") from None


def _need(cond: bool, msg: str):
    if not cond:
        raise GenerationError(msg)
