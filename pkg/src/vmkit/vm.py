"""Local complementation, pivoting, equivalence orbits, and
vertex-/pivot-minor containment with replayable witnesses.

A witness is a script of operations applied to the original graph:
``lc v`` toggles the edges among the neighbors of v, ``pivot u v``
composes ``lc u; lc v; lc u`` along an edge, and a final ``keep ...``
names the induced subgraph.  Scripts round-trip through a one-op-per-
line text form and can be replayed independently of the search that
produced them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from vmkit.canonical import canonical_key, contains_induced
from vmkit.errors import NotAnEdgeError, VmkitError
from vmkit.graphs import Graph

DEFAULT_BUDGET = 100_000


def local_complement(graph: Graph, v) -> Graph:
    """Toggle all edges among the neighbors of v."""
    i = graph.index(v)
    nbrs = graph.rows[i]
    rows = list(graph.rows)
    m = nbrs
    while m:
        j = (m & -m).bit_length() - 1
        m &= m - 1
        rows[j] ^= nbrs & ~(1 << j)
    return Graph.from_rows(graph.labels, rows)


def pivot(graph: Graph, u, v) -> Graph:
    """Pivot the edge uv: local complement at u, v, then u again."""
    if not graph.has_edge(u, v):
        raise NotAnEdgeError(f"{u!r}{v!r} is not an edge")
    return local_complement(local_complement(local_complement(graph, u), v), u)


# -- witness scripts ----------------------------------------------------------


def apply_ops(graph: Graph, ops: Sequence[Tuple]) -> Graph:
    """Replay a script.  A ``keep`` op induces and must come last."""
    g = graph
    for pos, op in enumerate(ops):
        kind = op[0]
        if kind == "lc":
            g = local_complement(g, op[1])
        elif kind == "pivot":
            g = pivot(g, op[1], op[2])
        elif kind == "keep":
            if pos != len(ops) - 1:
                raise VmkitError("keep must be the final script operation")
            g = g.induce(op[1])
        else:
            raise VmkitError(f"unknown script operation {kind!r}")
    return g


def expand_pivots(ops: Sequence[Tuple]) -> List[Tuple]:
    """Rewrite every pivot as its three local complementations."""
    out: List[Tuple] = []
    for op in ops:
        if op[0] == "pivot":
            _, u, v = op
            out += [("lc", u), ("lc", v), ("lc", u)]
        else:
            out.append(op)
    return out


def format_script(ops: Sequence[Tuple]) -> str:
    lines = []
    for op in ops:
        if op[0] == "lc":
            lines.append(f"lc {op[1]}")
        elif op[0] == "pivot":
            lines.append(f"pivot {op[1]} {op[2]}")
        elif op[0] == "keep":
            lines.append("keep " + ",".join(str(v) for v in op[1]))
        else:
            raise VmkitError(f"unknown script operation {op[0]!r}")
    return "\n".join(lines) + ("\n" if lines else "")


def parse_script(text: str) -> List[Tuple]:
    ops: List[Tuple] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "lc" and len(parts) == 2:
            ops.append(("lc", _label(parts[1])))
        elif parts[0] == "pivot" and len(parts) == 3:
            ops.append(("pivot", _label(parts[1]), _label(parts[2])))
        elif parts[0] == "keep" and len(parts) == 2:
            ops.append(("keep", tuple(_label(x) for x in parts[1].split(","))))
        else:
            raise VmkitError(f"bad script line {lineno}: {raw!r}")
    return ops


def _label(token: str):
    try:
        return int(token)
    except ValueError:
        return token


# -- orbits -------------------------------------------------------------------


@dataclass
class OrbitMember:
    graph: Graph
    ops: Tuple[Tuple, ...]


@dataclass
class Orbit:
    """Closure of a seed graph under local complementation or pivoting,
    deduplicated by canonical form.  ``exhausted`` is True iff the whole
    equivalence class fit within the member limit."""

    seed: Graph
    relation: str
    members: Dict[bytes, OrbitMember]
    exhausted: bool

    def __len__(self) -> int:
        return len(self.members)

    def canonical_keys(self) -> frozenset:
        """The canonical forms of all members (pairwise non-isomorphic)."""
        return frozenset(self.members)


def _successors(graph: Graph, relation: str):
    if relation == "local":
        for v in sorted(graph.labels):
            if graph.degree(v) >= 2:
                yield ("lc", v), local_complement(graph, v)
    elif relation == "pivot":
        for u, v in sorted(graph.edges()):
            yield ("pivot", u, v), pivot(graph, u, v)
    else:
        raise VmkitError(f"unknown relation {relation!r}; use 'local' or 'pivot'")


def orbit(graph: Graph, relation: str, member_limit: int = DEFAULT_BUDGET) -> Orbit:
    """Breadth-first closure under the relation, up to isomorphism.

    Expanding only one representative per isomorphism class is sound:
    relabeling a graph conjugates each operation to another operation,
    so the reachable classes from any two isomorphic graphs coincide.
    """
    if member_limit < 1:
        raise VmkitError("member_limit must be at least 1")
    members: Dict[bytes, OrbitMember] = {canonical_key(graph): OrbitMember(graph, ())}
    queue = deque([graph])
    exhausted = True
    while queue:
        current = queue.popleft()
        base_ops = members[canonical_key(current)].ops
        for op, nxt in _successors(current, relation):
            key = canonical_key(nxt)
            if key in members:
                continue
            if len(members) >= member_limit:
                return Orbit(graph, relation, members, False)
            members[key] = OrbitMember(nxt, base_ops + (op,))
            queue.append(nxt)
    return Orbit(graph, relation, members, exhausted)


# -- minor containment --------------------------------------------------------

FOUND = "found"
ABSENT = "absent"
INCONCLUSIVE = "inconclusive"


@dataclass
class MinorSearch:
    """Outcome of a vertex-/pivot-minor search.

    ``status`` is one of found/absent/inconclusive; inconclusive means
    the orbit budget ran out before the class was exhausted and is
    deliberately distinct from absent.  When found, ``witness`` replays
    on the original graph to an induced copy of the pattern.
    """

    status: str
    witness: Optional[Tuple[Tuple, ...]]
    explored: int

    @property
    def found(self) -> bool:
        return self.status == FOUND


def _minor_search(graph: Graph, pattern: Graph, relation: str, budget: int) -> MinorSearch:
    if pattern.n > graph.n:
        return MinorSearch(ABSENT, None, 0)
    members: Dict[bytes, Tuple[Tuple, ...]] = {canonical_key(graph): ()}
    queue = deque([graph])

    hit, witness_set = contains_induced(graph, pattern)
    if hit:
        return MinorSearch(FOUND, (("keep", witness_set),), 1)

    while queue:
        current = queue.popleft()
        base_ops = members[canonical_key(current)]
        for op, nxt in _successors(current, relation):
            key = canonical_key(nxt)
            if key in members:
                continue
            if len(members) >= budget:
                return MinorSearch(INCONCLUSIVE, None, len(members))
            ops = base_ops + (op,)
            members[key] = ops
            hit, witness_set = contains_induced(nxt, pattern)
            if hit:
                return MinorSearch(FOUND, ops + (("keep", witness_set),), len(members))
            queue.append(nxt)
    return MinorSearch(ABSENT, None, len(members))


def has_vertex_minor(graph: Graph, pattern: Graph, budget: int = DEFAULT_BUDGET) -> MinorSearch:
    """Search for the pattern as an induced subgraph of some graph
    locally equivalent to the input."""
    return _minor_search(graph, pattern, "local", budget)


def has_pivot_minor(graph: Graph, pattern: Graph, budget: int = DEFAULT_BUDGET) -> MinorSearch:
    """Search for the pattern as an induced subgraph of some graph
    pivot equivalent to the input."""
    return _minor_search(graph, pattern, "pivot", budget)


def verify_witness(graph: Graph, pattern: Graph, ops: Sequence[Tuple]) -> bool:
    """Replay a minor witness and check the result is isomorphic to the
    pattern.  Independent of the search path that produced the script."""
    from vmkit.canonical import is_isomorphic

    try:
        result = apply_ops(graph, ops)
    except VmkitError:
        return False
    return is_isomorphic(result, pattern)
