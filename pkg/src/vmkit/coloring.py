"""Exact chromatic and clique numbers by branch and bound.

Capped searches for small graphs: the clique bound drives the coloring
search, and color classes are introduced one at a time to break color
symmetry.
"""

from __future__ import annotations

from typing import List

from vmkit.errors import BudgetError
from vmkit.graphs import Graph

COLORING_CAP = 16


def clique_number(graph: Graph, cap: int = COLORING_CAP) -> int:
    """Maximum clique size (0 for the empty graph)."""
    if graph.n > cap:
        raise BudgetError(f"clique number is exact only up to {cap} vertices")
    if graph.n == 0:
        return 0
    order = sorted(range(graph.n), key=lambda v: -graph.rows[v].bit_count())
    rows = graph.rows
    best = [1]

    def expand(size: int, cand: int):
        if size + cand.bit_count() <= best[0]:
            return
        if not cand:
            best[0] = max(best[0], size)
            return
        while cand:
            if size + cand.bit_count() <= best[0]:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            expand(size + 1, cand & rows[v])

    expand(0, (1 << graph.n) - 1)
    return best[0]


def chromatic_number(graph: Graph, cap: int = COLORING_CAP) -> int:
    """Least number of colors in a proper coloring (0 for the empty
    graph); found by k-colorability search upward from the clique size."""
    if graph.n > cap:
        raise BudgetError(f"chromatic number is exact only up to {cap} vertices")
    if graph.n == 0:
        return 0
    if graph.edge_count() == 0:
        return 1
    lower = clique_number(graph, cap=cap)
    for k in range(lower, graph.n + 1):
        if _colorable(graph, k):
            return k
    return graph.n  # pragma: no cover


def _colorable(graph: Graph, k: int) -> bool:
    order = sorted(range(graph.n), key=lambda v: -graph.rows[v].bit_count())
    rows = graph.rows
    color: List[int] = [-1] * graph.n

    def assign(pos: int, used: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        forbidden = 0
        m = rows[v]
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            if color[u] >= 0:
                forbidden |= 1 << color[u]
        # existing colors first, then at most one fresh color
        limit = min(used + 1, k)
        for c in range(limit):
            if forbidden >> c & 1:
                continue
            color[v] = c
            if assign(pos + 1, max(used, c + 1)):
                return True
            color[v] = -1
        return False

    return assign(0, 0)
