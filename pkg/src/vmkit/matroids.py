"""Binary matroids from GF(2) representation matrices.

A matroid is a labeled ground set plus a representation whose columns
are indexed by the elements; rank of an element subset is the GF(2)
rank of its column submatrix.  Connectivity uses the standard
lambda(X) = r(X) + r(E minus X) - r(E), which matches the cut-rank of a
fundamental graph taken over any basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from vmkit.canonical import canonical_key_rows
from vmkit.errors import (
    BudgetError,
    InvalidBasisError,
    InvalidElementError,
    VmkitError,
)
from vmkit.gf2 import BitMatrix, rank_of_masks
from vmkit.graphs import Graph
from vmkit.width import ConnectivitySystem, DEPTH_CAP, system_depth

MINOR_CAP = 10


class BinaryMatroid:
    """Ground set with a GF(2) representation (one column per element)."""

    __slots__ = ("elements", "matrix", "_pos", "_rank_full")

    def __init__(self, elements: Sequence, matrix: BitMatrix):
        self.elements = tuple(elements)
        self._pos = {e: i for i, e in enumerate(self.elements)}
        if len(self._pos) != len(self.elements):
            raise InvalidElementError("duplicate element labels")
        if matrix.cols != len(self.elements):
            raise VmkitError("matrix column count must match the ground set")
        self.matrix = matrix
        self._rank_full = rank_of_masks(matrix.data, matrix.cols)

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def rank(self) -> int:
        return self._rank_full

    def index(self, e) -> int:
        try:
            return self._pos[e]
        except KeyError:
            raise InvalidElementError(f"unknown element {e!r}") from None

    def mask_of(self, subset: Iterable) -> int:
        mask = 0
        for e in subset:
            mask |= 1 << self.index(e)
        return mask

    def labels_of(self, mask: int) -> Tuple:
        out = []
        while mask:
            i = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            out.append(self.elements[i])
        return tuple(out)

    def rank_mask(self, mask: int) -> int:
        return rank_of_masks([r & mask for r in self.matrix.data], self.matrix.cols)

    def rank_fn(self, subset: Iterable) -> int:
        return self.rank_mask(self.mask_of(subset))

    def connectivity_mask(self, mask: int) -> int:
        full = (1 << self.size) - 1
        return self.rank_mask(mask) + self.rank_mask(full ^ mask) - self._rank_full

    def connectivity(self, subset: Iterable) -> int:
        return self.connectivity_mask(self.mask_of(subset))

    def connectivity_table(self) -> bytearray:
        full = (1 << self.size) - 1
        ranks = [self.rank_mask(m) for m in range(1 << self.size)]
        return bytearray(
            ranks[m] + ranks[full ^ m] - self._rank_full for m in range(1 << self.size)
        )

    def is_independent(self, subset: Iterable) -> bool:
        mask = self.mask_of(subset)
        return self.rank_mask(mask) == mask.bit_count()

    def bases(self) -> List[Tuple]:
        r = self._rank_full
        out = []
        for combo in combinations(range(self.size), r):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if self.rank_mask(mask) == r:
                out.append(tuple(self.elements[i] for i in combo))
        return out

    def loops(self) -> Tuple:
        cols = _column_masks(self.matrix)
        return tuple(e for i, e in enumerate(self.elements) if cols[i] == 0)

    def __repr__(self):
        return f"BinaryMatroid(elements={list(map(str, self.elements))}, rank={self.rank})"


def _column_masks(matrix: BitMatrix) -> List[int]:
    cols = [0] * matrix.cols
    for i, row in enumerate(matrix.data):
        r = row
        while r:
            j = (r & -r).bit_length() - 1
            r &= r - 1
            cols[j] |= 1 << i
    return cols


def cycle_matroid(graph: Graph) -> BinaryMatroid:
    """Cycle matroid of a graph: elements are the edges, represented by
    the vertex-edge incidence matrix over GF(2).  Element labels are
    "u-v" with the endpoint labels in sorted order."""
    edges = sorted(tuple(sorted(e)) for e in graph.edges())
    labels = [f"{u}-{v}" for u, v in edges]
    rows = []
    for v in graph.labels:
        row = 0
        for j, (a, b) in enumerate(edges):
            if v == a or v == b:
                row |= 1 << j
        rows.append(row)
    return BinaryMatroid(labels, BitMatrix(graph.n, len(edges), tuple(rows)))


def _standard_form(matroid: BinaryMatroid, basis: Sequence) -> Dict:
    """Row-reduce so the basis columns form an identity; returns the
    pivot row (as a column mask) of each basis element."""
    basis = list(basis)
    basis_idx = [matroid.index(b) for b in basis]
    if len(set(basis_idx)) != len(basis_idx):
        raise InvalidBasisError("repeated basis element")
    if len(basis) != matroid.rank:
        raise InvalidBasisError(
            f"basis must have {matroid.rank} elements, got {len(basis)}"
        )
    rows = list(matroid.matrix.data)
    pivot_rows: Dict = {}
    used: Set[int] = set()
    for b, col in zip(basis, basis_idx):
        bit = 1 << col
        pick = None
        for i, row in enumerate(rows):
            if i not in used and row & bit:
                pick = i
                break
        if pick is None:
            raise InvalidBasisError(f"element {b!r} is dependent on the others")
        for i in range(len(rows)):
            if i != pick and rows[i] & bit:
                rows[i] ^= rows[pick]
        used.add(pick)
        pivot_rows[b] = pick
    return {b: rows[i] for b, i in pivot_rows.items()}


def fundamental_graph(matroid: BinaryMatroid, basis: Sequence) -> Graph:
    """Bipartite fundamental graph over a basis: a basis element is
    adjacent to a non-basis element iff it lies in that element's
    fundamental circuit."""
    reduced = _standard_form(matroid, basis)
    basis_set = set(basis)
    cobasis = [e for e in matroid.elements if e not in basis_set]
    edges = []
    for b, row in reduced.items():
        for e in cobasis:
            if row >> matroid.index(e) & 1:
                edges.append((b, e))
    return Graph(list(basis) + cobasis, edges)


def matroid_minor(matroid: BinaryMatroid, delete: Iterable = (), contract: Iterable = ()) -> BinaryMatroid:
    """Delete and contract element sets (disjoint).  Contraction pivots
    an independent element out of the representation; a dependent
    (loop-like) contraction degenerates to deletion."""
    del_set = set(delete)
    con_set = set(contract)
    if del_set & con_set:
        raise VmkitError("delete and contract sets must be disjoint")
    for e in del_set | con_set:
        matroid.index(e)

    rows = list(matroid.matrix.data)
    removed_cols = {matroid.index(e) for e in del_set}
    for e in sorted(con_set, key=matroid.index):
        col = matroid.index(e)
        bit = 1 << col
        pick = None
        for i, row in enumerate(rows):
            if row & bit:
                pick = i
                break
        removed_cols.add(col)
        if pick is None:
            continue  # loop: contraction equals deletion
        pivot_row = rows[pick]
        rows = [
            row ^ pivot_row if (row & bit and i != pick) else row
            for i, row in enumerate(rows)
        ]
        rows.pop(pick)

    keep = [i for i in range(matroid.size) if i not in removed_cols]
    new_rows = []
    for row in rows:
        packed = 0
        for jj, j in enumerate(keep):
            if row >> j & 1:
                packed |= 1 << jj
        new_rows.append(packed)
    labels = [matroid.elements[i] for i in keep]
    return BinaryMatroid(labels, BitMatrix(len(new_rows), len(keep), tuple(new_rows)))


def dual(matroid: BinaryMatroid) -> BinaryMatroid:
    """Dual matroid via the standard-form identity: if M = [I | D] on
    (basis, cobasis), then M* = [D^T | I] on the same labels."""
    basis = _greedy_basis(matroid)
    reduced = _standard_form(matroid, basis)
    basis_set = set(basis)
    cobasis = [e for e in matroid.elements if e not in basis_set]
    rows = []
    for e in cobasis:
        row = 1 << matroid.index(e)
        for b in basis:
            if reduced[b] >> matroid.index(e) & 1:
                row |= 1 << matroid.index(b)
        rows.append(row)
    return BinaryMatroid(matroid.elements, BitMatrix(len(rows), matroid.size, tuple(rows)))


def _greedy_basis(matroid: BinaryMatroid) -> List:
    basis: List = []
    mask = 0
    r = 0
    for i, e in enumerate(matroid.elements):
        cand = mask | (1 << i)
        if matroid.rank_mask(cand) > r:
            basis.append(e)
            mask = cand
            r += 1
    return basis


def branch_depth(matroid: BinaryMatroid, cap: int = DEPTH_CAP) -> int:
    """Depth parameter of the matroid connectivity function; 0 below
    two elements."""
    if matroid.size < 2:
        return 0
    if matroid.size > cap:
        raise BudgetError(f"branch-depth is exact only up to {cap} elements")
    sys = ConnectivitySystem(matroid.elements, table=matroid.connectivity_table())
    return system_depth(sys, cap=cap)


def connectivity_system(matroid: BinaryMatroid) -> ConnectivitySystem:
    return ConnectivitySystem(matroid.elements, table=matroid.connectivity_table())


# -- isomorphism and minors ---------------------------------------------------


def _fundamental_key(matroid: BinaryMatroid, basis: Sequence) -> bytes:
    """Canonical key of the fundamental graph with the bipartition
    (basis side, cobasis side) respected."""
    fg = fundamental_graph(matroid, basis)
    basis_set = set(basis)
    colors = [0 if v in basis_set else 1 for v in fg.labels]
    key, _ = canonical_key_rows(fg.n, fg.rows, init_colors=colors)
    return key


def _all_basis_keys(matroid: BinaryMatroid) -> Set[bytes]:
    return {_fundamental_key(matroid, b) for b in matroid.bases()}


def is_matroid_isomorphic(m1: BinaryMatroid, m2: BinaryMatroid) -> bool:
    """Exact isomorphism by matching fundamental graphs: fix one basis
    of m1 and compare its bipartition-respecting canonical key against
    the keys of all bases of m2."""
    if m1.size != m2.size or m1.rank != m2.rank:
        return False
    if len(m1.loops()) != len(m2.loops()):
        return False
    if m1.size == 0:
        return True
    key1 = _fundamental_key(m1, _greedy_basis(m1))
    return key1 in _all_basis_keys(m2)


@dataclass
class MatroidMinorSearch:
    """Outcome of a minor search; when found, the witness is the pair
    (deleted elements, contracted elements)."""

    status: str  # found | absent | inconclusive
    witness: Optional[Tuple[Tuple, Tuple]]
    explored: int

    @property
    def found(self) -> bool:
        return self.status == "found"


def has_matroid_minor(
    matroid: BinaryMatroid,
    target: BinaryMatroid,
    budget: int = 200_000,
    cap: int = MINOR_CAP,
) -> MatroidMinorSearch:
    """Exhaustive search over delete/contract pairs for a minor
    isomorphic to the target."""
    if matroid.size > cap:
        raise BudgetError(f"minor search is exact only up to {cap} elements")
    diff = matroid.size - target.size
    if diff < 0:
        return MatroidMinorSearch("absent", None, 0)
    target_keys = _all_basis_keys(target) if target.size else None
    explored = 0
    for removed in combinations(range(matroid.size), diff):
        for split in range(1 << diff):
            if explored >= budget:
                return MatroidMinorSearch("inconclusive", None, explored)
            explored += 1
            del_e = tuple(
                matroid.elements[i] for j, i in enumerate(removed) if split >> j & 1
            )
            con_e = tuple(
                matroid.elements[i] for j, i in enumerate(removed) if not split >> j & 1
            )
            minor = matroid_minor(matroid, del_e, con_e)
            if minor.rank != target.rank or len(minor.loops()) != len(target.loops()):
                continue
            if target.size == 0 or _fundamental_key(minor, _greedy_basis(minor)) in target_keys:
                return MatroidMinorSearch("found", (del_e, con_e), explored)
    return MatroidMinorSearch("absent", None, explored)


# -- text format ---------------------------------------------------------------


def parse_matroid(text: str) -> BinaryMatroid:
    """Read the whitespace format: a header line of element names, then
    one 0/1 matrix row per line."""
    lines = [
        ln for ln in (raw.strip() for raw in text.splitlines())
        if ln and not ln.startswith("#")
    ]
    if not lines:
        raise VmkitError("empty matroid input")
    elements = lines[0].split()
    rows = []
    for lineno, ln in enumerate(lines[1:], start=2):
        bits = ln.split()
        if len(bits) != len(elements):
            raise VmkitError(
                f"line {lineno}: expected {len(elements)} entries, got {len(bits)}"
            )
        row = 0
        for j, b in enumerate(bits):
            if b not in ("0", "1"):
                raise VmkitError(f"line {lineno}: entry {b!r} is not 0/1")
            if b == "1":
                row |= 1 << j
        rows.append(row)
    return BinaryMatroid(elements, BitMatrix(len(rows), len(elements), tuple(rows)))


def format_matroid(matroid: BinaryMatroid) -> str:
    lines = [" ".join(str(e) for e in matroid.elements)]
    for row in matroid.matrix.data:
        lines.append(" ".join(str(row >> j & 1) for j in range(matroid.size)))
    return "\n".join(lines) + "\n"
