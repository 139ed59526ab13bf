"""Desk-scale verification suites with structured, reproducible reports.

Every suite is deterministic given its seed: instances are generated in
a fixed order, evaluated (possibly across a thread pool), and folded
into a SuiteReport.  A failing instance carries a replayable witness
(an operation script, a decomposition in tree text, or the graph6 of
the offending graph).  Searches that can run out of budget report
``inconclusive``, which is never treated as a pass.
"""

from __future__ import annotations

import json
import math
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from vmkit.canonical import canonical_key, contains_induced, graphs_up_to, is_isomorphic
from vmkit.coloring import chromatic_number, clique_number
from vmkit.errors import VmkitError
from vmkit.gf2 import cut_rank, cutrank_table
from vmkit.graph6 import write_graph6
from vmkit.graphs import (
    Graph,
    bull,
    bw3_complement,
    c5,
    fan,
    half_graph_family,
    n_graph,
    path,
    q_graph,
    star,
    w4,
)
from vmkit.matroids import (
    BinaryMatroid,
    cycle_matroid,
    dual,
    fundamental_graph,
    has_matroid_minor,
)
from vmkit.gf2 import BitMatrix
from vmkit.vm import (
    apply_ops,
    format_script,
    has_pivot_minor,
    has_vertex_minor,
    local_complement,
    orbit,
    verify_witness,
)
from vmkit.width import (
    ConnectivitySystem,
    balance_partition,
    decomposition_width,
    linear_rank_width,
    merge_decomposition,
    radius,
    rank_depth,
    rank_depth_decomposition,
    rank_width_decomposition,
    serialize_tree,
)

DEFAULT_BUDGET = 200_000

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


@dataclass
class Instance:
    name: str
    status: str
    detail: str = ""
    witness: Optional[str] = None


@dataclass
class SuiteReport:
    suite: str
    seed: int
    budget: int
    instances: int
    passed: int
    failed: int
    inconclusive: int
    failures: List[Instance]
    notes: List[str]
    wall_time: float

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.inconclusive == 0

    def to_json_dict(self) -> Dict:
        """Deterministic fields only; wall time is excluded so reruns
        reproduce the report byte for byte."""
        return {
            "suite": self.suite,
            "seed": self.seed,
            "budget": self.budget,
            "instances": self.instances,
            "passed": self.passed,
            "failed": self.failed,
            "inconclusive": self.inconclusive,
            "failures": [
                {
                    "instance": f.name,
                    "status": f.status,
                    "detail": f.detail,
                    "witness": f.witness,
                }
                for f in self.failures
            ],
            "notes": self.notes,
        }

    def format_text(self) -> str:
        flag = "ok" if self.ok else "FAIL"
        lines = [
            f"{self.suite}: {flag} instances={self.instances} pass={self.passed}"
            f" fail={self.failed} inconclusive={self.inconclusive}"
            f" time={self.wall_time:.2f}s"
        ]
        for f in self.failures:
            lines.append(f"  {f.status.upper()} {f.name}: {f.detail}")
            if f.witness:
                lines.append("    witness: " + f.witness.replace("\n", "; ").strip("; "))
        for note in self.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines)


def _worker_count() -> int:
    env = os.environ.get("VMKIT_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return min(8, os.cpu_count() or 1)


def _evaluate(tasks: List[Callable[[], Instance]]) -> List[Instance]:
    workers = _worker_count()
    if workers <= 1 or len(tasks) <= 1:
        return [t() for t in tasks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda t: t(), tasks))


def _finish(suite: str, seed: int, budget: int, results: List[Instance],
            notes: List[str], started: float) -> SuiteReport:
    failures = [r for r in results if r.status != PASS]
    return SuiteReport(
        suite=suite,
        seed=seed,
        budget=budget,
        instances=len(results),
        passed=sum(1 for r in results if r.status == PASS),
        failed=sum(1 for r in results if r.status == FAIL),
        inconclusive=sum(1 for r in results if r.status == INCONCLUSIVE),
        failures=failures,
        notes=notes,
        wall_time=time.monotonic() - started,
    )


def _random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if rng.random() < p
    ]
    return Graph(range(1, n + 1), edges)


def _g6(graph: Graph) -> str:
    return write_graph6(graph)


# -- individual suites ---------------------------------------------------------


def suite_cutrank_invariance(seed: int, budget: int) -> SuiteReport:
    """Cut-rank tables are unchanged by local complementation."""
    started = time.monotonic()
    tasks = []

    def check(graph: Graph, v) -> Instance:
        name = f"{_g6(graph)} lc {v}"
        if cutrank_table(local_complement(graph, v)) == cutrank_table(graph):
            return Instance(name, PASS)
        return Instance(name, FAIL, "cut-rank table changed", f"lc {v}")

    for g in graphs_up_to(5):
        for v in g.labels:
            tasks.append(lambda g=g, v=v: check(g, v))
    rng = random.Random(seed)
    for _ in range(500):
        g = _random_graph(rng, rng.randint(6, 9))
        v = rng.choice(g.labels)
        tasks.append(lambda g=g, v=v: check(g, v))
    return _finish("cutrank_invariance", seed, budget, _evaluate(tasks), [], started)


def suite_minor_monotone(seed: int, budget: int) -> SuiteReport:
    """Cut-rank never grows along a vertex-minor derivation."""
    started = time.monotonic()
    tasks = []

    def check_all_keeps(graph: Graph, v) -> Instance:
        name = f"{_g6(graph)} lc {v} all-keeps"
        table = cutrank_table(graph)
        h_full = local_complement(graph, v)
        n = graph.n
        for keep_mask in range(1, 1 << n):
            keep = [graph.labels[i] for i in range(n) if keep_mask >> i & 1]
            sub = h_full.induce(keep)
            sub_table = cutrank_table(sub)
            for x_mask in range(1 << n):
                inter = x_mask & keep_mask
                sub_mask = 0
                pos = 0
                for i in range(n):
                    if keep_mask >> i & 1:
                        if inter >> i & 1:
                            sub_mask |= 1 << pos
                        pos += 1
                if sub_table[sub_mask] > table[x_mask]:
                    return Instance(
                        name, FAIL,
                        f"rho grew on keep={keep} X={x_mask:b}",
                        format_script((("lc", v), ("keep", tuple(keep)))),
                    )
        return Instance(name, PASS)

    for g in graphs_up_to(5):
        for v in g.labels:
            tasks.append(lambda g=g, v=v: check_all_keeps(g, v))

    rng = random.Random(seed)

    def check_random(graph: Graph, ops: Tuple, keep: Tuple, xs: List[Tuple]) -> Instance:
        name = f"{_g6(graph)} derived"
        h = apply_ops(graph, ops + (("keep", keep),))
        keep_set = set(keep)
        for x in xs:
            x_in = tuple(v for v in x if v in keep_set)
            if cut_rank(h, x_in) > cut_rank(graph, x):
                return Instance(name, FAIL, f"rho grew at X={x}",
                                format_script(ops + (("keep", keep),)))
        return Instance(name, PASS)

    for _ in range(500):
        g = _random_graph(rng, rng.randint(2, 9))
        ops = tuple(("lc", rng.choice(g.labels)) for _ in range(rng.randint(0, 6)))
        keep = tuple(v for v in g.labels if rng.random() < 0.7) or (g.labels[0],)
        xs = [
            tuple(v for v in g.labels if rng.random() < 0.5)
            for _ in range(10)
        ]
        tasks.append(lambda g=g, ops=ops, keep=keep, xs=xs: check_random(g, ops, keep, xs))
    return _finish("minor_monotone", seed, budget, _evaluate(tasks), [], started)


def suite_pivot_paths(seed: int, budget: int) -> SuiteReport:
    """Half-graphs over cliques/independent sets pivot down to paths."""
    started = time.monotonic()
    tasks = []

    def check(graph: Graph, target: Graph, name: str) -> Instance:
        res = has_pivot_minor(graph, target, budget=budget)
        if res.status == "inconclusive":
            return Instance(name, INCONCLUSIVE, f"budget {budget} exhausted")
        if not res.found:
            return Instance(name, FAIL, "expected pivot-minor not found", _g6(graph))
        if not verify_witness(graph, target, res.witness):
            return Instance(name, FAIL, "witness replay failed", format_script(res.witness))
        return Instance(name, PASS, witness=format_script(res.witness))

    for n in (1, 2, 3):
        g1 = half_graph_family("complete", "edgeless", n)
        tasks.append(lambda g=g1, t=path(n + 1), n=n: check(g, t, f"K{n}vS{n} -> P{n + 1}"))
        g2 = half_graph_family("edgeless", "edgeless", n)
        tasks.append(lambda g=g2, t=path(2 * n), n=n: check(g, t, f"S{n}vS{n} -> P{2 * n}"))
    return _finish("pivot_paths", seed, budget, _evaluate(tasks), [], started)


def suite_rd_component(seed: int, budget: int) -> SuiteReport:
    """Some connected component loses at most one from the rank-depth."""
    started = time.monotonic()
    tasks = []

    def check(graph: Graph) -> Instance:
        name = _g6(graph)
        m = rank_depth(graph)
        best = max(rank_depth(graph.induce(c)) for c in graph.components())
        if best >= m - 1:
            return Instance(name, PASS)
        _, witness = rank_depth_decomposition(graph)
        return Instance(name, FAIL, f"rd={m} but best component rd={best}",
                        serialize_tree(witness) if witness else None)

    for g in graphs_up_to(7):
        tasks.append(lambda g=g: check(g))
    return _finish("rd_component", seed, budget, _evaluate(tasks), [], started)


def suite_rd_separation(seed: int, budget: int) -> SuiteReport:
    """Deleting A keeps a component of rank-depth at least rd(G)-|A|."""
    started = time.monotonic()
    tasks = []

    def check(graph: Graph) -> Instance:
        name = _g6(graph)
        m = rank_depth(graph)
        n = graph.n
        for a_mask in range(1, (1 << n) - 1):
            need = m - a_mask.bit_count()
            if need <= 0:
                continue  # every component has rank-depth >= 0
            rest = [graph.labels[i] for i in range(n) if not a_mask >> i & 1]
            sub = graph.induce(rest)
            best = max(rank_depth(sub.induce(c)) for c in sub.components())
            if best < need:
                a = [graph.labels[i] for i in range(n) if a_mask >> i & 1]
                return Instance(name, FAIL, f"rd={m}, A={a}, best component rd={best}",
                                _g6(graph))
        return Instance(name, PASS)

    for g in graphs_up_to(7):
        tasks.append(lambda g=g: check(g))
    return _finish("rd_separation", seed, budget, _evaluate(tasks), [], started)


def suite_rd_merge(seed: int, budget: int) -> SuiteReport:
    """Merging both sides of a cut costs at most the cut-rank plus one;
    the two-hub construction is exercised on a seeded sample."""
    started = time.monotonic()
    tasks = []

    def check_inequality(graph: Graph) -> Instance:
        name = _g6(graph)
        table = cutrank_table(graph)
        rd = rank_depth(graph)
        n = graph.n
        for a_mask in range(1, (1 << n) - 1):
            a = [graph.labels[i] for i in range(n) if a_mask >> i & 1]
            b = [graph.labels[i] for i in range(n) if not a_mask >> i & 1]
            m = 0
            for side in (a, b):
                sub = graph.induce(side)
                for comp in sub.components():
                    m = max(m, rank_depth(sub.induce(comp)))
            m = max(m, 1)
            d = max(table[a_mask], 1)
            if rd > m + d + 1:
                return Instance(name, FAIL, f"rd={rd} > m+d+1 with A={a}, m={m}, d={d}",
                                _g6(graph))
        return Instance(name, PASS)

    for g in graphs_up_to(7):
        tasks.append(lambda g=g: check_inequality(g))

    rng = random.Random(seed)

    def check_construction(graph: Graph, a_mask: int) -> Instance:
        a = [graph.labels[i] for i in range(graph.n) if a_mask >> i & 1]
        name = f"{_g6(graph)} A={','.join(map(str, a))}"
        b = [v for v in graph.labels if v not in set(a)]
        parts_a, parts_b = [], []
        m = 1
        for side, parts in ((a, parts_a), (b, parts_b)):
            sub = graph.induce(side)
            for comp in sub.components():
                comp_graph = sub.induce(comp)
                if comp_graph.n == 1:
                    parts.append(_singleton_decomposition(comp[0]))
                else:
                    value, decomp = rank_depth_decomposition(comp_graph)
                    m = max(m, value)
                    parts.append(decomp)
        d = max(cut_rank(graph, a), 1)
        merged = merge_decomposition(graph, a, parts_a, parts_b, m=m, d=d)
        sys = ConnectivitySystem.from_graph(graph)
        width = decomposition_width(merged, sys)
        rad = radius(merged)
        if width <= m + d and rad <= m + 2 and max(width, rad) <= m + d + 1:
            return Instance(name, PASS)
        return Instance(name, FAIL, f"width={width} radius={rad} m={m} d={d}",
                        serialize_tree(merged))

    for _ in range(60):
        g = _random_graph(rng, rng.randint(2, 7))
        a_mask = rng.randint(1, (1 << g.n) - 2)
        tasks.append(lambda g=g, a=a_mask: check_construction(g, a))
    return _finish("rd_merge", seed, budget, _evaluate(tasks), [], started)


def _singleton_decomposition(element):
    from vmkit.width import Decomposition

    return Decomposition([], {element: 0}, nodes=[0])


def suite_balance(seed: int, budget: int) -> SuiteReport:
    """Balance partitions along rank decompositions meet all three
    postconditions."""
    started = time.monotonic()
    tasks = []

    def check(graph: Graph, marked: Tuple, k: int) -> Instance:
        name = f"{_g6(graph)} k={k} M={','.join(map(str, marked))}"
        width, decomp = rank_width_decomposition(graph)
        x, y = balance_partition(graph, decomp, marked, k)
        mx = sum(1 for v in marked if v in set(x))
        my = sum(1 for v in marked if v in set(y))
        if sorted(x + y) != sorted(graph.labels):
            return Instance(name, FAIL, "not a partition", serialize_tree(decomp))
        if mx <= k or my <= k:
            return Instance(name, FAIL, f"unbalanced: {mx}/{my} with k={k}",
                            serialize_tree(decomp))
        if cut_rank(graph, x) > width:
            return Instance(name, FAIL, "cut exceeds decomposition width",
                            serialize_tree(decomp))
        return Instance(name, PASS)

    g7 = path(7)
    tasks.append(lambda: check(g7, tuple(g7.labels), 2))
    rng = random.Random(seed)
    for _ in range(100):
        n = rng.randint(7, 9)
        g = _random_graph(rng, n)
        k = rng.choice([1, 2]) if n >= 7 else 1
        if 3 * k + 1 > n:
            k = 1
        marked = tuple(sorted(rng.sample(list(g.labels), 3 * k + 1)))
        tasks.append(lambda g=g, m=marked, k=k: check(g, m, k))
    return _finish("balance", seed, budget, _evaluate(tasks), [], started)


def suite_halfgraph_p5_free(seed: int, budget: int) -> SuiteReport:
    """Half-graphs of two cliques never pivot down to the 5-vertex path."""
    started = time.monotonic()
    tasks = []

    def check(n: int) -> Instance:
        g = half_graph_family("complete", "complete", n)
        name = f"K{n}vK{n} no P5 pivot-minor"
        res = has_pivot_minor(g, path(5), budget=budget)
        if res.status == "inconclusive":
            return Instance(name, INCONCLUSIVE, f"budget {budget} exhausted")
        if res.found:
            return Instance(name, FAIL, "unexpected pivot-minor",
                            format_script(res.witness))
        return Instance(name, PASS, detail=f"orbit exhausted ({res.explored} classes)")

    for n in (1, 2, 3, 4):
        tasks.append(lambda n=n: check(n))
    return _finish("halfgraph_p5_free", seed, budget, _evaluate(tasks), [], started)


def suite_halfgraph_vm_path(seed: int, budget: int) -> SuiteReport:
    """Half-graphs of two cliques contain long path vertex-minors."""
    started = time.monotonic()
    tasks = []

    def check(n: int) -> Instance:
        g = half_graph_family("complete", "complete", n)
        target = path(2 * n - 2)
        name = f"K{n}vK{n} -> P{2 * n - 2} vertex-minor"
        res = has_vertex_minor(g, target, budget=budget)
        if res.status == "inconclusive":
            return Instance(name, INCONCLUSIVE, f"budget {budget} exhausted")
        if not res.found:
            return Instance(name, FAIL, "expected vertex-minor missing", _g6(g))
        if not verify_witness(g, target, res.witness):
            return Instance(name, FAIL, "witness replay failed", format_script(res.witness))
        return Instance(name, PASS, witness=format_script(res.witness))

    for n in (2, 3, 4):
        tasks.append(lambda n=n: check(n))
    return _finish("halfgraph_vm_path", seed, budget, _evaluate(tasks), [], started)


def _claw_obstructions() -> List[Tuple[str, Graph]]:
    return [
        ("K1,3", star(3)),
        ("P5", path(5)),
        ("bull", bull()),
        ("W4", w4()),
        ("BW3-complement", bw3_complement()),
    ]


def suite_knkn_forbidden(seed: int, budget: int) -> SuiteReport:
    """Half-graphs of two cliques avoid all five claw obstructions as
    induced subgraphs."""
    started = time.monotonic()
    tasks = []

    def check(n: int, tag: str, pattern: Graph) -> Instance:
        g = half_graph_family("complete", "complete", n)
        name = f"K{n}vK{n} induced {tag}"
        found, witness = contains_induced(g, pattern)
        if found:
            return Instance(name, FAIL, "forbidden induced subgraph present",
                            format_script((("keep", witness),)))
        return Instance(name, PASS)

    for n in range(1, 7):
        for tag, pattern in _claw_obstructions():
            tasks.append(lambda n=n, t=tag, p=pattern: check(n, t, p))
    return _finish("knkn_forbidden", seed, budget, _evaluate(tasks), [], started)


def suite_dabrowski_claw(seed: int, budget: int) -> SuiteReport:
    """Claw pivot-minors are characterized by five induced subgraphs,
    both directions, on every graph with at most 6 vertices."""
    started = time.monotonic()
    tasks = []
    obstructions = _claw_obstructions()
    claw = star(3)

    def check(graph: Graph) -> Instance:
        name = _g6(graph)
        res = has_pivot_minor(graph, claw, budget=budget)
        if res.status == "inconclusive":
            return Instance(name, INCONCLUSIVE, f"budget {budget} exhausted")
        has_obstruction = None
        for tag, pattern in obstructions:
            found, witness = contains_induced(graph, pattern)
            if found:
                has_obstruction = (tag, witness)
                break
        if res.found and has_obstruction is None:
            return Instance(name, FAIL, "claw pivot-minor without any obstruction",
                            format_script(res.witness))
        if not res.found and has_obstruction is not None:
            tag, witness = has_obstruction
            return Instance(name, FAIL, f"induced {tag} but no claw pivot-minor",
                            format_script((("keep", witness),)))
        return Instance(name, PASS)

    for g in graphs_up_to(6):
        tasks.append(lambda g=g: check(g))
    return _finish("dabrowski_claw", seed, budget, _evaluate(tasks), [], started)


def suite_lrw_square_bound(seed: int, budget: int) -> SuiteReport:
    """Linear rank-width is at most the square of the rank-depth."""
    started = time.monotonic()
    tasks = []

    def check(graph: Graph) -> Instance:
        name = _g6(graph)
        lrw = linear_rank_width(graph)
        rd = rank_depth(graph)
        if lrw <= rd * rd:
            return Instance(name, PASS)
        return Instance(name, FAIL, f"lrw={lrw} > rd^2={rd * rd}", _g6(graph))

    for g in graphs_up_to(7):
        tasks.append(lambda g=g: check(g))
    return _finish("lrw_square_bound", seed, budget, _evaluate(tasks), [], started)


def _lrw1_obstructions() -> List[Tuple[str, Graph]]:
    return [("C5", c5()), ("N", n_graph()), ("Q", q_graph())]


def suite_lrw1_equivalence(seed: int, budget: int) -> SuiteReport:
    """Linear rank-width at most one iff none of the three path
    obstructions occurs as a vertex-minor."""
    started = time.monotonic()
    tasks = []
    obstructions = _lrw1_obstructions()

    def check(graph: Graph) -> Instance:
        name = _g6(graph)
        lrw = linear_rank_width(graph)
        hit = None
        for tag, pattern in obstructions:
            res = has_vertex_minor(graph, pattern, budget=budget)
            if res.status == "inconclusive":
                return Instance(name, INCONCLUSIVE, f"budget {budget} exhausted on {tag}")
            if res.found:
                hit = (tag, res.witness)
                break
        if lrw <= 1 and hit is not None:
            tag, witness = hit
            return Instance(name, FAIL, f"lrw={lrw} yet {tag} vertex-minor",
                            format_script(witness))
        if lrw > 1 and hit is None:
            return Instance(name, FAIL, f"lrw={lrw} but no obstruction vertex-minor",
                            _g6(graph))
        return Instance(name, PASS)

    for g in graphs_up_to(6):
        tasks.append(lambda g=g: check(g))
    return _finish("lrw1_equivalence", seed, budget, _evaluate(tasks), [], started)


def suite_path_vm_lrw1(seed: int, budget: int) -> SuiteReport:
    """Every vertex-minor of the 8-vertex path keeps linear rank-width
    at most one."""
    started = time.monotonic()
    orb = orbit(path(8), "local", budget)
    notes = [f"local orbit of P8: {len(orb)} classes, exhausted={orb.exhausted}"]
    tasks = []

    def check(member_key: bytes) -> Instance:
        member = orb.members[member_key]
        g = member.graph
        name = f"orbit member {_g6(g)}"
        n = g.n
        seen = set()
        for mask in range(1, 1 << n):
            keep = [g.labels[i] for i in range(n) if mask >> i & 1]
            sub = g.induce(keep)
            key = canonical_key(sub)
            if key in seen:
                continue
            seen.add(key)
            if linear_rank_width(sub) > 1:
                script = member.ops + (("keep", tuple(keep)),)
                return Instance(name, FAIL,
                                f"vertex-minor with lrw >= 2 via keep={keep}",
                                format_script(script))
        return Instance(name, PASS)

    if not orb.exhausted:
        tasks.append(lambda: Instance("orbit exhaustion", INCONCLUSIVE,
                                      f"budget {budget} exhausted"))
    for key in orb.members:
        tasks.append(lambda k=key: check(k))
    return _finish("path_vm_lrw1", seed, budget, _evaluate(tasks), notes, started)


def suite_path_rd_lower(seed: int, budget: int) -> SuiteReport:
    """Paths have rank-depth above the logarithmic lower bound, read
    with natural and base-2 logarithms."""
    started = time.monotonic()
    tasks = []

    def check(n: int) -> Instance:
        rd = rank_depth(path(n))
        natural = math.log(n) / math.log(1 + 4 * math.log(n))
        base2 = math.log2(n) / math.log2(1 + 4 * math.log2(n))
        name = f"P{n}"
        if rd > natural and rd > base2:
            return Instance(name, PASS,
                            detail=f"rd={rd} > ln-bound {natural:.3f}, log2-bound {base2:.3f}")
        return Instance(name, FAIL,
                        f"rd={rd} vs ln {natural:.3f} / log2 {base2:.3f}")

    for n in range(2, 9):
        tasks.append(lambda n=n: check(n))
    return _finish("path_rd_lower", seed, budget, _evaluate(tasks), [], started)


def suite_matroid_fg_identity(seed: int, budget: int) -> SuiteReport:
    """Matroid connectivity equals the cut-rank of a fundamental graph."""
    started = time.monotonic()
    rng = random.Random(seed)
    tasks = []

    def check(matroid: BinaryMatroid, basis: Tuple, tag: int) -> Instance:
        name = f"random matroid #{tag} ({matroid.size} elements)"
        fg = fundamental_graph(matroid, basis)
        for mask in range(1 << matroid.size):
            subset = [matroid.elements[i] for i in range(matroid.size) if mask >> i & 1]
            if matroid.connectivity(subset) != cut_rank(fg, subset):
                from vmkit.matroids import format_matroid

                return Instance(name, FAIL, f"mismatch at subset {subset}",
                                format_matroid(matroid))
        return Instance(name, PASS)

    made = 0
    while made < 100:
        ne = rng.randint(2, 8)
        nr = rng.randint(1, 5)
        rows = tuple(rng.randrange(1 << ne) for _ in range(nr))
        m = BinaryMatroid([f"e{i}" for i in range(ne)], BitMatrix(nr, ne, rows))
        bases = m.bases()
        if not bases:
            bases = [()]
        basis = rng.choice(bases)
        tasks.append(lambda m=m, b=basis, t=made: check(m, b, t))
        made += 1
    return _finish("matroid_fg_identity", seed, budget, _evaluate(tasks), [], started)


def suite_fan_fundamental(seed: int, budget: int) -> SuiteReport:
    """Fan matroids have odd paths as fundamental graphs over the spoke
    basis."""
    started = time.monotonic()
    tasks = []

    def check(t: int) -> Instance:
        m = cycle_matroid(fan(t))
        spokes = [f"{i}-{t + 1}" for i in range(1, t + 1)]
        fg = fundamental_graph(m, spokes)
        name = f"fan t={t}"
        if is_isomorphic(fg, path(2 * t - 1)):
            return Instance(name, PASS)
        return Instance(name, FAIL, f"fundamental graph is not P{2 * t - 1}", _g6(fg))

    for t in (2, 3, 4, 5):
        tasks.append(lambda t=t: check(t))
    return _finish("fan_fundamental", seed, budget, _evaluate(tasks), [], started)


def suite_fan_minor_chain(seed: int, budget: int) -> SuiteReport:
    """Fan matroids are minors of the next fan, and duals reach back one
    step further down the chain."""
    started = time.monotonic()
    tasks = []

    def check_primal(t: int) -> Instance:
        res = has_matroid_minor(cycle_matroid(fan(t + 1)), cycle_matroid(fan(t)))
        name = f"M(F{t + 1}) has M(F{t}) minor"
        if res.found:
            dele, cont = res.witness
            return Instance(name, PASS,
                            detail=f"delete={list(dele)} contract={list(cont)}")
        return Instance(name, FAIL, f"status={res.status}")

    def check_dual(t: int) -> Instance:
        res = has_matroid_minor(dual(cycle_matroid(fan(t))), cycle_matroid(fan(t - 1)))
        name = f"M(F{t})* has M(F{t - 1}) minor"
        if res.found:
            return Instance(name, PASS)
        return Instance(name, FAIL, f"status={res.status}")

    for t in (2, 3):
        tasks.append(lambda t=t: check_primal(t))
    for t in (3, 4):
        tasks.append(lambda t=t: check_dual(t))
    return _finish("fan_minor_chain", seed, budget, _evaluate(tasks), [], started)


def suite_chi_omega_spot(seed: int, budget: int) -> SuiteReport:
    """Report-only scan of the chromatic/clique ratio over small graphs
    of linear rank-width at most 2; no constant is asserted."""
    started = time.monotonic()
    results = []
    best = (0.0, "")
    for g in graphs_up_to(6):
        if linear_rank_width(g) > 2:
            continue
        chi = chromatic_number(g)
        omega = clique_number(g)
        ratio = chi / omega
        if ratio > best[0]:
            best = (ratio, _g6(g))
        results.append(Instance(f"{_g6(g)}", PASS, detail=f"chi={chi} omega={omega}"))
    notes = [f"empirical max chi/omega = {best[0]:.4f} at {best[1]}"]
    return _finish("chi_omega_spot", seed, budget, results, notes, started)


SUITES: Dict[str, Callable[[int, int], SuiteReport]] = {
    "cutrank_invariance": suite_cutrank_invariance,
    "minor_monotone": suite_minor_monotone,
    "pivot_paths": suite_pivot_paths,
    "rd_component": suite_rd_component,
    "rd_separation": suite_rd_separation,
    "rd_merge": suite_rd_merge,
    "balance": suite_balance,
    "halfgraph_p5_free": suite_halfgraph_p5_free,
    "halfgraph_vm_path": suite_halfgraph_vm_path,
    "knkn_forbidden": suite_knkn_forbidden,
    "dabrowski_claw": suite_dabrowski_claw,
    "lrw_square_bound": suite_lrw_square_bound,
    "lrw1_equivalence": suite_lrw1_equivalence,
    "path_vm_lrw1": suite_path_vm_lrw1,
    "path_rd_lower": suite_path_rd_lower,
    "matroid_fg_identity": suite_matroid_fg_identity,
    "fan_fundamental": suite_fan_fundamental,
    "fan_minor_chain": suite_fan_minor_chain,
    "chi_omega_spot": suite_chi_omega_spot,
}


def run_suite(name: str, seed: int = 1, budget: int = DEFAULT_BUDGET) -> SuiteReport:
    try:
        fn = SUITES[name]
    except KeyError:
        raise VmkitUsage(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    return fn(seed, budget)


def run_all(seed: int = 1, budget: int = DEFAULT_BUDGET) -> List[SuiteReport]:
    return [SUITES[name](seed, budget) for name in SUITES]


def reports_to_json(reports: List[SuiteReport], seed: int, budget: int) -> str:
    payload = {
        "seed": seed,
        "budget": budget,
        "suites": sorted((r.to_json_dict() for r in reports), key=lambda d: d["suite"]),
        "ok": all(r.ok for r in reports),
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


class VmkitUsage(VmkitError):
    """Usage error (unknown suite etc.)."""
