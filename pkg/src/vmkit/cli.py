"""Command-line interface (installed as ``vmkit``).

Exit codes: 0 success (for ``verify``: every check passed and none
inconclusive), 1 negative search result or failed verification,
2 usage/input error, 3 inconclusive search.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from vmkit.errors import VmkitError
from vmkit.graph6 import parse_graph6, write_graph6
from vmkit.graphs import family_names, generate
from vmkit.suites import DEFAULT_BUDGET, SUITES, reports_to_json, run_suite
from vmkit.vm import (
    format_script,
    has_pivot_minor,
    has_vertex_minor,
    orbit,
    parse_script,
    apply_ops,
)


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except VmkitError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vmkit",
        description="Exact vertex-minor calculus over GF(2): cut-rank, "
        "local complementation, depth/width parameters, binary matroids, "
        "and a lemma verification harness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a generator graph")
    p.add_argument("family", help="one of: " + ", ".join(family_names()))
    p.add_argument("params", nargs="*", help="family parameters")
    p.add_argument("--g6", action="store_true", help="print graph6 only")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("compute", help="compute a parameter of a graph")
    p.add_argument("what", choices=["rankdepth", "rankwidth", "lrw", "cutrank", "chi", "omega"])
    p.add_argument("--graph", required=True, help="graph6 string")
    p.add_argument("--set", dest="vertex_set", default=None,
                   help="comma-separated vertex labels (for cutrank)")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("contains", help="vertex-minor / pivot-minor / induced containment")
    p.add_argument("relation", choices=["vm", "pm", "induced"])
    p.add_argument("--graph", required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=_cmd_contains)

    p = sub.add_parser("orbit", help="enumerate an equivalence orbit")
    p.add_argument("relation", choices=["local", "pivot"])
    p.add_argument("--graph", required=True)
    p.add_argument("--limit", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("matroid", help="binary matroid computations")
    p.add_argument("what", choices=["branchdepth", "fundamental", "minor"])
    p.add_argument("--rep", required=True, help="matroid file (header of element names, 0/1 rows)")
    p.add_argument("--basis", default=None, help="comma-separated basis elements")
    p.add_argument("--delete", default="", help="comma-separated elements to delete")
    p.add_argument("--contract", default="", help="comma-separated elements to contract")
    p.set_defaults(func=_cmd_matroid)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", help="suite name or 'all'")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--json", dest="json_path", default=None, help="write a JSON report here")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("replay", help="re-check a witness script")
    p.add_argument("--graph", required=True, help="graph6 of the starting graph")
    p.add_argument("--script", required=True, help="witness script file")
    p.add_argument("--pattern", default=None,
                   help="graph6; verify the replayed graph is isomorphic to it")
    p.set_defaults(func=_cmd_replay)

    p = sub.add_parser("check-witness", help="re-verify a decomposition witness")
    p.add_argument("--graph", required=True, help="graph6 string")
    p.add_argument("--tree", required=True, help="nested-parenthesis tree text or @file")
    p.add_argument("--max-width", type=int, default=None)
    p.add_argument("--max-radius", type=int, default=None)
    p.set_defaults(func=_cmd_check_witness)

    return parser


def _labels_arg(text: str) -> list:
    out = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        out.append(int(token) if token.lstrip("-").isdigit() else token)
    return out


def _cmd_gen(args) -> int:
    g = generate(args.family, args.params)
    if args.g6:
        print(write_graph6(g))
        return 0
    print(f"graph: {args.family} {' '.join(map(str, args.params))}".rstrip())
    print(f"vertices ({g.n}): " + " ".join(map(str, g.labels)))
    print(f"edges ({g.edge_count()}): " + " ".join(f"{u}-{v}" for u, v in g.edges()))
    print(f"graph6: {write_graph6(g)}")
    return 0


def _cmd_compute(args) -> int:
    from vmkit.coloring import chromatic_number, clique_number
    from vmkit.gf2 import cut_rank
    from vmkit.width import (
        linear_rank_width_ordering,
        rank_depth_decomposition,
        rank_width_decomposition,
        serialize_tree,
    )

    g = parse_graph6(args.graph)
    if args.what == "cutrank":
        if args.vertex_set is None:
            print("error: cutrank needs --set", file=sys.stderr)
            return 2
        value = cut_rank(g, _labels_arg(args.vertex_set))
        print(f"cutrank = {value}")
        return 0
    if args.what == "rankdepth":
        value, witness = rank_depth_decomposition(g)
        print(f"rankdepth = {value}")
        if witness is not None:
            print(f"witness: {serialize_tree(witness)}")
        return 0
    if args.what == "rankwidth":
        value, witness = rank_width_decomposition(g)
        print(f"rankwidth = {value}")
        if witness is not None:
            print(f"witness: {serialize_tree(witness)}")
        return 0
    if args.what == "lrw":
        value, order = linear_rank_width_ordering(g)
        print(f"lrw = {value}")
        print("witness: " + ",".join(map(str, order)))
        return 0
    if args.what == "chi":
        print(f"chi = {chromatic_number(g)}")
        return 0
    print(f"omega = {clique_number(g)}")
    return 0


def _cmd_contains(args) -> int:
    g = parse_graph6(args.graph)
    pattern = parse_graph6(args.pattern)
    if args.relation == "induced":
        from vmkit.canonical import contains_induced

        found, witness = contains_induced(g, pattern)
        if found:
            print("found")
            print("witness: keep " + ",".join(map(str, witness)))
            return 0
        print("absent")
        return 1
    search = has_vertex_minor if args.relation == "vm" else has_pivot_minor
    res = search(g, pattern, budget=args.budget)
    print(res.status)
    if res.found:
        sys.stdout.write("witness:\n" + format_script(res.witness))
        return 0
    print(f"explored {res.explored} orbit members")
    return 1 if res.status == "absent" else 3


def _cmd_orbit(args) -> int:
    g = parse_graph6(args.graph)
    orb = orbit(g, args.relation, args.limit)
    print(f"members: {len(orb)}")
    print(f"exhausted: {'yes' if orb.exhausted else 'no'}")
    for g6 in sorted(write_graph6(m.graph) for m in orb.members.values()):
        print(g6)
    return 0


def _cmd_matroid(args) -> int:
    from vmkit.matroids import (
        branch_depth,
        format_matroid,
        fundamental_graph,
        matroid_minor,
        parse_matroid,
        _greedy_basis,
    )

    with open(args.rep, "r", encoding="utf-8") as fh:
        m = parse_matroid(fh.read())
    if args.what == "branchdepth":
        print(f"branchdepth = {branch_depth(m)}")
        return 0
    if args.what == "fundamental":
        basis = _labels_arg(args.basis) if args.basis else _greedy_basis(m)
        basis = [str(b) for b in basis]
        fg = fundamental_graph(m, basis)
        print("basis: " + " ".join(basis))
        print(f"vertices ({fg.n}): " + " ".join(map(str, fg.labels)))
        print(f"edges ({fg.edge_count()}): " + " ".join(f"{u}~{v}" for u, v in fg.edges()))
        print(f"graph6: {write_graph6(fg)}")
        return 0
    minor = matroid_minor(m, [str(x) for x in _labels_arg(args.delete)],
                          [str(x) for x in _labels_arg(args.contract)])
    sys.stdout.write(format_matroid(minor))
    return 0


def _cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in SUITES:
        print(f"error: unknown suite {args.suite!r}; known: "
              + ", ".join(sorted(SUITES)) + ", all", file=sys.stderr)
        return 2
    reports = []
    for name in names:
        report = run_suite(name, seed=args.seed, budget=args.budget)
        reports.append(report)
        print(report.format_text())
        sys.stdout.flush()
    ok = all(r.ok for r in reports)
    total = sum(r.instances for r in reports)
    print(f"total: {'ok' if ok else 'FAIL'} suites={len(reports)} instances={total}")
    if args.json_path:
        with open(args.json_path, "w", encoding="utf-8") as fh:
            fh.write(reports_to_json(reports, args.seed, args.budget))
    return 0 if ok else 1


def _cmd_replay(args) -> int:
    g = parse_graph6(args.graph)
    with open(args.script, "r", encoding="utf-8") as fh:
        ops = parse_script(fh.read())
    result = apply_ops(g, ops)
    print(f"result: n={result.n} edges={result.edge_count()} graph6={write_graph6(result)}")
    if args.pattern is not None:
        from vmkit.canonical import is_isomorphic

        pattern = parse_graph6(args.pattern)
        if is_isomorphic(result, pattern):
            print("verdict: matches pattern")
            return 0
        print("verdict: does NOT match pattern")
        return 1
    return 0


def _cmd_check_witness(args) -> int:
    from vmkit.width import ConnectivitySystem, decomposition_width, parse_tree, radius

    g = parse_graph6(args.graph)
    tree_text = args.tree
    if tree_text.startswith("@"):
        with open(tree_text[1:], "r", encoding="utf-8") as fh:
            tree_text = fh.read()
    decomp = parse_tree(tree_text)
    if set(decomp.sigma.keys()) != set(g.labels):
        print("error: tree leaves do not match the graph's vertices", file=sys.stderr)
        return 2
    sys_ = ConnectivitySystem.from_graph(g)
    width = decomposition_width(decomp, sys_)
    rad = radius(decomp)
    print(f"width = {width}")
    print(f"radius = {rad}")
    ok = True
    if args.max_width is not None and width > args.max_width:
        ok = False
    if args.max_radius is not None and rad > args.max_radius:
        ok = False
    print("verdict: ok" if ok else "verdict: bounds violated")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
