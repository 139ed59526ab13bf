"""Graph type, generators, half-graphs, and isomorphism."""

import random

import pytest

from conftest import random_graph
from oracles import oracle_isomorphic
from vmkit.canonical import (
    canonical_form,
    contains_induced,
    graphs_up_to,
    is_isomorphic,
    nonisomorphic_graphs,
)
from vmkit.errors import (
    BudgetError,
    CompositionError,
    GenerationError,
    InvalidVertexError,
)
from vmkit.graphs import (
    Graph,
    bull,
    bw3_complement,
    complete,
    cycle,
    edgeless,
    fan,
    generate,
    half_graph,
    half_graph_family,
    n_graph,
    path,
    q_graph,
    star,
    w4,
)


def test_generate_path():
    g = generate("path", [4])
    assert g.n == 4 and g.edge_count() == 3
    assert g.degree_sequence() == (1, 1, 2, 2)


def test_generate_fan5():
    g = generate("fan", [5])
    assert g.n == 6 and g.edge_count() == 9  # 4 path edges + 5 spokes
    assert g.degree(6) == 5  # hub labeled last


def test_generate_q_graph():
    g = generate("q_graph")
    assert g.n == 6 and g.edge_count() == 6
    # 4-cycle with two pendants on opposite cycle vertices
    assert sorted(g.degree(v) for v in g.labels) == [1, 1, 2, 2, 3, 3]
    hubs = [v for v in g.labels if g.degree(v) == 3]
    assert not g.has_edge(*hubs)


def test_generate_named_shapes():
    assert bull().degree_sequence() == (1, 1, 2, 3, 3)
    assert w4().edge_count() == 8
    g = bw3_complement()
    assert g.n == 7 and g.edge_count() == 12
    assert n_graph().degree_sequence() == (1, 1, 1, 3, 3, 3)
    assert q_graph().n == 6
    assert star(3).degree_sequence() == (1, 1, 1, 3)


def test_generate_errors():
    with pytest.raises(GenerationError):
        generate("nosuch")
    with pytest.raises(GenerationError):
        generate("path", [0])
    with pytest.raises(GenerationError):
        generate("bull", [3])


def test_half_graph_single_vertices():
    g = half_graph(edgeless(1), edgeless(1).relabel({1: 2}))
    assert is_isomorphic(g, complete(2))


def test_half_graph_s2_s2_is_p4():
    g = half_graph_family("edgeless", "edgeless", 2)
    # edges v1w1, v2w1, v2w2 under the i >= j rule
    assert sorted(g.edges()) == [(1, 3), (2, 3), (2, 4)]
    assert is_isomorphic(g, path(4))


def test_half_graph_k4_k4():
    g = half_graph_family("complete", "complete", 4)
    assert g.n == 8
    assert g.edge_count() == 22  # 12 inside the cliques + 10 cross pairs


def test_half_graph_restriction_identity():
    a = complete(3)
    b = cycle(3).relabel({1: 4, 2: 5, 3: 6})
    g = half_graph(a, b)
    assert g.induce(a.labels).edges() == a.edges()
    assert g.induce(b.labels).edges() == b.edges()


def test_half_graph_size_mismatch():
    with pytest.raises(CompositionError):
        half_graph(edgeless(2), edgeless(3).relabel({1: 4, 2: 5, 3: 6}))


def test_half_graph_label_overlap():
    with pytest.raises(CompositionError):
        half_graph(edgeless(2), edgeless(2))


def test_induce_identity_and_clique():
    g = complete(5)
    assert g.induce(g.labels) == g
    assert is_isomorphic(g.induce([2, 3, 5]), complete(3))


def test_induce_path_split():
    g = path(5).induce([1, 2, 4, 5])
    assert sorted(g.edges()) == [(1, 2), (4, 5)]
    comps = g.components()
    assert len(comps) == 2


def test_induce_unknown_vertex():
    with pytest.raises(InvalidVertexError):
        path(3).induce([1, 7])


def test_components():
    assert path(4).components() == [(1, 2, 3, 4)]
    two_k2 = Graph([1, 2, 3, 4], [(1, 2), (3, 4)])
    assert two_k2.components() == [(1, 2), (3, 4)]
    assert edgeless(3).components() == [(1,), (2,), (3,)]


def test_complement_involution():
    for g in graphs_up_to(5):
        assert g.complement().complement() == g


def test_is_isomorphic_examples():
    relabeled = path(4).relabel({1: "a", 2: "b", 3: "c", 4: "d"})
    assert is_isomorphic(path(4), relabeled)
    assert not is_isomorphic(path(4), star(3))
    assert is_isomorphic(cycle(5), cycle(5).complement())


def test_is_isomorphic_cap():
    with pytest.raises(BudgetError):
        is_isomorphic(edgeless(13), edgeless(13))


def test_canonical_form_relabeling_is_consistent():
    g = bull()
    cf = canonical_form(g)
    assert sorted(cf.relabeling.values()) == list(range(g.n))
    h = g.relabel({v: f"x{v}" for v in g.labels})
    assert canonical_form(h).key == cf.key


def test_is_isomorphic_agrees_with_permutation_oracle_small():
    rng = random.Random(31337)
    pool = graphs_up_to(6)
    for _ in range(300):
        g = rng.choice(pool)
        h = rng.choice(pool)
        if g.n != h.n:
            continue
        assert is_isomorphic(g, h) == oracle_isomorphic(g, h)


def test_is_isomorphic_agrees_with_permutation_oracle_random_pairs():
    rng = random.Random(714)
    for trial in range(500):
        n = rng.choice([7, 8])
        g = random_graph(rng, n)
        if trial % 2:
            # relabeled copy: must be isomorphic
            perm = list(range(1, n + 1))
            rng.shuffle(perm)
            h = g.relabel(dict(zip(g.labels, perm)))
            assert is_isomorphic(g, h) and oracle_isomorphic(g, h)
        else:
            h = random_graph(rng, n)
            assert is_isomorphic(g, h) == oracle_isomorphic(g, h)


def test_contains_induced_examples():
    found, witness = contains_induced(path(5), path(5))
    assert found and witness == (1, 2, 3, 4, 5)
    found, witness = contains_induced(cycle(5), path(4))
    assert found
    assert is_isomorphic(cycle(5).induce(witness), path(4))
    found, _ = contains_induced(half_graph_family("complete", "complete", 4), star(3))
    assert not found  # the half-graph of two cliques has no induced claw
    assert contains_induced(path(3), path(5)) == (False, None)


def test_contains_induced_witness_is_faithful():
    rng = random.Random(4242)
    for _ in range(100):
        g = random_graph(rng, rng.randint(4, 8))
        h = random_graph(rng, rng.randint(2, 4))
        found, witness = contains_induced(g, h)
        if found:
            assert is_isomorphic(g.induce(witness), h)


def test_enumeration_counts():
    assert [len(nonisomorphic_graphs(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]
