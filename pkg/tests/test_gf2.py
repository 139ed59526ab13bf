"""BitMatrix, rank, and cut-rank."""

import random

import pytest

from oracles import naive_cut_rank, naive_rank
from vmkit.errors import InvalidVertexError, VmkitError
from vmkit.gf2 import BitMatrix, cut_rank, cutrank_table, rank
from vmkit.graphs import Graph, complete, path


def test_rank_zero_matrix():
    assert rank(BitMatrix.zeros(3, 3)) == 0


def test_rank_identity():
    assert rank(BitMatrix.identity(3)) == 3


def test_rank_all_ones():
    m = BitMatrix.from_entries([[1, 1, 1]] * 3)
    assert rank(m) == 1


def test_rank_does_not_modify_input():
    m = BitMatrix.from_entries([[1, 0], [1, 1]])
    before = m.data
    assert rank(m) == 2
    assert m.data == before


def test_rank_matches_naive_oracle_on_random_matrices():
    rng = random.Random(20240811)
    for _ in range(200):
        rows = rng.randint(1, 12)
        cols = rng.randint(1, 12)
        entries = [[rng.randint(0, 1) for _ in range(cols)] for _ in range(rows)]
        assert rank(BitMatrix.from_entries(entries)) == naive_rank(entries)


def test_rank_upper_bound():
    rng = random.Random(7)
    for _ in range(50):
        rows = rng.randint(0, 6)
        cols = rng.randint(0, 6)
        entries = [[rng.randint(0, 1) for _ in range(cols)] for _ in range(rows)]
        assert rank(BitMatrix.from_entries(entries) if rows else BitMatrix.zeros(0, cols)) <= min(rows, cols)


def test_bitmatrix_rejects_out_of_range_bits():
    with pytest.raises(VmkitError):
        BitMatrix(1, 2, (4,))


def test_cut_rank_empty_and_full():
    g = path(4)
    assert cut_rank(g, []) == 0
    assert cut_rank(g, g.labels) == 0


def test_cut_rank_p4_prefix():
    # hand-eliminated 2x2 block ((0,0),(1,0)) has rank 1
    assert cut_rank(path(4), [1, 2]) == 1


def test_cut_rank_complete_graph():
    k5 = complete(5)
    for mask in range(1, 31):
        subset = [i + 1 for i in range(5) if mask >> i & 1]
        if 0 < len(subset) < 5:
            assert cut_rank(k5, subset) == 1


def test_cut_rank_unknown_vertex():
    with pytest.raises(InvalidVertexError):
        cut_rank(path(3), [99])


def test_cut_rank_symmetry_exhaustive_small():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(1, 7)
        g = _random_graph(rng, n)
        for mask in range(1 << n):
            s = [g.labels[i] for i in range(n) if mask >> i & 1]
            comp = [g.labels[i] for i in range(n) if not mask >> i & 1]
            assert cut_rank(g, s) == cut_rank(g, comp)


def test_cut_rank_matches_naive():
    rng = random.Random(11)
    for _ in range(120):
        n = rng.randint(1, 9)
        g = _random_graph(rng, n)
        mask = rng.randrange(1 << n)
        s = [g.labels[i] for i in range(n) if mask >> i & 1]
        assert cut_rank(g, s) == naive_cut_rank(g, s)


def test_cut_rank_submodular():
    # exhaustive on all graphs with <= 5 vertices
    from vmkit.canonical import graphs_up_to

    for g in graphs_up_to(5):
        table = cutrank_table(g)
        size = 1 << g.n
        for s in range(size):
            for t in range(size):
                assert table[s] + table[t] >= table[s & t] + table[s | t]
    # plus seeded random instances up to 10 vertices
    rng = random.Random(99)
    for _ in range(500):
        n = rng.randint(2, 10)
        g = _random_graph(rng, n)
        s = rng.randrange(1 << n)
        t = rng.randrange(1 << n)
        table = cutrank_table(g)
        assert table[s] + table[t] >= table[s & t] + table[s | t]


def _random_graph(rng: random.Random, n: int) -> Graph:
    edges = [
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if rng.random() < 0.5
    ]
    return Graph(range(1, n + 1), edges)
