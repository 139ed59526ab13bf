"""Exact chromatic and clique numbers."""

import random

import pytest

from conftest import random_graph
from oracles import naive_chromatic, naive_clique
from vmkit.coloring import chromatic_number, clique_number
from vmkit.errors import BudgetError
from vmkit.graphs import complete, cycle, edgeless, path


def test_complete_graphs():
    for n in range(1, 9):
        assert chromatic_number(complete(n)) == n
        assert clique_number(complete(n)) == n


def test_odd_hole():
    assert chromatic_number(cycle(5)) == 3
    assert clique_number(cycle(5)) == 2


def test_bipartite_path():
    assert chromatic_number(path(4)) == 2
    assert clique_number(path(4)) == 2


def test_edgeless():
    assert chromatic_number(edgeless(5)) == 1
    assert clique_number(edgeless(5)) == 1


def test_matches_naive_oracle():
    rng = random.Random(1234)
    for _ in range(80):
        g = random_graph(rng, rng.randint(1, 7))
        assert chromatic_number(g) == naive_chromatic(g)
        assert clique_number(g) == naive_clique(g)


def test_cap():
    with pytest.raises(BudgetError):
        chromatic_number(edgeless(17))
    with pytest.raises(BudgetError):
        clique_number(edgeless(17))
