import os
import sys

sys.path.insert(0, os.path.dirname(__file__))


def random_graph(rng, n, p=0.5, labels=None):
    """Seeded Erdos-Renyi graph with labels 1..n by default."""
    from vmkit.graphs import Graph

    labels = list(labels) if labels is not None else list(range(1, n + 1))
    edges = [
        (labels[i], labels[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return Graph(labels, edges)
