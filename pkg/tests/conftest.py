import itertools

import pytest

from cyclepack.graph import Graph


def all_graphs(n):
    """Every labelled simple graph on vertices 0..n-1."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(range(n), [e for i, e in enumerate(pairs) if mask >> i & 1])


def cycle_graph(n):
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return Graph(range(n), [(i, i + 1) for i in range(n - 1)])


@pytest.fixture
def c5():
    return cycle_graph(5)
