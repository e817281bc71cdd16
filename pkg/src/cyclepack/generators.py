"""Graph families used as examples and extremal constructions."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .graph import Graph, GraphError


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


def gen_complete(n: int) -> Graph:
    _require(n >= 1, "complete graph needs n >= 1")
    return Graph(range(n), itertools.combinations(range(n), 2))


def gen_complete_bipartite(s: int, t: int) -> Graph:
    """K_{s,t}: vertices 0..s-1 on one side, s..s+t-1 on the other."""
    _require(s >= 1 and t >= 1, "complete bipartite graph needs s, t >= 1")
    return Graph(range(s + t), ((i, s + j) for i in range(s) for j in range(t)))


def split_clique_order(k: int, r: int) -> int:
    return -(-r // 2) * k - 1


def gen_split(k: int, r: int, n: int) -> Graph:
    """Clique of order ceil(r/2)*k - 1 joined completely to an independent set of size n.

    Clique vertices come first (0..c-1), followed by the independent set.
    """
    _require(k >= 1 and r >= 3 and n >= 1, "split graph needs k >= 1, r >= 3, n >= 1")
    c = split_clique_order(k, r)
    _require(c >= 1, "split graph clique would be empty")
    clique = range(c)
    indep = range(c, c + n)
    edges = list(itertools.combinations(clique, 2))
    edges += [(u, v) for u in clique for v in indep]
    return Graph(range(c + n), edges)


def gen_split_matched(k: int, r: int, n: int) -> Graph:
    """The split graph plus a perfect matching on the independent set."""
    _require(n >= 2 and n % 2 == 0, "matched split graph needs an even independent set")
    g = gen_split(k, r, n)
    c = split_clique_order(k, r)
    matching = [(c + i, c + i + 1) for i in range(0, n, 2)]
    return Graph(g.vertices(), list(g.edges()) + matching)


def gen_disjoint_cliques(size: int, copies: int) -> Graph:
    _require(size >= 1 and copies >= 1, "disjoint cliques need size, copies >= 1")
    edges = []
    for c in range(copies):
        base = c * size
        edges += itertools.combinations(range(base, base + size), 2)
    return Graph(range(size * copies), edges)


def gen_disjoint_cycles(k: int, r: int) -> Graph:
    _require(k >= 1 and r >= 3, "disjoint cycles need k >= 1 and r >= 3")
    edges = []
    for c in range(k):
        base = c * r
        edges += [(base + i, base + (i + 1) % r) for i in range(r)]
    return Graph(range(k * r), edges)


def gen_gnp(n: int, p: float, seed: int = 0) -> Graph:
    """Erdos-Renyi G(n, p); the same seed always gives the same edge set."""
    _require(n >= 1, "G(n, p) needs n >= 1")
    _require(0 <= p <= 1, "G(n, p) needs 0 <= p <= 1")
    rng = random.Random(seed)
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph(range(n), edges)


def gen_petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(range(10), outer + spokes + inner)


def bipartite_average_degree(n: int, t: int) -> Fraction:
    """Exact average degree of K_{n,t}, without building the graph."""
    return Fraction(2 * n * t, n + t)


FAMILIES = {
    "complete": (gen_complete, (int,)),
    "bipartite": (gen_complete_bipartite, (int, int)),
    "split": (gen_split, (int, int, int)),
    "split-matched": (gen_split_matched, (int, int, int)),
    "cliques": (gen_disjoint_cliques, (int, int)),
    "cycles": (gen_disjoint_cycles, (int, int)),
    "gnp": (gen_gnp, (int, float)),
    "petersen": (gen_petersen, ()),
}
