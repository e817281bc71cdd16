"""Immutable simple undirected graphs with exact degree statistics."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, TextIO


class GraphError(ValueError):
    pass


class Graph:
    """A simple undirected graph on non-negative integer vertex ids.

    Instances are never mutated after construction; ``delete_vertex`` and
    ``contract_edge`` return new graphs.
    """

    __slots__ = ("_adj", "_m", "_hash")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        adj: dict[int, set[int]] = {}
        for v in vertices:
            _check_id(v)
            adj.setdefault(v, set())
        for u, v in edges:
            _check_id(u)
            _check_id(v)
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        self._adj = {v: frozenset(adj[v]) for v in sorted(adj)}
        self._m = sum(len(nb) for nb in self._adj.values()) // 2
        self._hash: Optional[int] = None

    @classmethod
    def _from_adj(cls, adj: Mapping[int, frozenset[int]]) -> "Graph":
        g = cls.__new__(cls)
        g._adj = {v: adj[v] for v in sorted(adj)}
        g._m = sum(len(nb) for nb in g._adj.values()) // 2
        g._hash = None
        return g

    # -- basic queries -----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    @property
    def adj(self) -> Mapping[int, frozenset[int]]:
        return self._adj

    def vertices(self) -> list[int]:
        return list(self._adj)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield every edge once as ``(u, v)`` with ``u < v``, in sorted order."""
        for u, nb in self._adj.items():
            for v in sorted(nb):
                if u < v:
                    yield (u, v)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v}") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        nb = self._adj.get(u)
        return nb is not None and v in nb

    def common_neighbors(self, u: int, v: int) -> frozenset[int]:
        if u == v:
            raise GraphError("common_neighbors needs two distinct vertices")
        return self.neighbors(u) & self.neighbors(v)

    # -- mutations (return new graphs) -------------------------------------

    def delete_vertex(self, v: int) -> "Graph":
        nb = self.neighbors(v)
        adj = dict(self._adj)
        del adj[v]
        for u in nb:
            adj[u] = adj[u] - {v}
        return Graph._from_adj(adj)

    def contract_edge(self, u: int, v: int) -> "Graph":
        """Merge the endpoints of edge ``uv`` into the lower-numbered id."""
        if not self.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        keep, gone = min(u, v), max(u, v)
        merged = (self._adj[keep] | self._adj[gone]) - {keep, gone}
        adj = dict(self._adj)
        del adj[gone]
        adj[keep] = merged
        for w in self._adj[gone]:
            if w != keep:
                adj[w] = (adj[w] - {gone}) | {keep}
        return Graph._from_adj(adj)

    def subgraph(self, keep: Iterable[int]) -> "Graph":
        keep = frozenset(keep)
        missing = keep - self._adj.keys()
        if missing:
            raise GraphError(f"unknown vertices {sorted(missing)}")
        return Graph._from_adj({v: self._adj[v] & keep for v in keep})

    # -- misc ----------------------------------------------------------------

    def check_invariants(self) -> None:
        """Raise ``GraphError`` if the adjacency is not symmetric and loop-free."""
        for v, nb in self._adj.items():
            if v in nb:
                raise GraphError(f"loop at vertex {v}")
            for u in nb:
                if u not in self._adj or v not in self._adj[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._adj.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _check_id(v: object) -> None:
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise GraphError(f"vertex ids must be non-negative integers, got {v!r}")


@dataclass(frozen=True)
class GraphStats:
    n: int
    m: int
    d: Fraction
    min_degree: int
    # None when the graph has no edges
    tau: Optional[int]


def stats(g: Graph) -> GraphStats:
    if g.n == 0:
        raise GraphError("empty graph")
    adj = g.adj
    tau = None
    for u, v in g.edges():
        c = len(adj[u] & adj[v])
        if tau is None or c < tau:
            tau = c
    return GraphStats(
        n=g.n,
        m=g.m,
        d=Fraction(2 * g.m, g.n),
        min_degree=min(len(nb) for nb in adj.values()),
        tau=tau,
    )


def average_degree(g: Graph) -> Fraction:
    if g.n == 0:
        raise GraphError("empty graph")
    return Fraction(2 * g.m, g.n)


# -- edge-list text format ----------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` edge lines and single-token isolated-vertex lines.

    Blank lines and lines starting with ``#`` are skipped.  Repeated edges
    are merged; loops are rejected.
    """
    vertices: list[int] = []
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        try:
            ids = [int(t) for t in tokens]
        except ValueError:
            raise GraphError(f"line {lineno}: expected integer vertex ids, got {line!r}") from None
        if any(t.startswith(("+", "-")) for t in tokens):
            raise GraphError(f"line {lineno}: vertex ids must be plain decimals")
        if len(ids) == 1:
            vertices.append(ids[0])
        elif len(ids) == 2:
            if ids[0] == ids[1]:
                raise GraphError(f"line {lineno}: loop at vertex {ids[0]}")
            edges.append((ids[0], ids[1]))
        else:
            raise GraphError(f"line {lineno}: expected 1 or 2 tokens, got {len(ids)}")
    return Graph(vertices, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{u} {v}" for u, v in g.edges()]
    lines += [str(v) for v in g.vertices() if not g.adj[v]]
    return "".join(line + "\n" for line in lines)


def read_edge_list(fp: TextIO) -> Graph:
    return parse_edge_list(fp.read())


def write_edge_list(g: Graph, fp: TextIO) -> None:
    fp.write(format_edge_list(g))
