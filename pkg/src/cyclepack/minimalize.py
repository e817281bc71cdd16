"""Reduction to a minimal minor and lifting of cycles back to the host graph.

A graph is minimal when every vertex deletion and every edge contraction
strictly lowers its average degree.  Deleting a vertex of degree ``deg``
keeps the average degree ``d`` from dropping iff ``deg <= d/2``, and
contracting an edge whose ends share ``t`` neighbours keeps it iff
``t <= d/2 - 1``; both tests are done in integers (``deg*n <= m`` and
``(t+1)*n <= m``).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .graph import Graph, GraphError, average_degree


@dataclass(frozen=True)
class Delete:
    v: int

    def __str__(self) -> str:
        return f"D {self.v}"


@dataclass(frozen=True)
class Contract:
    keep: int
    gone: int

    def __str__(self) -> str:
        return f"C {self.keep} {self.gone}"


Step = Union[Delete, Contract]


@dataclass
class ContractionHistory:
    steps: list[Step] = field(default_factory=list)
    # minor vertex id -> original vertices merged into it
    branch_sets: dict[int, frozenset[int]] = field(default_factory=dict)

    @classmethod
    def trivial(cls, g: Graph) -> "ContractionHistory":
        return cls([], {v: frozenset((v,)) for v in g.vertices()})

    def replay(self, g: Graph) -> Graph:
        for step in self.steps:
            if isinstance(step, Delete):
                g = g.delete_vertex(step.v)
            else:
                g = g.contract_edge(step.keep, step.gone)
        return g

    def to_text(self) -> str:
        lines = [str(s) for s in self.steps]
        for v in sorted(self.branch_sets):
            members = " ".join(str(u) for u in sorted(self.branch_sets[v]))
            lines.append(f"B {v}: {members}")
        return "".join(line + "\n" for line in lines)

    @classmethod
    def from_text(cls, text: str) -> "ContractionHistory":
        steps: list[Step] = []
        branch_sets: dict[int, frozenset[int]] = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line:
                continue
            tag, _, rest = line.partition(" ")
            try:
                if tag == "D":
                    (v,) = rest.split()
                    steps.append(Delete(int(v)))
                elif tag == "C":
                    u, v = rest.split()
                    steps.append(Contract(int(u), int(v)))
                elif tag == "B":
                    head, _, members = rest.partition(":")
                    ids = frozenset(int(u) for u in members.split())
                    if not ids:
                        raise ValueError("empty branch set")
                    branch_sets[int(head)] = ids
                else:
                    raise ValueError(f"unknown record {tag!r}")
            except ValueError as exc:
                raise GraphError(f"history line {lineno}: {exc}") from None
        return cls(steps, branch_sets)

    def check(self, original: Graph) -> None:
        """Raise ``GraphError`` unless branch sets are disjoint, connected and inside ``original``."""
        seen: set[int] = set()
        for v, members in self.branch_sets.items():
            if seen & members:
                raise GraphError(f"branch set of {v} overlaps another")
            seen |= members
            if not members <= original.adj.keys():
                raise GraphError(f"branch set of {v} leaves the original graph")
            if not _connected(original, members):
                raise GraphError(f"branch set of {v} is not connected")


@dataclass
class MinimalizeResult:
    minor: Graph
    history: ContractionHistory
    original_d: Fraction
    final_d: Fraction


def _connected(g: Graph, members: frozenset[int]) -> bool:
    start = next(iter(members))
    seen = {start}
    todo = [start]
    while todo:
        u = todo.pop()
        for w in g.adj[u] & members:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == len(members)


def minimalize(g: Graph) -> MinimalizeResult:
    """Delete and contract until the graph is minimal, never lowering the average degree.

    Deletions are preferred over contractions.  The deleted vertex is a
    minimum-degree vertex with the smallest id; the contracted edge has the
    fewest common neighbours, ties broken by the smallest ``(u, v)``.  A
    graph is never reduced below one vertex, so an edgeless input ends as
    a single vertex.
    """
    if g.n == 0:
        raise GraphError("empty graph")
    adj = {v: set(nb) for v, nb in g.adj.items()}
    m = g.m
    branch = {v: {v} for v in adj}
    steps: list[Step] = []

    while True:
        n = len(adj)
        if n >= 2:
            v = min(adj, key=lambda u: (len(adj[u]), u))
            if len(adj[v]) * n <= m:
                for u in adj[v]:
                    adj[u].discard(v)
                m -= len(adj.pop(v))
                del branch[v]
                steps.append(Delete(v))
                continue
        best = None
        for u in adj:
            nu = adj[u]
            for v in nu:
                if u < v:
                    key = (len(nu & adj[v]), u, v)
                    if best is None or key < best:
                        best = key
        if best is None or (best[0] + 1) * n > m:
            break
        t, u, v = best
        # u < v: u survives
        for w in adj[v]:
            adj[w].discard(v)
            if w != u:
                adj[w].add(u)
                adj[u].add(w)
        del adj[v]
        m -= 1 + t
        branch[u] |= branch.pop(v)
        steps.append(Contract(u, v))

    minor = Graph(adj.keys(), ((u, v) for u, nb in adj.items() for v in nb if u < v))
    history = ContractionHistory(steps, {v: frozenset(b) for v, b in sorted(branch.items())})
    return MinimalizeResult(minor, history, average_degree(g), average_degree(minor))


def is_minimal(g: Graph) -> bool:
    """True iff every single deletion or contraction strictly lowers d (brute force)."""
    d = average_degree(g)
    for v in g.vertices():
        if g.n > 1 and average_degree(g.delete_vertex(v)) >= d:
            return False
    for u, v in g.edges():
        if average_degree(g.contract_edge(u, v)) >= d:
            return False
    return True


def _check_minor_cycles(minor: Graph, cycles: Sequence[Sequence[int]]) -> None:
    used: set[int] = set()
    for cyc in cycles:
        if len(cyc) < 3 or len(set(cyc)) != len(cyc):
            raise GraphError(f"{list(cyc)} is not a cycle")
        for i, v in enumerate(cyc):
            if not minor.has_edge(v, cyc[i - 1]):
                raise GraphError(f"{list(cyc)} is not a cycle of the minor")
        if used & set(cyc):
            raise GraphError("cycles are not vertex-disjoint")
        used |= set(cyc)


def _shortest_path(g: Graph, members: frozenset[int], src: int, dst: int) -> list[int]:
    prev = {src: src}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            break
        for w in sorted(g.adj[u] & members):
            if w not in prev:
                prev[w] = u
                queue.append(w)
    if dst not in prev:
        raise GraphError("branch set is not connected")
    path = [dst]
    while path[-1] != src:
        path.append(prev[path[-1]])
    return path[::-1]


def lift_packing(
    g_original: Graph, history: ContractionHistory, cycles: Sequence[Sequence[int]]
) -> list[list[int]]:
    """Uncontract vertex-disjoint cycles of the minor into cycles of ``g_original``.

    Consecutive branch sets are joined by the lexicographically smallest
    crossing edge and each branch set is traversed along a shortest path
    between its entry and exit vertices.
    """
    minor = history.replay(g_original)
    _check_minor_cycles(minor, cycles)
    lifted = []
    for cyc in cycles:
        sets = [history.branch_sets[v] for v in cyc]
        links = []
        for i in range(len(cyc)):
            a, b = sets[i], sets[(i + 1) % len(cyc)]
            links.append(min((x, y) for x in a for y in g_original.adj[x] & b))
        out: list[int] = []
        for i in range(len(cyc)):
            entry = links[i - 1][1]
            exit_ = links[i][0]
            out += _shortest_path(g_original, sets[i], entry, exit_)
        lifted.append(out)
    return lifted
