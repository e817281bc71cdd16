"""Exact backtracking decision procedure for disjoint cycle packing on small graphs.

The search branches on the lowest-numbered vertex still available: either
it is left out, or it lies on one of the packed cycles.  Only *reduced*
cycles are enumerated, i.e. cycles of order >= r in which no chord cuts
off a shorter cycle that still has order >= r.  Any packing can be turned
into one made of reduced cycles by repeatedly replacing a cycle with such
a sub-cycle (its vertex set only shrinks), so the restriction keeps the
search complete.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Optional

from .certificate import PackingCertificate
from .graph import Graph


class Verdict(enum.Enum):
    YES = "yes"
    NO = "no"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 20
    max_nodes: int = 5_000_000

    def __post_init__(self):
        if self.max_vertices < 1 or self.max_nodes < 1:
            raise ValueError("oracle budget caps must be positive")


@dataclass
class OracleResult:
    verdict: Verdict
    certificate: Optional[PackingCertificate] = None
    nodes: int = 0


class _OutOfBudget(Exception):
    pass


@dataclass
class _Search:
    adj: dict
    r: int
    max_nodes: int
    nodes: int = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise _OutOfBudget

    def reduced_cycles(self, v: int, avail: frozenset[int]) -> Iterator[tuple[int, ...]]:
        adj, r = self.adj, self.r
        path = [v]
        on_path = {v}

        def extend() -> Iterator[tuple[int, ...]]:
            self.tick()
            j = len(path)
            for x in sorted(adj[path[-1]] & avail):
                if x in on_path:
                    continue
                nb = adj[x]
                # a chord from x back to path[i] closes a sub-cycle of j - i + 1 vertices
                if any(path[i] in nb and j - i + 1 >= r for i in range(1, j - 1)):
                    continue
                closes = j >= 2 and v in nb
                path.append(x)
                on_path.add(x)
                if closes and j + 1 >= r:
                    if path[1] < path[-1] and self._other_sides_short(path):
                        yield tuple(path)
                else:
                    yield from extend()
                path.pop()
                on_path.discard(x)

        yield from extend()

    def _other_sides_short(self, cyc: list[int]) -> bool:
        # every chord (a, b) splits the cycle into sides of b-a+1 and L-(b-a)+1 vertices
        L = len(cyc)
        pos = {u: i for i, u in enumerate(cyc)}
        for a in range(L):
            for u in self.adj[cyc[a]]:
                b = pos.get(u)
                if b is None or b <= a + 1 or (a == 0 and b == L - 1):
                    continue
                if b - a + 1 >= self.r or L - (b - a) + 1 >= self.r:
                    return False
        return True

    def pack(self, avail: frozenset[int], need: int) -> Optional[list[tuple[int, ...]]]:
        self.tick()
        if need == 0:
            return []
        if len(avail) < need * self.r:
            return None
        v = min(avail)
        for cyc in self.reduced_cycles(v, avail):
            rest = self.pack(avail - set(cyc), need - 1)
            if rest is not None:
                return [cyc] + rest
        return self.pack(avail - {v}, need)


def exact_pack(g: Graph, k: int, r: int, budget: OracleBudget = OracleBudget()) -> OracleResult:
    """Decide whether g has k vertex-disjoint cycles each of order at least r.

    ``NO`` is only returned after the search space is exhausted.
    """
    if k <= 0:
        return OracleResult(Verdict.YES, PackingCertificate(k, r, ()))
    if g.n > budget.max_vertices:
        return OracleResult(Verdict.BUDGET_EXCEEDED)
    search = _Search(dict(g.adj), max(r, 3), budget.max_nodes)
    try:
        found = search.pack(frozenset(g.vertices()), k)
    except _OutOfBudget:
        return OracleResult(Verdict.BUDGET_EXCEEDED, nodes=search.nodes)
    if found is None:
        return OracleResult(Verdict.NO, nodes=search.nodes)
    return OracleResult(Verdict.YES, PackingCertificate(k, r, tuple(found)), search.nodes)
