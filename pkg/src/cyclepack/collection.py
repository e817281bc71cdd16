"""Collections of vertex-disjoint cycles of bounded order.

Inside a collection an edge counts as a cycle of order 2 and a single
vertex as a cycle of order 1.  Cycles are stored in canonical rotation:
smallest vertex first, then the direction whose second vertex is smaller.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .graph import Graph, GraphError

Cycle = tuple[int, ...]


def canonical_cycle(vertices: Sequence[int]) -> Cycle:
    cyc = list(vertices)
    if not cyc:
        raise GraphError("empty cycle")
    i = cyc.index(min(cyc))
    cyc = cyc[i:] + cyc[:i]
    if len(cyc) > 2 and cyc[-1] < cyc[1]:
        cyc = [cyc[0]] + cyc[:0:-1]
    return tuple(cyc)


def _sort_key(c: Cycle) -> tuple[int, Cycle]:
    return (len(c), c)


class CycleCollection:
    """An immutable set of disjoint cycles, each of order at most ``r``."""

    def __init__(self, r: int, cycles: Iterable[Sequence[int]] = ()):
        if r < 3:
            raise GraphError("order cap r must be at least 3")
        self.r = r
        self.cycles: tuple[Cycle, ...] = tuple(sorted((canonical_cycle(c) for c in cycles), key=_sort_key))

    def bucket(self, i: int) -> list[Cycle]:
        return [c for c in self.cycles if len(c) == i]

    @cached_property
    def owner(self) -> dict[int, Cycle]:
        """Map each covered vertex to the cycle containing it (first one on overlap)."""
        out: dict[int, Cycle] = {}
        for c in self.cycles:
            for v in c:
                out.setdefault(v, c)
        return out

    def lower(self) -> list[Cycle]:
        """The cycles of order below ``r``."""
        return [c for c in self.cycles if len(c) < self.r]

    def full(self) -> list[Cycle]:
        """The cycles of order exactly ``r``."""
        return [c for c in self.cycles if len(c) == self.r]

    def replace(self, removed: Iterable[Cycle], added: Iterable[Sequence[int]]) -> "CycleCollection":
        removed = [canonical_cycle(c) for c in removed]
        remaining = list(self.cycles)
        for c in removed:
            try:
                remaining.remove(c)
            except ValueError:
                raise GraphError(f"cycle {list(c)} is not in the collection") from None
        return CycleCollection(self.r, remaining + [canonical_cycle(c) for c in added])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycleCollection):
            return NotImplemented
        return self.r == other.r and self.cycles == other.cycles

    def __hash__(self) -> int:
        return hash((self.r, self.cycles))

    def __repr__(self) -> str:
        return f"CycleCollection(r={self.r}, potential={potential(self)})"

    def to_json(self) -> str:
        return json.dumps({"r": self.r, "cycles": [list(c) for c in self.cycles]})

    @classmethod
    def from_json(cls, text: str) -> "CycleCollection":
        data = json.loads(text)
        return cls(data["r"], data["cycles"])


def potential(c: CycleCollection) -> tuple[int, ...]:
    """Bucket sizes ``(|C(r)|, |C(r-1)|, ..., |C(1)|)``; tuples compare lexicographically."""
    counts = [0] * (c.r + 1)
    for cyc in c.cycles:
        if len(cyc) <= c.r:
            counts[len(cyc)] += 1
    return tuple(counts[c.r:0:-1])


def seed_collection(g: Graph, r: int) -> CycleCollection:
    return CycleCollection(r, ((v,) for v in g.vertices()))


@dataclass
class ValidationReport:
    overlaps: list[int] = field(default_factory=list)
    non_cycles: list[Cycle] = field(default_factory=list)
    bad_orders: list[Cycle] = field(default_factory=list)
    uncovered: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.overlaps or self.non_cycles or self.bad_orders or self.uncovered)

    def __str__(self) -> str:
        if self.ok:
            return "valid"
        parts = []
        if self.overlaps:
            parts.append(f"shared vertices {self.overlaps}")
        if self.non_cycles:
            parts.append(f"not cycles of the graph {[list(c) for c in self.non_cycles]}")
        if self.bad_orders:
            parts.append(f"orders outside 1..r {[list(c) for c in self.bad_orders]}")
        if self.uncovered:
            parts.append(f"uncovered vertices {self.uncovered}")
        return "; ".join(parts)


def validate(c: CycleCollection, g: Graph, require_spanning: bool = False) -> ValidationReport:
    report = ValidationReport()
    seen: dict[int, int] = {}
    for cyc in c.cycles:
        for v in cyc:
            seen[v] = seen.get(v, 0) + 1
        if not 1 <= len(cyc) <= c.r:
            report.bad_orders.append(cyc)
        if len(set(cyc)) != len(cyc) or any(v not in g for v in cyc):
            report.non_cycles.append(cyc)
        elif len(cyc) == 2:
            if not g.has_edge(*cyc):
                report.non_cycles.append(cyc)
        elif len(cyc) >= 3:
            if any(not g.has_edge(cyc[i - 1], cyc[i]) for i in range(len(cyc))):
                report.non_cycles.append(cyc)
    report.overlaps = sorted(v for v, k in seen.items() if k > 1)
    if require_spanning:
        report.uncovered = [v for v in g.vertices() if v not in seen]
    return report
