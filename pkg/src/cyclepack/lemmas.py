"""Path-finding on cycles for rerouting cycle collections.

Every search here is a direct exhaustive scan over arcs (contiguous
stretches of a cycle).  The scans look for a witness whether or not the
cardinality hypotheses hold; the hypotheses only decide whether a witness
is *guaranteed*.  When several witnesses exist the least one is returned,
ordered by cycle index, then the id of the arc's first vertex, then arc
length.

Arcs are tuples of vertices listed in the cycle's own (clockwise) order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import AbstractSet, Iterable, Iterator, Optional, Sequence

from .graph import GraphError

Arc = tuple[int, ...]


class LemmaError(GraphError):
    pass


@dataclass(frozen=True)
class CycleFamily:
    """Disjoint cycles ``F_1..F_t`` with a path length ``q_i`` for each."""

    cycles: tuple[tuple[int, ...], ...]
    q: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(tuple(c) for c in self.cycles))
        object.__setattr__(self, "q", tuple(self.q))
        if len(self.cycles) != len(self.q):
            raise LemmaError("need exactly one path length per cycle")
        seen: set[int] = set()
        for cyc, q in zip(self.cycles, self.q):
            if len(cyc) < 3 or len(set(cyc)) != len(cyc):
                raise LemmaError(f"{list(cyc)} is not a cycle on at least three vertices")
            if seen & set(cyc):
                raise LemmaError("cycles of a family must be vertex-disjoint")
            seen |= set(cyc)
            if not 1 <= q <= len(cyc) - 1:
                raise LemmaError(f"path length {q} out of range for a cycle of order {len(cyc)}")

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for c in self.cycles for v in c)


@dataclass(frozen=True)
class RerouteWitness:
    cycle_index: int
    path: Arc
    spare: Optional[int] = None
    second_path: Optional[Arc] = None


def arcs(cycle: Sequence[int], length: int) -> Iterator[Arc]:
    """Every clockwise arc of ``length`` vertices, one per start position."""
    n = len(cycle)
    doubled = tuple(cycle) * 2
    for s in range(n):
        yield doubled[s:s + length]


def _as_set(vs: Iterable[int]) -> frozenset[int]:
    return vs if isinstance(vs, frozenset) else frozenset(vs)


def _check_subset(S: AbstractSet[int], T: AbstractSet[int], universe: AbstractSet[int]) -> None:
    outside = (S | T) - universe
    if outside:
        raise LemmaError(f"vertices {sorted(outside)} are not on the cycles")


def path_with_spare_in_cycle(cycle: Sequence[int], q: int, S: AbstractSet[int], T: AbstractSet[int]):
    """Least ``(arc, spare)`` with ``q`` vertices, both ends in S, spare in T off the arc."""
    best = None
    for arc in arcs(cycle, q):
        if arc[0] in S and arc[-1] in S:
            on = set(arc)
            spares = [v for v in cycle if v in T and v not in on]
            if spares and (best is None or arc[0] < best[0][0]):
                best = (arc, min(spares))
    return best


def find_path_with_spare(f: CycleFamily, S: Iterable[int], T: Iterable[int]) -> Optional[RerouteWitness]:
    """A ``q_i``-vertex arc of some ``F_i`` with both ends in S plus a vertex of T elsewhere on ``F_i``.

    Guaranteed to exist when ``|S|, |T| > 2/3 |V(F)|``.
    """
    S, T = _as_set(S), _as_set(T)
    _check_subset(S, T, f.vertices)
    for i, (cyc, q) in enumerate(zip(f.cycles, f.q)):
        found = path_with_spare_in_cycle(cyc, q, S, T)
        if found is not None:
            return RerouteWitness(i, found[0], spare=found[1])
    return None


def disjoint_arcs(
    cycle: Sequence[int],
    S: AbstractSet[int],
    T: AbstractSet[int],
    p_lengths: Iterable[int],
    q_lengths: Iterable[int],
) -> Optional[tuple[Arc, Arc]]:
    """Least pair of disjoint arcs ``P`` (ends in S) and ``Q`` (ends in T) with admissible lengths."""
    n = len(cycle)
    p_lengths = sorted(set(p_lengths))
    q_ok = set(q_lengths)
    best = None
    for plen in p_lengths:
        if plen < 1 or plen > n - 1:
            continue
        for s in range(n):
            P = tuple(cycle[(s + j) % n] for j in range(plen))
            if P[0] not in S or P[-1] not in S:
                continue
            if best is not None and (P[0], plen) > (best[0][0], len(best[0])):
                continue
            # the rest of the cycle, as one arc following P clockwise
            rest = [cycle[(s + plen + j) % n] for j in range(n - plen)]
            Q = None
            for a in range(len(rest)):
                if rest[a] not in T:
                    continue
                for b in range(a, len(rest)):
                    if b - a + 1 in q_ok and rest[b] in T:
                        cand = tuple(rest[a:b + 1])
                        if Q is None or (cand[0], len(cand)) < (Q[0], len(Q)):
                            Q = cand
            if Q is not None:
                key = (P[0], plen, Q[0], len(Q))
                if best is None or key < (best[0][0], len(best[0]), best[1][0], len(best[1])):
                    best = (P, Q)
    return best


def find_disjoint_ST_paths(c: Sequence[int], S: Iterable[int], T: Iterable[int]) -> Optional[tuple[Arc, Arc]]:
    """Disjoint arcs P (ends in S) and Q (ends in T), each with at least ``|c|//3 + 1`` vertices.

    Guaranteed when ``|S| >= p+1`` and ``|T| >= 2p+2`` for ``p = |c|//3``.
    """
    c = tuple(c)
    n = len(c)
    if n < 6:
        raise LemmaError("cycle too short: need at least 6 vertices")
    S, T = _as_set(S), _as_set(T)
    _check_subset(S, T, frozenset(c))
    p = n // 3
    lengths = range(p + 1, n - p)
    return disjoint_arcs(c, S, T, lengths, lengths)


def find_reroute_or_double(f: CycleFamily, S: Iterable[int], T: Iterable[int]) -> Optional[RerouteWitness]:
    """Either a path-with-spare witness, or two disjoint arcs of more than r/3 vertices in one cycle.

    The family must consist of at least five cycles of a common order
    ``r >= 4`` with every ``q_i < r/3``.  Both outcomes are guaranteed to
    be available (at least one of them) when
    ``|S|, |T| > 2/3 t r - r/3`` for ``t`` cycles.
    """
    orders = {len(c) for c in f.cycles}
    if len(orders) != 1:
        raise LemmaError("all cycles must have the same order")
    (r,) = orders
    if len(f.cycles) < 5:
        raise LemmaError("need at least five cycles")
    if r < 4:
        raise LemmaError("cycle order must be at least 4")
    if any(3 * q >= r for q in f.q):
        raise LemmaError("every path length must be below r/3")
    found = find_path_with_spare(f, S, T)
    if found is not None:
        return found
    S, T = _as_set(S), _as_set(T)
    lengths = range(r // 3 + 1, r)
    for i, cyc in enumerate(f.cycles):
        pair = disjoint_arcs(cyc, S, T, lengths, lengths)
        if pair is not None:
            return RerouteWitness(i, pair[0], second_path=pair[1])
    return None


def crossing_path_bound(n: int) -> Fraction:
    return Fraction(n, 6) + 4


def find_short_crossing_path(c: Sequence[int], S: Iterable[int], T: Iterable[int]) -> Optional[Arc]:
    """An arc from a vertex of S to a vertex of T with between 2 and ``|c|/6 + 4`` vertices.

    The arc is returned starting at its S end.  Guaranteed when
    ``|S|, |T| > |c|/3``.
    """
    c = tuple(c)
    S, T = _as_set(S), _as_set(T)
    _check_subset(S, T, frozenset(c))
    n = len(c)
    longest = min(n, (n + 24) // 6)
    best = None
    for length in range(2, longest + 1):
        for arc in arcs(c, length):
            for cand in (arc, arc[::-1]):
                if cand[0] in S and cand[-1] in T:
                    key = (cand[0], length, cand)
                    if best is None or key < best:
                        best = key
    return best[2] if best else None
