"""Local search over cycle collections.

The engine starts from the collection of all 1-cycles and repeatedly
applies an improving move until either ``k`` cycles of order at least
``r`` are available or no move applies.  Every non-terminal move strictly
increases the collection's lexicographic potential
``(|C(r)|, |C(r-1)|, ..., |C(1)|)``, so the search terminates.

Terminology used in the detectors:

* the *lower* cycles are those of order below ``r``; the *full* cycles have
  order exactly ``r``;
* an *attachment* of a cycle is an ordered pair ``(v, w)`` of consecutive
  vertices together with the path ``base`` that runs from ``w`` around the
  cycle to ``v``.  Inserting a path ``R`` with ``v ~ R[0]`` and
  ``R[-1] ~ w`` gives the cycle ``base + R``.  A 1-cycle ``{v}`` has the
  single attachment ``(v, v)`` with ``base = [v]``;
* ``W(v, w)`` is the set of common neighbours of ``v`` and ``w`` lying on
  full cycles (for a 1-cycle, the neighbours of ``v`` on full cycles).

Vertices dropped by a move become 1-cycles again, so the collection always
covers the graph.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Union

from .certificate import PackingCertificate
from .collection import Cycle, CycleCollection, canonical_cycle, potential, seed_collection, validate
from .graph import Graph, GraphError, stats
from .lemmas import CycleFamily, arcs, disjoint_arcs, find_path_with_spare


class EngineError(GraphError):
    pass


class MoveKind(str, enum.Enum):
    MERGE_ONE_CYCLES = "MergeOneCycles"
    ABSORB_COMMON_NEIGHBOR = "AbsorbCommonNeighbor"
    ABSORB_TWO_FOR_ONE = "AbsorbTwoForOne"
    BRIDGE_SWAP = "BridgeSwap"
    REROUTE_EXTEND = "RerouteExtend"
    DOUBLE_REROUTE = "DoubleReroute"
    BIG_CYCLE_MERGE = "BigCycleMerge"
    SUCCESS_LONG_CYCLE = "SuccessLongCycle"


DEFAULT_MOVE_ORDER = (
    MoveKind.MERGE_ONE_CYCLES,
    MoveKind.ABSORB_COMMON_NEIGHBOR,
    MoveKind.ABSORB_TWO_FOR_ONE,
    MoveKind.BRIDGE_SWAP,
    MoveKind.REROUTE_EXTEND,
    MoveKind.DOUBLE_REROUTE,
    MoveKind.BIG_CYCLE_MERGE,
)


@dataclass(frozen=True)
class PackConfig:
    k: int
    r: int
    move_order: tuple[MoveKind, ...] = DEFAULT_MOVE_ORDER
    max_iterations: int = 1_000_000
    # re-validate the collection after every move (slow; for tests)
    check_steps: bool = False

    def __post_init__(self):
        if self.k < 1:
            raise EngineError("k must be at least 1")
        if self.r < 3:
            raise EngineError("r must be at least 3")
        if self.max_iterations < 1:
            raise EngineError("max_iterations must be at least 1")
        if sorted(self.move_order) != sorted(DEFAULT_MOVE_ORDER) or len(set(self.move_order)) != len(self.move_order):
            raise EngineError("move_order must be a permutation of the move catalog")


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    removed: tuple[Cycle, ...]
    added: tuple[tuple[int, ...], ...]
    # for SuccessLongCycle: the construction that produced the long cycle(s)
    via: Optional[MoveKind] = None

    @property
    def success(self) -> bool:
        return self.kind is MoveKind.SUCCESS_LONG_CYCLE

    def to_dict(self) -> dict:
        d = {"kind": self.kind.value, "removed": [list(c) for c in self.removed], "added": [list(c) for c in self.added]}
        if self.via is not None:
            d["via"] = self.via.value
        return d


@dataclass
class TraceEntry:
    move: Move
    potential_after: Optional[tuple[int, ...]]

    def to_dict(self) -> dict:
        d = self.move.to_dict()
        d["potential_after"] = list(self.potential_after) if self.potential_after is not None else None
        return d


@dataclass
class StuckDiagnostics:
    reason: str
    potential: tuple[int, ...]
    hypotheses_hold: bool
    missed_improvements: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "reason": self.reason,
            "potential": list(self.potential),
            "hypotheses_hold": self.hypotheses_hold,
            "missed_improvements": self.missed_improvements,
        }


@dataclass
class PackResult:
    certificate: Optional[PackingCertificate]
    diagnostics: Optional[StuckDiagnostics]
    trace: list[TraceEntry]
    final: CycleCollection

    @property
    def success(self) -> bool:
        return self.certificate is not None

    def trace_json(self) -> str:
        return json.dumps([e.to_dict() for e in self.trace])


# -- helpers ---------------------------------------------------------------------

def attachments(cyc: Sequence[int], both_ways: bool = True) -> Iterator[tuple[int, int, list[int]]]:
    """Yield ``(v, w, base)`` for each way of opening ``cyc`` between consecutive v, w."""
    L = len(cyc)
    if L == 1:
        yield cyc[0], cyc[0], [cyc[0]]
        return
    for i in range(L):
        v, w = cyc[i], cyc[(i + 1) % L]
        base = list(cyc[i + 1:]) + list(cyc[:i + 1])
        yield v, w, base
        if both_ways and L > 2:
            yield w, v, base[::-1]


def _leftovers(removed: Sequence[Sequence[int]], new_cycles: Sequence[Sequence[int]]) -> list[tuple[int]]:
    kept = {v for c in new_cycles for v in c}
    return [(v,) for c in removed for v in c if v not in kept]


class _State:
    """Per-iteration view of the collection used by the detectors."""

    def __init__(self, g: Graph, c: CycleCollection, cfg: PackConfig):
        self.g = g
        self.adj = g.adj
        self.c = c
        self.k, self.r = cfg.k, cfg.r
        self.owner = c.owner
        # largest first, so improvements to high buckets are found early
        self.lower = sorted(c.lower(), key=lambda cy: (-len(cy), cy))
        self.full = list(c.full())
        self.full_vertices = frozenset(v for cy in self.full for v in cy)
        self.singles = frozenset(cy[0] for cy in self.lower if len(cy) == 1)
        self._families: dict[int, CycleFamily] = {}

    def W(self, v: int, w: int) -> frozenset[int]:
        if v == w:
            return self.adj[v] & self.full_vertices
        return self.adj[v] & self.adj[w] & self.full_vertices

    def family(self, q: int) -> CycleFamily:
        if q not in self._families:
            self._families[q] = CycleFamily(tuple(self.full), (q,) * len(self.full))
        return self._families[q]

    def improving(self, removed: Sequence[Cycle], new_cycles: Sequence[Sequence[int]], kind: MoveKind) -> Move:
        added = [tuple(cy) for cy in new_cycles] + _leftovers(removed, new_cycles)
        return Move(kind, tuple(removed), tuple(added))

    def can_finish_with(self, extra: int, dropped_full: int = 0) -> bool:
        return len(self.full) - dropped_full + extra >= self.k

    def success(self, removed: Sequence[Cycle], long_cycles: Sequence[Sequence[int]], via: MoveKind) -> Move:
        removed_set = set(removed)
        cycles = [tuple(cy) for cy in long_cycles] + [cy for cy in self.full if cy not in removed_set]
        return Move(MoveKind.SUCCESS_LONG_CYCLE, tuple(removed), tuple(cycles), via=via)

    def grown(self, removed: Sequence[Cycle], new: Sequence[int], kind: MoveKind) -> Optional[Move]:
        """A move replacing ``removed`` (all lower cycles) by one bigger cycle, if it helps."""
        size = len(new)
        if size <= max(len(cy) for cy in removed):
            return None
        if size <= self.r:
            return self.improving(removed, [new], kind)
        if self.can_finish_with(1):
            return self.success(removed, [new], kind)
        return None


# -- detectors -------------------------------------------------------------------

def _merge_one_cycles(s: _State) -> Optional[Move]:
    for x in sorted(s.singles):
        for y in sorted(s.adj[x] & s.singles):
            if y > x:
                return s.improving([(x,), (y,)], [(x, y)], MoveKind.MERGE_ONE_CYCLES)
    return None


def _absorb_common_neighbor(s: _State) -> Optional[Move]:
    for C in s.lower:
        if len(C) < 2:
            continue
        for v, w, base in attachments(C, both_ways=False):
            for x in sorted(s.adj[v] & s.adj[w]):
                D = s.owner[x]
                if D == C or len(D) > len(C) or len(D) >= s.r:
                    continue
                return s.improving([C, D], [base + [x]], MoveKind.ABSORB_COMMON_NEIGHBOR)
    return None


def _absorb_two_for_one(s: _State) -> Optional[Move]:
    for Cp in s.lower:
        if len(Cp) < 2:
            continue
        for C in s.lower:
            if C == Cp or len(C) < max(3, len(Cp)):
                continue
            L = len(C)
            for i in range(L):
                u1, u3, u2 = C[i - 1], C[i], C[(i + 1) % L]
                for v, w, _ in attachments(Cp):
                    if w in s.adj[u1] and v in s.adj[u2]:
                        # u2 ... u1 around C without u3, then u1 - w - v - u2
                        rest = list(C[i + 1:]) + list(C[:i])
                        return s.improving([C, Cp], [rest + [w, v]], MoveKind.ABSORB_TWO_FOR_ONE)
    return None


def _bridge_swap(s: _State) -> Optional[Move]:
    for C2 in s.lower:
        if len(C2) < 2:
            continue
        for v, w, Q in attachments(C2):
            # Q runs from w to v through all of C2
            for C1 in s.lower:
                if C1 == C2:
                    continue
                for L in range(len(C1), 0, -1):
                    for K in arcs(C1, L):
                        if w in s.adj[K[-1]] and v in s.adj[K[0]]:
                            move = s.grown([C1, C2], list(K) + Q, MoveKind.BRIDGE_SWAP)
                            if move is not None:
                                return move
    return None


def _reroute_extend(s: _State) -> Optional[Move]:
    if not s.full:
        return None
    for C2 in s.lower:
        f = s.family(s.r - len(C2))
        opens2 = [(x, y, base, s.W(x, y)) for x, y, base in attachments(C2, both_ways=False)]
        for C1 in s.lower:
            if C1 == C2 or len(C1) < len(C2):
                continue
            for v, w, base1 in attachments(C1, both_ways=False):
                T = s.W(v, w)
                if not T:
                    continue
                for x, y, base2, S in opens2:
                    if not S:
                        continue
                    found = find_path_with_spare(f, S, T)
                    if found is None:
                        continue
                    F = s.full[found.cycle_index]
                    new1 = base1 + [found.spare]
                    new2 = base2 + list(found.path)
                    return s.improving([C1, C2, F], [new1, new2], MoveKind.REROUTE_EXTEND)
    return None


def _double_reroute(s: _State) -> Optional[Move]:
    if not s.full:
        return None
    finishing = s.can_finish_with(2, dropped_full=1)
    r = s.r
    for i2, C2 in enumerate(s.lower):
        for C1 in s.lower[i2 + 1:]:
            for x, y, base2 in attachments(C2, both_ways=False):
                S = s.W(x, y)
                if len(S) < 2 and len(C2) == 1:
                    continue
                for v, w, base1 in attachments(C1, both_ways=False):
                    T = s.W(v, w)
                    if not S or not T:
                        continue
                    need_p, need_q = r - len(C2), r - len(C1)
                    for F in s.full:
                        if finishing:
                            pair = disjoint_arcs(F, S, T, range(need_p, r), range(need_q, r))
                        else:
                            pair = disjoint_arcs(F, S, T, [need_p], [need_q])
                        if pair is None:
                            continue
                        P, Q = pair
                        new2, new1 = base2 + list(P), base1 + list(Q)
                        if finishing:
                            return s.success([C1, C2, F], [new1, new2], MoveKind.DOUBLE_REROUTE)
                        return s.improving([C1, C2, F], [new1, new2], MoveKind.DOUBLE_REROUTE)
    return None


def _big_cycle_merge(s: _State) -> Optional[Move]:
    if len(s.singles) < 2:
        return None
    adj, singles = s.adj, s.singles
    for C0 in s.lower:
        if len(C0) < 2:
            continue
        for C1 in s.lower:
            if C1 == C0 or len(C1) < 2:
                continue
            q_arcs = [Q for M in range(len(C1), 1, -1) for A in arcs(C1, M) for Q in (A, A[::-1])]
            for L in range(len(C0), 1, -1):
                for K in arcs(C0, L):
                    # K runs w ... v; the cycle is K, x, Q, x', back to K[0]
                    near_v = adj[K[-1]] & singles
                    near_w = adj[K[0]] & singles
                    if not near_v or not near_w:
                        continue
                    for Q in q_arcs:
                        X = near_v & adj[Q[0]]
                        Xp = near_w & adj[Q[-1]]
                        if not X or not Xp:
                            continue
                        pick = next(((x, min(Xp - {x})) for x in sorted(X) if Xp - {x}), None)
                        if pick is None:
                            continue
                        x, xp = pick
                        new = list(K) + [x] + list(Q) + [xp]
                        move = s.grown([C0, C1, (x,), (xp,)], new, MoveKind.BIG_CYCLE_MERGE)
                        if move is not None:
                            return move
    return None


DETECTORS = {
    MoveKind.MERGE_ONE_CYCLES: _merge_one_cycles,
    MoveKind.ABSORB_COMMON_NEIGHBOR: _absorb_common_neighbor,
    MoveKind.ABSORB_TWO_FOR_ONE: _absorb_two_for_one,
    MoveKind.BRIDGE_SWAP: _bridge_swap,
    MoveKind.REROUTE_EXTEND: _reroute_extend,
    MoveKind.DOUBLE_REROUTE: _double_reroute,
    MoveKind.BIG_CYCLE_MERGE: _big_cycle_merge,
}


# -- public operations -------------------------------------------------------------

def find_move(g: Graph, c: CycleCollection, cfg: PackConfig) -> Optional[Move]:
    """The first applicable move in ``cfg.move_order``, or None if the collection is stuck."""
    if c.r != cfg.r:
        raise EngineError("collection and config disagree on r")
    report = validate(c, g, require_spanning=True)
    if not report.ok:
        raise EngineError(f"invalid collection: {report}")
    s = _State(g, c, cfg)
    for kind in cfg.move_order:
        move = DETECTORS[kind](s)
        if move is not None:
            return move
    return None


def apply_move(c: CycleCollection, m: Move) -> Union[CycleCollection, tuple[tuple[int, ...], ...]]:
    """Apply a move; a success move yields its cycles instead of a new collection."""
    present = set(c.cycles)
    for cy in m.removed:
        if canonical_cycle(cy) not in present:
            raise EngineError(f"move removes {list(cy)}, which is not in the collection")
    if m.success:
        return m.added
    return c.replace(m.removed, m.added)


def in_guaranteed_regime(g: Graph, k: int, r: int) -> bool:
    """k >= 6, r >= 3, d >= 4kr/3, and the minimality consequences delta > d/2, tau > d/2 - 1."""
    if g.n == 0 or k < 6 or r < 3:
        return False
    st = stats(g)
    if 3 * st.d < 4 * k * r:
        return False
    half = st.d / 2
    return st.min_degree > half and (st.tau is None or st.tau > half - 1)


def missed_improvements(g: Graph, c: CycleCollection) -> list[str]:
    """Brute-force checks of structural facts that must hold once no move applies.

    Each reported witness is an improvement the detectors should have found.
    """
    adj = g.adj
    lower = [cy for cy in c.cycles if len(cy) < c.r]
    out = []
    singles = sorted(cy[0] for cy in lower if len(cy) == 1)
    for i, x in enumerate(singles):
        for y in singles[i + 1:]:
            if y in adj[x]:
                out.append(f"adjacent 1-cycles {x} and {y}")
    for C in lower:
        if len(C) < 2:
            continue
        edges = [(C[j], C[(j + 1) % len(C)]) for j in range(len(C) if len(C) > 2 else 1)]
        for v, w in edges:
            common = adj[v] & adj[w]
            for D in lower:
                if D == C:
                    continue
                shared = common & set(D)
                if len(D) <= len(C) and shared:
                    out.append(f"edge {v}-{w} of {list(C)} has common neighbour(s) {sorted(shared)} in {list(D)}")
                if len(D) >= len(C) and 3 * len(shared) > len(D):
                    out.append(f"edge {v}-{w} of {list(C)} has {len(shared)} common neighbours in {list(D)}")
    return out


def pack(g: Graph, cfg: PackConfig, start: Optional[CycleCollection] = None) -> PackResult:
    """Run the local search on ``g`` from the all-1-cycles collection (or ``start``)."""
    if g.n == 0:
        raise EngineError("empty graph")
    c = start if start is not None else seed_collection(g, cfg.r)
    trace: list[TraceEntry] = []
    pot = potential(c)
    for _ in range(cfg.max_iterations):
        full = c.full()
        if len(full) >= cfg.k:
            return PackResult(PackingCertificate(cfg.k, cfg.r, tuple(full)), None, trace, c)
        move = find_move(g, c, cfg)
        if move is None:
            diag = StuckDiagnostics("no applicable move", pot, in_guaranteed_regime(g, cfg.k, cfg.r), missed_improvements(g, c))
            return PackResult(None, diag, trace, c)
        result = apply_move(c, move)
        if move.success:
            trace.append(TraceEntry(move, None))
            return PackResult(PackingCertificate(cfg.k, cfg.r, tuple(result)), None, trace, c)
        new_pot = potential(result)
        if new_pot <= pot:
            raise EngineError(f"{move.kind.value} did not raise the potential: {pot} -> {new_pot}")
        if cfg.check_steps:
            report = validate(result, g, require_spanning=True)
            if not report.ok:
                raise EngineError(f"{move.kind.value} broke the collection: {report}")
        c, pot = result, new_pot
        trace.append(TraceEntry(move, pot))
    diag = StuckDiagnostics("iteration cap", pot, in_guaranteed_regime(g, cfg.k, cfg.r))
    return PackResult(None, diag, trace, c)


def threshold_degree(k: int, r: int) -> Fraction:
    return Fraction(4 * k * r, 3)
