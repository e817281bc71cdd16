"""Guarantee sweeps and an independent witness checker for the arc searches.

The sweeps enumerate every hypothesis-satisfying ``(S, T)`` on small cycle
families up to rotations and reflections of each cycle.  Those symmetries
map witnesses to witnesses, so checking one pair per orbit covers every
pair.  Orbit representatives are produced directly: a canonical ``S``
(least bitmask in its orbit) together with every ``T`` that is least under
the stabiliser of that ``S``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from . import lemmas
from .lemmas import CycleFamily, RerouteWitness


# -- independent witness checks ---------------------------------------------------
#
# These deliberately avoid the arc helpers in ``lemmas``: contiguity is
# checked through vertex positions on the cycle.

def is_arc(cycle: Sequence[int], path: Sequence[int]) -> bool:
    """True iff ``path`` is a run of consecutive cycle vertices (either direction)."""
    n = len(cycle)
    if not path or len(path) > n or len(set(path)) != len(path):
        return False
    pos = {v: i for i, v in enumerate(cycle)}
    if any(v not in pos for v in path):
        return False
    if len(path) == 1:
        return True
    step = (pos[path[1]] - pos[path[0]]) % n
    if step not in (1, n - 1):
        return False
    return all((pos[b] - pos[a]) % n == step for a, b in zip(path, path[1:]))


def check_path_with_spare(f: CycleFamily, S, T, w: RerouteWitness) -> list[str]:
    errs = []
    if not 0 <= w.cycle_index < len(f.cycles):
        return ["cycle index out of range"]
    cyc = f.cycles[w.cycle_index]
    P = w.path
    if not is_arc(cyc, P):
        errs.append("path is not an arc of its cycle")
    if len(P) != f.q[w.cycle_index]:
        errs.append(f"path has {len(P)} vertices, expected {f.q[w.cycle_index]}")
    if not P or P[0] not in S or P[-1] not in S:
        errs.append("path ends not in S")
    if w.spare is None or w.spare not in T or w.spare not in cyc or w.spare in P:
        errs.append("spare vertex invalid")
    return errs


def check_disjoint_pair(cyc, S, T, P, Q, min_len_p: int, min_len_q: int) -> list[str]:
    errs = []
    if not is_arc(cyc, P) or not is_arc(cyc, Q):
        errs.append("not arcs of the cycle")
    if set(P) & set(Q):
        errs.append("arcs overlap")
    if not P or P[0] not in S or P[-1] not in S:
        errs.append("P ends not in S")
    if not Q or Q[0] not in T or Q[-1] not in T:
        errs.append("Q ends not in T")
    if len(P) < min_len_p or len(Q) < min_len_q:
        errs.append("arcs too short")
    return errs


def check_reroute_or_double(f: CycleFamily, S, T, w: RerouteWitness) -> list[str]:
    if w.second_path is None:
        return check_path_with_spare(f, S, T, w)
    if not 0 <= w.cycle_index < len(f.cycles):
        return ["cycle index out of range"]
    cyc = f.cycles[w.cycle_index]
    r = len(cyc)
    errs = check_disjoint_pair(cyc, S, T, w.path, w.second_path, 1, 1)
    if 3 * len(w.path) <= r or 3 * len(w.second_path) <= r:
        errs.append("arcs not longer than r/3")
    if w.spare is not None:
        errs.append("second outcome carries a spare")
    return errs


def check_crossing_path(cyc, S, T, P) -> list[str]:
    errs = []
    if not is_arc(cyc, P):
        errs.append("not an arc")
    if not 2 <= len(P) or 6 * len(P) > len(cyc) + 24:
        errs.append(f"length {len(P)} outside [2, |C|/6 + 4]")
    if not ((P[0] in S and P[-1] in T) or (P[0] in T and P[-1] in S)):
        errs.append("ends do not join S to T")
    return errs


# -- orbit enumeration -----------------------------------------------------------

@lru_cache(maxsize=None)
def _dihedral_tables(n: int) -> tuple[tuple[int, ...], ...]:
    """For each dihedral symmetry of an n-cycle, the image of every position bitmask."""
    perms = [tuple((i + s) % n for i in range(n)) for s in range(n)]
    perms += [tuple((s - i) % n for i in range(n)) for s in range(n)]
    tables = []
    for perm in perms:
        img = [0] * (1 << n)
        for mask in range(1, 1 << n):
            low = mask & -mask
            i = low.bit_length() - 1
            img[mask] = img[mask ^ low] | (1 << perm[i])
        tables.append(tuple(img))
    return tuple(tables)


@lru_cache(maxsize=None)
def _masks_by_min_size(n: int, lo: int) -> tuple[int, ...]:
    return tuple(m for m in range(1 << n) if bin(m).count("1") >= lo)


def cycle_pair_orbits(n: int, s_min: int, t_min: int) -> list[tuple[int, int]]:
    """One ``(S, T)`` bitmask pair per dihedral orbit with ``|S| >= s_min`` and ``|T| >= t_min``."""
    tables = _dihedral_tables(n)
    ts = _masks_by_min_size(n, t_min)
    out = []
    for S in _masks_by_min_size(n, s_min):
        if any(tab[S] < S for tab in tables):
            continue
        stab = [tab for tab in tables if tab[S] == S]
        for T in ts:
            if all(tab[T] >= T for tab in stab):
                out.append((S, T))
    return out


def _bits(mask: int, base: int) -> list[int]:
    return [base + i for i in range(mask.bit_length()) if mask >> i & 1]


def family_pair_orbits(sizes: Sequence[int], s_min: int, t_min: int) -> Iterator[tuple[frozenset, frozenset]]:
    """Orbit representatives of ``(S, T)`` on disjoint cycles of the given sizes.

    Cycle ``i`` uses the consecutive vertex ids starting at
    ``sum(sizes[:i])``; the symmetry group is the product of the cycles'
    dihedral groups.
    """
    total = sum(sizes)
    offsets = list(itertools.accumulate([0, *sizes[:-1]]))
    per_cycle = []
    for n in sizes:
        per_cycle.append([
            (bin(S).count("1"), bin(T).count("1"), S, T)
            for S, T in cycle_pair_orbits(n, max(0, s_min - (total - n)), max(0, t_min - (total - n)))
        ])
    for combo in itertools.product(*per_cycle):
        if sum(c[0] for c in combo) < s_min or sum(c[1] for c in combo) < t_min:
            continue
        S = frozenset(v for c, off in zip(combo, offsets) for v in _bits(c[2], off))
        T = frozenset(v for c, off in zip(combo, offsets) for v in _bits(c[3], off))
        yield S, T


def all_pairs(total: int, s_min: int, t_min: int) -> Iterator[tuple[frozenset, frozenset]]:
    """Every ``(S, T)`` pair, without symmetry reduction."""
    masks_s = _masks_by_min_size(total, s_min)
    masks_t = _masks_by_min_size(total, t_min)
    for S in masks_s:
        for T in masks_t:
            yield frozenset(_bits(S, 0)), frozenset(_bits(T, 0))


def partitions(n: int, smallest: int = 3, largest: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` into parts ``>= smallest``, parts in non-increasing order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for p in range(min(n, largest), smallest - 1, -1):
        for rest in partitions(n - p, smallest, p):
            yield (p,) + rest


def cycles_of_sizes(sizes: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    out, base = [], 0
    for n in sizes:
        out.append(tuple(range(base, base + n)))
        base += n
    return tuple(out)


# -- sweeps ----------------------------------------------------------------------

@dataclass
class SweepReport:
    lemma: int
    instances: int = 0
    witnesses: int = 0
    missing: int = 0
    unsound: int = 0
    # first few failing instances, for diagnostics
    examples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.missing == 0 and self.unsound == 0

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return (f"lemma {self.lemma}: {status} instances={self.instances} witnesses={self.witnesses} "
                f"missing={self.missing} unsound={self.unsound}")


def _record(report: SweepReport, instance, result, errs: list[str]) -> None:
    report.instances += 1
    if result is None:
        report.missing += 1
        if len(report.examples) < 20:
            report.examples.append(("missing", instance))
        return
    report.witnesses += 1
    if errs:
        report.unsound += 1
        if len(report.examples) < 20:
            report.examples.append(("unsound", instance, result, errs))


def sweep_path_with_spare(max_vertices: int = 12, reduce: bool = True) -> SweepReport:
    """Every family with at most ``max_vertices`` vertices, every q vector, every (S, T) above 2/3."""
    report = SweepReport(1)
    for total in range(3, max_vertices + 1):
        need = 2 * total // 3 + 1
        for sizes in partitions(total):
            cycles = cycles_of_sizes(sizes)
            pairs = list(family_pair_orbits(sizes, need, need) if reduce else all_pairs(total, need, need))
            for q in itertools.product(*(range(1, n) for n in sizes)):
                f = CycleFamily(cycles, q)
                for S, T in pairs:
                    w = lemmas.find_path_with_spare(f, S, T)
                    errs = check_path_with_spare(f, S, T, w) if w else []
                    _record(report, (sizes, q, sorted(S), sorted(T)), w, errs)
    return report


def sweep_disjoint_paths(max_vertices: int = 12, reduce: bool = True) -> SweepReport:
    report = SweepReport(2)
    for n in range(6, max_vertices + 1):
        p = n // 3
        cyc = tuple(range(n))
        pairs = family_pair_orbits((n,), p + 1, 2 * p + 2) if reduce else all_pairs(n, p + 1, 2 * p + 2)
        for S, T in pairs:
            res = lemmas.find_disjoint_ST_paths(cyc, S, T)
            errs = check_disjoint_pair(cyc, S, T, res[0], res[1], p + 1, p + 1) if res else []
            _record(report, (n, sorted(S), sorted(T)), res, errs)
    return report


def sweep_crossing_path(max_vertices: int = 12, reduce: bool = True) -> SweepReport:
    report = SweepReport(4)
    for n in range(3, max_vertices + 1):
        need = n // 3 + 1
        cyc = tuple(range(n))
        pairs = family_pair_orbits((n,), need, need) if reduce else all_pairs(n, need, need)
        for S, T in pairs:
            res = lemmas.find_short_crossing_path(cyc, S, T)
            errs = check_crossing_path(cyc, S, T, res) if res else []
            _record(report, (n, sorted(S), sorted(T)), res, errs)
    return report


REROUTE_SAMPLE_SETTINGS = ((5, 4), (5, 7), (6, 4))


def sample_reroute_or_double(t: int, r: int, samples: int, seed: int = 0) -> SweepReport:
    """Random hypothesis-satisfying instances: t cycles of order r, |S|, |T| > 2/3 t r - r/3."""
    rng = random.Random(seed)
    report = SweepReport(3)
    cycles = cycles_of_sizes([r] * t)
    total = t * r
    # 3|S| > 2tr - r
    need = (2 * t * r - r) // 3 + 1
    q_max = (r - 1) // 3
    universe = list(range(total))
    for _ in range(samples):
        q = tuple(rng.randint(1, q_max) for _ in range(t))
        f = CycleFamily(cycles, q)
        S = frozenset(rng.sample(universe, rng.randint(need, total)))
        T = frozenset(rng.sample(universe, rng.randint(need, total)))
        w = lemmas.find_reroute_or_double(f, S, T)
        errs = check_reroute_or_double(f, S, T, w) if w else []
        _record(report, (t, r, q, sorted(S), sorted(T)), w, errs)
    return report


def run_sweep(lemma: int, max_vertices: int = 12, samples: int = 10_000, seed: int = 0) -> list[SweepReport]:
    if lemma == 1:
        return [sweep_path_with_spare(max_vertices)]
    if lemma == 2:
        return [sweep_disjoint_paths(max_vertices)]
    if lemma == 3:
        return [sample_reroute_or_double(t, r, samples, seed) for t, r in REROUTE_SAMPLE_SETTINGS]
    if lemma == 4:
        return [sweep_crossing_path(max_vertices)]
    raise ValueError(f"no sweep for lemma {lemma}")


