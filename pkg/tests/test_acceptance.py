"""Acceptance checks, one test per criterion.

Each test prints a single ``[PASS]``/``[FAIL]`` line (visible with ``-v``
or ``-s``) and then asserts the criterion, including its runtime limit.
"""

import itertools
import random
import time
from fractions import Fraction

import pytest

from cyclepack.certificate import verify_certificate
from cyclepack.engine import PackConfig, in_guaranteed_regime
from cyclepack.generators import (
    bipartite_average_degree, gen_complete, gen_complete_bipartite, gen_disjoint_cliques, gen_disjoint_cycles,
    gen_gnp, gen_split, gen_split_matched,
)
from cyclepack.graph import Graph, stats
from cyclepack.ineq import check_linear_system, check_quadratic_system_k5
from cyclepack.lemma_suite import run_sweep
from cyclepack.minimalize import minimalize
from cyclepack.oracle import Verdict, exact_pack
from cyclepack.pipeline import solve


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail, elapsed):
        with capsys.disabled():
            status = "PASS" if ok else "FAIL"
            print(f"\n[{status}] criterion {number} {title}: {detail} ({elapsed:.1f} s)")
    return emit


def trace_ok(run, n, r):
    pots = [e.potential_after for e in run.trace if e.potential_after is not None]
    increasing = all(a < b for a, b in zip(pots, pots[1:]))
    capped = run.diagnostics is not None and run.diagnostics.reason == "iteration cap"
    return increasing, capped, len(run.trace) <= n * r


# -- shared run sets -------------------------------------------------------------------

def dense_suite():
    graphs = [(f"K{n}", gen_complete(n)) for n in range(25, 41)]
    rng = random.Random(2024)
    seed = 0
    while len(graphs) < 16 + 50:
        n = rng.randint(30, 60)
        p = rng.uniform(0.5, 0.95)
        seed += 1
        g = gen_gnp(n, p, seed)
        if stats(g).d >= 24:
            graphs.append((f"G({n},{p:.2f}) seed {seed}", g))
    return graphs


@pytest.fixture(scope="module")
def dense_runs():
    start = time.time()
    runs = []
    for name, g in dense_suite():
        res = solve(g, PackConfig(6, 3, check_steps=True))
        runs.append((name, g, res))
    return runs, time.time() - start


def curated_small():
    out = []
    for n in range(3, 9):
        out.append((f"K{n}", gen_complete(n)))
        out.append((f"C{n}", Graph(range(n), [(i, (i + 1) % n) for i in range(n)])))
    for s in range(1, 6):
        for t in range(1, 9 - s):
            out.append((f"K{s},{t}", gen_complete_bipartite(s, t)))
    for k, r in [(2, 3), (2, 4)]:
        for n in range(1, 9 - (r // 2 * k - 1) + 1):
            g = gen_split(k, r, n)
            if g.n <= 8:
                out.append((f"split{k},{r},{n}", g))
    out.append(("split-matched2,3,4", gen_split_matched(2, 3, 4)))
    out.append(("2K4", gen_disjoint_cliques(4, 2)))
    out.append(("2C4", gen_disjoint_cycles(2, 4)))
    out.append(("2C3", gen_disjoint_cycles(2, 3)))
    return out


@pytest.fixture(scope="module")
def small_runs():
    start = time.time()
    cases = []
    for name, g in curated_small():
        cases.append((name, g))
    rng = random.Random(606)
    for i in range(500):
        n = rng.randint(3, 10)
        cases.append((f"random {i}", gen_gnp(n, rng.choice([0.2, 0.35, 0.5, 0.7, 0.9]), 10_000 + i)))
    runs = []
    for name, g in cases:
        for k, r in [(1, 3), (1, 5), (2, 3), (2, 4), (3, 3)]:
            verdict = exact_pack(g, k, r).verdict
            res = solve(g, PackConfig(k, r, check_steps=True))
            runs.append((name, g, k, r, verdict, res))
    return runs, time.time() - start


# -- criteria --------------------------------------------------------------------------

def test_criterion_1_inequality_reproduction(report):
    start = time.time()
    bad = [km1 for km1 in range(6, 101) if check_linear_system(km1).feasible]
    quad = check_quadratic_system_k5().feasible
    small = [km1 for km1 in range(1, 5) if not check_linear_system(km1).witnesses]
    elapsed = time.time() - start
    ok = not bad and not quad and not small and elapsed < 5
    report(1, "inequality reproduction", ok,
           f"linear feasible for k-1 in 6..100: {bad or 'none'}; quadratic feasible: {quad}; "
           f"k-1 in 1..4 without witness: {small or 'none'}", elapsed)
    assert not bad and not quad and not small
    assert elapsed < 5


def test_criterion_2_lemma_guarantees(report):
    start = time.time()
    reports = []
    for lemma in (1, 2, 4):
        reports += run_sweep(lemma, max_vertices=12)
    reports += run_sweep(3, samples=10_000, seed=1)
    elapsed = time.time() - start
    missing = sum(r.missing for r in reports)
    unsound = sum(r.unsound for r in reports)
    reroute_samples = [r.instances for r in reports if r.lemma == 3]
    ok = missing == 0 and unsound == 0 and min(reroute_samples) >= 10_000 and elapsed < 300
    detail = "; ".join(f"lemma {r.lemma} {r.instances} instances" for r in reports)
    report(2, "lemma guarantee suites", ok, f"{detail}; missing={missing} unsound={unsound}", elapsed)
    assert missing == 0 and unsound == 0
    assert len(reroute_samples) == 3 and min(reroute_samples) >= 10_000
    assert elapsed < 300


def test_criterion_3_end_to_end_dense(report, dense_runs):
    runs, elapsed = dense_runs
    failures = [name for name, g, res in runs if not (res.success and verify_certificate(g, res.certificate))]
    assert all(stats(g).d >= 24 for _, g, _ in runs)
    ok = len(runs) >= 50 and not failures and elapsed < 600
    report(3, "end-to-end k=6 r=3 on d >= 24", ok,
           f"{len(runs) - len(failures)}/{len(runs)} verified successes; failures: {failures or 'none'}", elapsed)
    assert len(runs) >= 50
    assert not failures
    assert elapsed < 600


def test_criterion_4_extremal_negatives(report):
    start = time.time()
    cases = [("K6,3", gen_complete_bipartite(6, 3), 2, 3), ("K8,5", gen_complete_bipartite(8, 5), 3, 3)]
    for r in (3, 4):
        for n in (4, 6, 8):
            cases.append((f"split(2,{r},{n})", gen_split(2, r, n), 2, r))
    verdicts = {name: exact_pack(g, k, r).verdict for name, g, k, r in cases}
    elapsed = time.time() - start
    wrong = {name: v.value for name, v in verdicts.items() if v is not Verdict.NO}
    ok = not wrong and elapsed < 120
    report(4, "extremal negatives", ok, f"{len(cases)} complete refutations; not refuted: {wrong or 'none'}", elapsed)
    assert not wrong
    assert elapsed < 120


def test_criterion_5_minimalizer_contract(report):
    start = time.time()
    rng = random.Random(55)
    problems = []
    for i in range(200):
        n = rng.randint(10, 60)
        p = rng.choice([0.2, 0.5, 0.8])
        g = gen_gnp(n, p, 5_000 + i)
        res = minimalize(g)
        s = stats(res.minor)
        half = s.d / 2
        checks = {
            "final_d >= original_d": res.final_d >= res.original_d,
            "delta > d/2": s.min_degree > half,
            "tau > d/2 - 1": s.tau is not None and s.tau > half - 1,
            "replay": res.history.replay(g) == res.minor,
            "exact rationals": isinstance(res.final_d, Fraction) and res.final_d == s.d,
        }
        problems += [f"graph {i}: {name}" for name, good in checks.items() if not good]
    elapsed = time.time() - start
    ok = not problems
    report(5, "minimalizer contract", ok, f"200 graphs; violations: {problems[:5] or 'none'}", elapsed)
    assert not problems


def test_criterion_6_oracle_engine_cross_validation(report, small_runs):
    runs, elapsed = small_runs
    unsound = [(name, k, r) for name, g, k, r, verdict, res in runs if verdict is Verdict.NO and res.success]
    undecided = [(name, k, r) for name, g, k, r, verdict, res in runs if verdict is Verdict.BUDGET_EXCEEDED]
    missed = [(name, g, k, r) for name, g, k, r, verdict, res in runs if verdict is Verdict.YES and not res.success]
    missed_in_scope = [(name, k, r) for name, g, k, r in missed if in_guaranteed_regime(g, k, r)]
    bad_certs = [(name, k, r) for name, g, k, r, verdict, res in runs
                 if res.success and not verify_certificate(g, res.certificate)]
    ok = not unsound and not undecided and not missed_in_scope and not bad_certs
    report(6, "oracle/engine cross-validation", ok,
           f"{len(runs)} runs; engine success on oracle No: {len(unsound)}; "
           f"oracle Yes but engine stuck (outside k >= 6, d >= 4kr/3): {len(missed)}; "
           f"of those inside the hypotheses: {len(missed_in_scope)}", elapsed)
    assert not unsound and not bad_certs
    assert not undecided
    assert not missed_in_scope


def test_criterion_7_monotone_and_terminating(report, dense_runs, small_runs):
    start = time.time()
    issues = []
    for name, g, res in dense_runs[0]:
        inc, capped, short = trace_ok(res.run, res.reduction.minor.n, 3)
        if not inc or capped or not short:
            issues.append(name)
    for name, g, k, r, _, res in small_runs[0]:
        inc, capped, short = trace_ok(res.run, res.reduction.minor.n, r)
        if not inc or capped or not short:
            issues.append(f"{name} k={k} r={r}")
    total = len(dense_runs[0]) + len(small_runs[0])
    elapsed = time.time() - start
    ok = not issues
    report(7, "potential monotonicity and termination", ok,
           f"{total} traces strictly increasing, uncapped, length <= n*r; offending: {issues[:5] or 'none'}", elapsed)
    assert not issues


def test_bipartite_degree_sharpness_pointwise(report):
    start = time.time()
    results = {}
    for k in (2, 3):
        t = 2 * k - 1
        values = [bipartite_average_degree(n, t) for n in range(1, 10_001)]
        monotone = all(a < b for a, b in zip(values, values[1:]))
        gap = (4 * k - 2) - values[-1]
        results[k] = (monotone, gap)
        assert values[9] == stats(gen_complete_bipartite(10, t)).d
    elapsed = time.time() - start
    ok = all(m and 0 <= gap < Fraction(1, 10) for m, gap in results.values())
    detail = "; ".join(f"k={k}: monotone={m}, 4k-2 - d(n=10^4) = {float(g):.4f}" for k, (m, g) in results.items())
    report("S", "K_{n,2k-1} degree approaches 4k-2", ok, detail, elapsed)
    for monotone, gap in results.values():
        assert monotone
        assert 0 <= gap < Fraction(1, 10)
