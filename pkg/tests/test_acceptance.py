"""Acceptance suite: one pass/fail line per criterion, all at zero tolerance.

The full default harness run happens once per session; each criterion
reads its reports and adds any direct spot checks of its own.
"""

import time
from fractions import Fraction

import pytest

from toughkit.generators import petersen_graph
from toughkit.harness import HarnessConfig, run_all
from toughkit.harness.report import EXHAUSTIVE, HEURISTIC, SAMPLED
from toughkit.solver import toughness

F = Fraction

# labeled connected graphs per order
LABELED = {1: 1, 2: 1, 3: 4, 4: 38, 5: 728, 6: 26704, 7: 1866256}


@pytest.fixture(scope="module")
def full_run():
    t0 = time.perf_counter()
    reports, status = run_all(HarnessConfig())
    return {r.check_id: r for r in reports}, status, time.perf_counter() - t0


def _verdict(record, number, ok, summary):
    record(f"criterion {number:>2} [{'PASS' if ok else 'FAIL'}] {summary}")
    assert ok, summary


def test_criterion_01_solver_matches_oracle(full_run, record_acceptance):
    reports, _, _ = full_run
    r = reports["solver-oracle"]
    petersen = toughness(petersen_graph())
    ok = (
        r.passed
        and r.corpus_size == sum(LABELED.values())
        and petersen.value == F(4, 3)
        and r.stats["solver_seconds"] < 60
    )
    _verdict(record_acceptance, 1, ok,
             f"solver = oracle on {r.corpus_size} labeled graphs n<=7, {r.failure_count} mismatches; "
             f"tau(Petersen) = {petersen.value}; solver sweep {r.stats['solver_seconds']:.1f}s (< 60s)")


def test_criterion_02_bipartite_double_toughness(full_run, record_acceptance):
    r = full_run[0]["bg-identity"]
    expected = sum(LABELED[n] for n in range(2, 7))
    ok = r.passed and r.corpus_size == expected and r.elapsed < 300
    _verdict(record_acceptance, 2, ok,
             f"tau(B(g)) = min(2 tau(g), 1) on {r.corpus_size} graphs, {r.failure_count} failures, {r.elapsed:.1f}s")


def test_criterion_03_bipartite_double_connectivity(full_run, record_acceptance):
    r = full_run[0]["bg-connectivity"]
    ok = r.passed and r.corpus_size == sum(LABELED[n] for n in range(2, 7))
    _verdict(record_acceptance, 3, ok,
             f"kappa(B(g)) >= kappa(g) on {r.corpus_size} graphs, {r.failure_count} failures")


def test_criterion_04_gk_trichotomy(full_run, record_acceptance):
    r = full_run[0]["gk-trichotomy"]
    ok = r.passed and r.corpus_size == 6 * sum(LABELED[n] for n in range(2, 5))
    _verdict(record_acceptance, 4, ok,
             f"sign(tau(G_k) - a/b) = sign(k - alpha) and reference cutset counts on "
             f"{r.corpus_size} instances, {r.failure_count} failures")


def test_criterion_05_attachment_gadget(full_run, record_acceptance):
    r = full_run[0]["hr"]
    ok = r.passed and r.corpus_size == 4
    _verdict(record_acceptance, 5, ok,
             f"H_r for r in 5..8: profile, parity, cycle, tau >= 1; {r.failure_count} failures")


def test_criterion_06_gadget_lemmas(full_run, record_acceptance):
    fwd = full_run[0]["gadget-forward"]
    rev = full_run[0]["gadget-reverse"]
    ok = (
        fwd.passed
        and fwd.mode == SAMPLED
        and fwd.stats["instances_r5"] >= 5
        and fwd.stats["instances_r6"] >= 5
        and rev.mode == HEURISTIC
        and rev.passed
    )
    _verdict(record_acceptance, 6, ok,
             f"forward: omega(G'-S) = omega(G-S) + |S| > 2|S| on {fwd.stats['instances_r5']} (r=5) + "
             f"{fwd.stats['instances_r6']} (r=6) sampled instances, {fwd.failure_count} failures; "
             f"reverse: heuristic only, {rev.corpus_size} searches, no counterexample found")


def test_criterion_07_cubic_classifier(full_run, record_acceptance):
    r = full_run[0]["cubic-4regular"]
    st = r.stats
    ok = (
        r.passed
        and st["cubic_generated"] > 0
        and st["cubic_ingested"] == 621
        and st["max_classify_ms_n14"] < 10
    )
    _verdict(record_acceptance, 7, ok,
             f"classify_cubic = oracle on {st['cubic_generated']} generated (n<=10) and "
             f"{st['cubic_ingested']} ingested (n<=14) graphs, {r.failure_count} disagreements; "
             f"slowest classification at n=14 {st['max_classify_ms_n14']:.3f} ms")


def test_criterion_08_four_regular(full_run, record_acceptance):
    r = full_run[0]["cubic-4regular"]
    st = r.stats
    ok = r.passed and st["quartic"] == 85 and st["quartic_disconnected"] > 0
    _verdict(record_acceptance, 8, ok,
             f"tau >= 1/2 on all {st['quartic']} connected 4-regular graphs n<=10; recognizer = connectivity "
             f"also on {st['quartic_disconnected']} disconnected inputs; {r.failure_count} failures")


def test_criterion_09_spanning_half(full_run, record_acceptance):
    r = full_run[0]["spanning-half"]
    ok = r.passed and r.corpus_size > 0 and r.mode == EXHAUSTIVE
    _verdict(record_acceptance, 9, ok,
             f"spanning subgraph has tau = 1/2 exactly on all {r.corpus_size} eligible graphs n<=7, "
             f"{r.failure_count} failures")


def test_criterion_10_rational_bounds(full_run, record_acceptance):
    r = full_run[0]["rational-bounds"]
    gaps = r.stats["gaps"]
    ok = r.passed and set(gaps) == {"4", "5", "6"}
    shown = ", ".join(f"n={n}: {g['min_gap']}" for n, g in sorted(gaps.items()))
    _verdict(record_acceptance, 10, ok,
             f"a, b <= n-1 on {r.corpus_size} noncomplete graphs n<=6; min gaps {shown} all > 1/n^2; "
             f"{r.failure_count} failures")


def test_criterion_11_full_run(full_run, record_acceptance):
    reports, status, elapsed = full_run
    exhaustive_ok = all(r.passed for r in reports.values() if r.mode == EXHAUSTIVE)
    ok = status == 0 and exhaustive_ok and elapsed < 600
    _verdict(record_acceptance, 11, ok,
             f"run_all: {len(reports)} checks, status {status}, {elapsed:.1f}s (< 600s)")
