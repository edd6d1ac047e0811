"""Acceptance gate: one test per criterion, one printed pass/fail line each.

All comparisons are exact integer equalities; the only tolerances are the
wall-clock budgets stated per criterion.
"""

import itertools
import random
import time

import pytest

from gdet.classify import NotMember, classify_c24, is_in_A
from gdet.core import (
    Assignment,
    d2_closed_form,
    det_group,
    det_matrix_oracle,
    factor_step,
)
from gdet.sweep import SweepConfig, a_set_oracle, sweep
from gdet.verify import verify_all
from gdet.witness import F1, F2a, F2b, F3, F4, F5even, F5odd, build, witness_for

CORPUS_SIZE = 10_000


@pytest.fixture
def report(capfd):
    """Pass/fail reporter that prints one line per criterion past capture."""

    def _report(num: int, name: str, ok: bool, detail: str = "") -> None:
        status = "PASS" if ok else "FAIL"
        with capfd.disabled():
            print(f"[acceptance {num:02d}] {name}: {status}{detail}", flush=True)
        assert ok, f"criterion {num} ({name}) failed"

    return _report


@pytest.fixture(scope="module")
def corpus():
    rng = random.Random(20260824)
    out = []
    for _ in range(CORPUS_SIZE):
        n = rng.randint(1, 4)
        out.append(
            Assignment(n, tuple(rng.randint(-20, 20) for _ in range(1 << n)))
        )
    return out


def test_c01_oracle_equivalence(corpus, report):
    start = time.perf_counter()
    ok = all(det_group(a) == det_matrix_oracle(a) for a in corpus)
    elapsed = time.perf_counter() - start
    report(1, "determinant matches matrix oracle", ok and elapsed < 60,
            f" ({CORPUS_SIZE} assignments, {elapsed:.1f}s)")


def test_c02_factorization_identity(corpus, report):
    start = time.perf_counter()
    ok = True
    for a in corpus:
        plus, minus = factor_step(a)
        ok = ok and det_group(a) == det_group(plus) * det_group(minus)
    elapsed = time.perf_counter() - start
    report(2, "half-sum/half-difference factorization", ok and elapsed < 30,
            f" ({CORPUS_SIZE} assignments, {elapsed:.1f}s)")


def test_c03_closed_form_and_symmetry(report):
    span = range(-8, 9)
    ok = all(
        d2_closed_form(*q) == det_group(Assignment(2, q))
        for q in itertools.product(span, repeat=4)
    )
    cases = len(span) ** 4
    rng = random.Random(3)
    for _ in range(1000):
        q = tuple(rng.randint(-50, 50) for _ in range(4))
        ref = d2_closed_form(*q)
        ok = ok and all(
            d2_closed_form(*perm) == ref for perm in itertools.permutations(q)
        )
    report(3, "rank-2 closed form and full symmetry", ok, f" ({cases} + 24000 cases)")


def test_c04_witness_round_trip(report):
    start = time.perf_counter()
    ok = True
    evals = 0
    for p in range(-500, 501):
        for family in (F1(p), F2a(p), F2b(p), F3(p), F4(p, p), F5even(p), F5odd(p)):
            ok = ok and det_group(build(family)) == family.target()
            evals += 1
    elapsed = time.perf_counter() - start
    report(4, "witness families match closed forms", ok and elapsed < 30,
            f" ({evals} evaluations, {elapsed:.1f}s)")


def test_c05_lemma_suite(report):
    start = time.perf_counter()
    reports = verify_all(window=32)
    elapsed = time.perf_counter() - start
    ok = all(r.passed for r in reports)
    for r in reports:
        if r.lemma_id.startswith("2."):
            ok = ok and r.cases_enumerated == 1 << 16
        elif r.lemma_id.startswith("3."):
            ok = ok and r.cases_enumerated == 32**4
    ok = ok and len(reports) == 12 and elapsed < 300
    report(5, "exhaustive lemma suite at window 32", ok,
            f" ({len(reports)} lemmas, {elapsed:.1f}s)")


def test_c06_soundness_sweep(report):
    start = time.perf_counter()
    result = sweep(SweepConfig(n=4, alphabet=(-1, 0, 1), worker_count=8))
    elapsed = time.perf_counter() - start
    ok = (
        result.complete
        and result.total_enumerated == 3**16
        and not result.violations
        and not result.flagged
        and elapsed < 600
    )
    report(6, "full 3^16 sweep with zero violations", ok,
            f" ({result.total_enumerated} tuples, {result.distinct_values} values, "
            f"{elapsed:.1f}s)")


def test_c07_a_set_oracle_agreement(report):
    start = time.perf_counter()
    bound = 20_000
    oracle = set(a_set_oracle(bound))
    ok = True
    for u in range(-bound + 1, bound, 2):
        pair = is_in_A(u)
        ok = ok and (pair is not None) == (u in oracle)
        if pair is not None:
            k, l = pair
            ok = ok and (8 * k - 3) * (8 * l + 3) == u
    elapsed = time.perf_counter() - start
    report(7, "A-set divisor search vs double-loop oracle", ok and elapsed < 60,
            f" ({bound} odd values, {elapsed:.1f}s)")


def test_c08_specific_verdicts(report):
    ok = isinstance(classify_c24(7 << 24), NotMember)
    ok = ok and isinstance(classify_c24(-(1 << 24)), NotMember)
    for q in range(-99, 100, 2):
        ok = ok and isinstance(classify_c24(q << 25), NotMember)
    for v in (15 << 24, -9 << 24, 0):
        verdict = classify_c24(v)
        witness = witness_for(v)
        ok = ok and verdict.member and witness is not None
        ok = ok and det_group(witness) == v
    report(8, "pinned membership verdicts with verified witnesses", ok)


def test_c09_lower_rank_sweeps(report):
    start = time.perf_counter()
    r2 = sweep(SweepConfig(n=2, alphabet=(-3, -2, -1, 0, 1, 2, 3)))
    r3 = sweep(SweepConfig(n=3, alphabet=(-1, 0, 1)))
    elapsed = time.perf_counter() - start
    ok = (
        r2.total_enumerated == 2401
        and r3.total_enumerated == 6561
        and not r2.violations
        and not r3.violations
        and elapsed < 10
    )
    report(9, "rank-2 and rank-3 sweeps classify as members", ok,
            f" ({r2.distinct_values} + {r3.distinct_values} values, {elapsed:.1f}s)")


def test_c10_resume_determinism(tmp_path, report):
    out_full = str(tmp_path / "full.jsonl")
    out_split = str(tmp_path / "split.jsonl")

    def cfg(path, resume=False):
        return SweepConfig(
            n=4, alphabet=(0, 1), chunk_size=4096, checkpoint_every=2,
            output_path=path,
            resume_from=(path + ".ckpt") if resume else None,
        )

    full = sweep(cfg(out_full))
    interrupted = sweep(cfg(out_split), _stop_after_chunks=5)
    resumed = sweep(cfg(out_split, resume=True))
    with open(out_full, "rb") as fa, open(out_split, "rb") as fb:
        identical = fa.read() == fb.read()
    ok = full.complete and not interrupted.complete and resumed.complete and identical
    report(10, "interrupted sweep resumes to a byte-identical file", ok)
