"""Exhaustive determinant sweeps over boxes of integer tuples.

A sweep enumerates every assignment of rank n with entries drawn from a
fixed alphabet, evaluates all determinants, aggregates the distinct values,
classifies each one, and checks the membership and residue constraints on
the whole population.  Tuples are indexed in mixed radix: index i encodes
the tuple whose j-th entry is alphabet[(i // base**j) % base], so the
encoding is invertible and the enumeration order is canonical.

Determinants are evaluated in vectorized chunks.  Arithmetic stays in
int64 whenever the Hadamard-style bound (d * M)^d on the component product
fits (d = 2^n entries bounded by M); otherwise the product is split into
two half-products that individually fit, or falls back to exact object
arithmetic.  Progress is checkpointed as JSONL so an interrupted sweep can
resume and still produce a byte-identical sorted result file.
"""

from __future__ import annotations

import hashlib
import json
import multiprocessing
import os
from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

from gdet.classify import (
    DEFAULT_FACTOR_CAP,
    FactorizationInfeasibleError,
    classify_c22,
    classify_c23,
    classify_c24,
    two_adic_split,
)
from gdet.core import det_group
from gdet.witness import build, family_for

_INT64_SAFE = 1 << 62
_MAX_DISTINCT = 1 << 22


@dataclass(frozen=True)
class SweepConfig:
    """Parameters of one sweep run.

    The four check flags correspond to the population-level assertions:
    every value classifies as a member; odd values are 1 mod 16; nonzero
    even values have 2-adic valuation in {16, 24} or at least 26; and
    valuation-16 values have odd part 1 mod 4.  The residue checks only
    apply at rank 4; lower ranks run the member check alone.
    """

    n: int
    alphabet: tuple[int, ...]
    chunk_size: int = 1 << 16
    worker_count: int = 1
    output_path: Optional[str] = None
    resume_from: Optional[str] = None
    checkpoint_every: int = 8
    member_check: bool = True
    odd_residue_check: bool = True
    valuation_gap_check: bool = True
    v16_odd_part_check: bool = True
    factor_cap: int = DEFAULT_FACTOR_CAP
    seed: Optional[int] = None

    def __post_init__(self) -> None:
        if self.n not in (2, 3, 4):
            raise ValueError(f"sweep supports ranks 2, 3, 4; got {self.n}")
        alphabet = tuple(int(v) for v in self.alphabet)
        if len(alphabet) != len(set(alphabet)) or not alphabet:
            raise ValueError("alphabet must be a non-empty set of distinct integers")
        object.__setattr__(self, "alphabet", alphabet)
        if self.chunk_size < 1 or self.worker_count < 1 or self.checkpoint_every < 1:
            raise ValueError("chunk_size, worker_count, checkpoint_every must be >= 1")
        if self.total() >= 1 << 63:
            raise ValueError("tuple space too large to index in 64 bits")

    def total(self) -> int:
        return len(self.alphabet) ** (1 << self.n)

    def config_hash(self) -> str:
        blob = json.dumps(
            {"n": self.n, "alphabet": list(self.alphabet), "chunk_size": self.chunk_size}
        )
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def decode(self, index: int) -> tuple[int, ...]:
        base = len(self.alphabet)
        out = []
        for _ in range(1 << self.n):
            out.append(self.alphabet[index % base])
            index //= base
        return tuple(out)


@dataclass
class ValueRecord:
    """Aggregate for one distinct determinant value."""

    value: int
    count: int
    example_tuple: tuple[int, ...]
    class_tag: Optional[str] = None


@dataclass
class SweepResult:
    config: SweepConfig
    total_enumerated: int
    chunks_completed: int
    complete: bool
    records: dict[int, ValueRecord]
    violations: list[tuple[str, int, tuple[int, ...]]] = field(default_factory=list)
    flagged: list[int] = field(default_factory=list)

    @property
    def distinct_values(self) -> int:
        return len(self.records)


def _decode_chunk(n: int, alphabet: tuple[int, ...], start: int, stop: int) -> np.ndarray:
    base = len(alphabet)
    idx = np.arange(start, stop, dtype=np.int64)
    powers = base ** np.arange(1 << n, dtype=np.int64)
    digits = (idx[:, None] // powers) % base
    return np.asarray(alphabet, dtype=np.int64)[digits]


def _batch_transform(x: np.ndarray) -> np.ndarray:
    width = x.shape[-1]
    n = width.bit_length() - 1
    out = x.copy()
    for s in range(n):
        h = 1 << s
        v = out.reshape(-1, width >> (s + 1), 2, h)
        top = v[:, :, 0, :] + v[:, :, 1, :]
        bot = v[:, :, 0, :] - v[:, :, 1, :]
        out = np.stack((top, bot), axis=2).reshape(-1, width)
    return out


def _chunk_worker(args: tuple) -> dict[int, tuple[int, int]]:
    """Determinants of one index range: {value: (count, first index)}."""
    n, alphabet, start, stop = args
    t = _batch_transform(_decode_chunk(n, alphabet, start, stop))
    d = 1 << n
    bound = d * max((max(abs(v) for v in alphabet)), 1)
    out: dict[int, tuple[int, int]] = {}
    if bound**d < _INT64_SAFE:
        dets = t.prod(axis=1)
        values, first, counts = np.unique(dets, return_index=True, return_counts=True)
        for v, i, c in zip(values, first, counts):
            out[int(v)] = (int(c), start + int(i))
    elif bound ** (d // 2) < _INT64_SAFE:
        halves = np.stack((t[:, : d // 2].prod(axis=1), t[:, d // 2 :].prod(axis=1)), axis=1)
        pairs, first, counts = np.unique(halves, axis=0, return_index=True, return_counts=True)
        for (h1, h2), i, c in zip(pairs, first, counts):
            v = int(h1) * int(h2)
            if v in out:
                c0, i0 = out[v]
                out[v] = (c0 + int(c), min(i0, start + int(i)))
            else:
                out[v] = (int(c), start + int(i))
    else:
        dets = t.astype(object).prod(axis=1)
        for offset, v in enumerate(dets):
            v = int(v)
            if v in out:
                c0, i0 = out[v]
                out[v] = (c0 + 1, i0)
            else:
                out[v] = (1, start + offset)
    return out


def _classify_tag(cfg: SweepConfig, value: int) -> Optional[str]:
    """Class tag for one value; None when factorization is infeasible."""
    if cfg.n == 2:
        verdict = classify_c22(value)
        return verdict.clause if verdict.member else "NotMember"
    if cfg.n == 3:
        verdict = classify_c23(value)
        return verdict.clause if verdict.member else "NotMember"
    try:
        return classify_c24(value, factor_cap=cfg.factor_cap, seed=cfg.seed).tag
    except FactorizationInfeasibleError:
        return None


def _run_population_checks(cfg: SweepConfig, result: SweepResult) -> None:
    result.violations.clear()
    result.flagged.clear()
    for value, rec in result.records.items():
        if rec.class_tag is None:
            result.flagged.append(value)
            continue
        if cfg.member_check and rec.class_tag == "NotMember":
            result.violations.append(("member", value, rec.example_tuple))
        if cfg.n != 4:
            continue
        if cfg.odd_residue_check and value % 2 and value % 16 != 1:
            result.violations.append(("odd_residue", value, rec.example_tuple))
        if value and value % 2 == 0:
            w = two_adic_split(value).valuation
            if cfg.valuation_gap_check and not (w in (16, 24) or w >= 26):
                result.violations.append(("valuation_gap", value, rec.example_tuple))
            if cfg.v16_odd_part_check and w == 16 and two_adic_split(value).odd_part % 4 != 1:
                result.violations.append(("v16_odd_part", value, rec.example_tuple))
    result.flagged.sort()


def _write_state(path: str, cfg: SweepConfig, result: SweepResult) -> None:
    """Atomically write the JSONL state; record order is sorted by value."""
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        header = {
            "config_hash": cfg.config_hash(),
            "n": cfg.n,
            "alphabet": list(cfg.alphabet),
            "chunks_completed": result.chunks_completed,
            "total_enumerated": result.total_enumerated,
            "complete": result.complete,
        }
        fh.write(json.dumps(header) + "\n")
        for value in sorted(result.records):
            rec = result.records[value]
            fh.write(
                json.dumps(
                    {
                        "value": str(rec.value),
                        "count": rec.count,
                        "example_tuple": list(rec.example_tuple),
                        "class_tag": rec.class_tag,
                    }
                )
                + "\n"
            )
    os.replace(tmp, path)


def _load_state(path: str, cfg: SweepConfig) -> SweepResult:
    with open(path) as fh:
        header = json.loads(fh.readline())
        if header["config_hash"] != cfg.config_hash():
            raise ValueError(
                f"checkpoint {path} belongs to a different sweep configuration"
            )
        records: dict[int, ValueRecord] = {}
        for line in fh:
            raw = json.loads(line)
            value = int(raw["value"])
            records[value] = ValueRecord(
                value, raw["count"], tuple(raw["example_tuple"]), raw["class_tag"]
            )
    return SweepResult(
        config=cfg,
        total_enumerated=header["total_enumerated"],
        chunks_completed=header["chunks_completed"],
        complete=header["complete"],
        records=records,
    )


def sweep(cfg: SweepConfig, _stop_after_chunks: Optional[int] = None) -> SweepResult:
    """Run (or resume) the sweep described by cfg.

    Chunks are processed in index order, so the recorded example tuple for
    each value is always its first occurrence and the output is independent
    of worker count and of any checkpoint/resume splits.  Values whose
    classification needs an infeasible factorization are flagged, not
    counted as violations.  _stop_after_chunks exists for tests: it stops
    early after checkpointing, simulating a killed run.
    """
    total = cfg.total()
    num_chunks = -(-total // cfg.chunk_size)
    if cfg.resume_from:
        result = _load_state(cfg.resume_from, cfg)
        if result.complete:
            _run_population_checks(cfg, result)
            return result
    else:
        result = SweepResult(cfg, 0, 0, False, {})

    checkpoint_path = (cfg.output_path + ".ckpt") if cfg.output_path else None

    def merge(chunk: dict[int, tuple[int, int]]) -> None:
        for value, (count, index) in sorted(chunk.items(), key=lambda kv: kv[1][1]):
            rec = result.records.get(value)
            if rec is None:
                if len(result.records) >= _MAX_DISTINCT:
                    raise RuntimeError(
                        f"more than {_MAX_DISTINCT} distinct values; "
                        "shrink the box or raise the limit"
                    )
                result.records[value] = ValueRecord(
                    value, count, cfg.decode(index), _classify_tag(cfg, value)
                )
            else:
                rec.count += count
    tasks = (
        (cfg.n, cfg.alphabet, i * cfg.chunk_size, min((i + 1) * cfg.chunk_size, total))
        for i in range(result.chunks_completed, num_chunks)
    )
    stopped = False

    def after_chunk() -> bool:
        result.chunks_completed += 1
        result.total_enumerated = min(result.chunks_completed * cfg.chunk_size, total)
        if checkpoint_path and (
            result.chunks_completed % cfg.checkpoint_every == 0
            or result.chunks_completed == num_chunks
        ):
            _write_state(checkpoint_path, cfg, result)
        return (
            _stop_after_chunks is not None
            and result.chunks_completed >= _stop_after_chunks
        )

    if cfg.worker_count > 1:
        with multiprocessing.Pool(cfg.worker_count) as pool:
            for chunk in pool.imap(_chunk_worker, tasks):
                merge(chunk)
                if after_chunk():
                    stopped = True
                    break
    else:
        for task in tasks:
            merge(_chunk_worker(task))
            if after_chunk():
                stopped = True
                break

    result.complete = result.chunks_completed == num_chunks and not stopped
    if result.complete:
        _run_population_checks(cfg, result)
        if cfg.output_path:
            _write_state(cfg.output_path, cfg, result)
    elif checkpoint_path:
        _write_state(checkpoint_path, cfg, result)
    return result


def resume(cfg: SweepConfig) -> SweepResult:
    """Convenience wrapper: resume from the checkpoint next to output_path."""
    if not cfg.output_path:
        raise ValueError("resume needs output_path")
    return sweep(replace(cfg, resume_from=cfg.output_path + ".ckpt"))


def a_set_oracle(bound: int) -> list[int]:
    """All u with |u| <= bound of the form (8k-3)(8l+3), by double enumeration.

    Independent of the divisor-search implementation; used as its oracle.
    """
    out = set()
    ks = [k for k in range(-(bound + 3) // 8 - 1, (bound + 3) // 8 + 2) if abs(8 * k - 3) <= bound]
    ls = [l for l in range(-(bound + 3) // 8 - 1, (bound + 3) // 8 + 2) if abs(8 * l + 3) <= bound]
    for k in ks:
        for l in ls:
            u = (8 * k - 3) * (8 * l + 3)
            if abs(u) <= bound:
                out.add(u)
    return sorted(out)


def coverage_check(bound: int, a_bound: int = 22) -> dict[str, int]:
    """Round-trip every membership clause through witness construction.

    For each single-parameter clause and every parameter of absolute value
    at most `bound` (at most `a_bound` for both parameters of the
    two-parameter A clause), builds the witness and verifies its determinant
    equals the clause value.  Returns the number of verified witnesses per
    family name; any failure raises.
    """
    counts: dict[str, int] = {}

    def run(value: int) -> None:
        family = family_for(value)
        if family is None:
            raise AssertionError(f"no witness family for member value {value}")
        a = build(family)
        if det_group(a) != value:
            raise AssertionError(f"witness for {value} evaluates wrong")
        name = type(family).__name__
        counts[name] = counts.get(name, 0) + 1

    for m in range(-bound, bound + 1):
        run(16 * m + 1)
        run((1 << 16) * (4 * m + 1))
        run((1 << 24) * (4 * m + 1))
        run((1 << 24) * (8 * m + 3))
        run((1 << 26) * m)
    for k in range(-a_bound, a_bound + 1):
        for l in range(-a_bound, a_bound + 1):
            run((1 << 24) * (8 * k - 3) * (8 * l + 3))
    return counts
