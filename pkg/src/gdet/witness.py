"""Explicit 16-entry assignments realizing every achievable value of C2^4.

Each family below is a parametric tuple whose determinant has a known closed
form; together they cover all membership clauses.  Values 2^24 (8m+3) and
2^24 (8k-3)(8l+3) are both reached through the two-parameter family F4,
whose determinant is 2^24 (4m+1)(8n+3); the identity 8k-3 = 4(2k-1)+1
turns the A-form into an F4 instance.  Every constructed witness is
re-evaluated before being returned; a mismatch would be a transcription
bug, not a math error, and raises immediately.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from gdet.classify import (
    DEFAULT_FACTOR_CAP,
    NotMember,
    Odd16m1,
    V16_4m1,
    V24_4m1,
    V24_8m3,
    V24_A,
    V26,
    classify_c24,
)
from gdet.core import Assignment, det_group


@dataclass(frozen=True)
class F1:
    """(m+1, m, ..., m) with determinant 16m + 1."""

    m: int

    def target(self) -> int:
        return 16 * self.m + 1

    def tuple_values(self) -> tuple[int, ...]:
        m = self.m
        return (m + 1,) + (m,) * 15


@dataclass(frozen=True)
class F2a:
    """(k+2, k, ..., k) with determinant 2^16 (8k + 1)."""

    k: int

    def target(self) -> int:
        return (1 << 16) * (8 * self.k + 1)

    def tuple_values(self) -> tuple[int, ...]:
        k = self.k
        return (k + 2,) + (k,) * 15


@dataclass(frozen=True)
class F2b:
    """A mixed-sign tuple with determinant 2^16 (8k - 3)."""

    k: int

    def target(self) -> int:
        return (1 << 16) * (8 * self.k - 3)

    def tuple_values(self) -> tuple[int, ...]:
        k = self.k
        return (
            1 - k, k, 1 - k, k,
            -k, k, 1 - k, k - 1,
            1 - k, k, -k, k - 1,
            -k, k, -k, k,
        )


@dataclass(frozen=True)
class F3:
    """(m+3, m+1, m, ..., m) with determinant 2^24 (4m + 1)."""

    m: int

    def target(self) -> int:
        return (1 << 24) * (4 * self.m + 1)

    def tuple_values(self) -> tuple[int, ...]:
        m = self.m
        return (m + 3, m + 1) + (m,) * 14


@dataclass(frozen=True)
class F4:
    """Two-parameter family with determinant 2^24 (4m + 1)(8n + 3)."""

    m: int
    n: int

    def target(self) -> int:
        return (1 << 24) * (4 * self.m + 1) * (8 * self.n + 3)

    def tuple_values(self) -> tuple[int, ...]:
        m, n = self.m, self.n
        tail = (m - n - 1, -(m + n), m + n + 1, n - m)
        return (m - n + 2, -(m + n + 1), m + n + 1, n - m) + tail * 3


@dataclass(frozen=True)
class F5even:
    """Family with determinant 2^26 (2k)."""

    k: int

    def target(self) -> int:
        return (1 << 26) * (2 * self.k)

    def tuple_values(self) -> tuple[int, ...]:
        k = self.k
        return (
            k + 1, 1 - k, k + 1, -k,
            k - 1, -k, k + 1, -k,
            k, -k, k + 1, -k,
            k - 2, 1 - k, k + 1, -k,
        )


@dataclass(frozen=True)
class F5odd:
    """Family with determinant 2^26 (2k + 1)."""

    k: int

    def target(self) -> int:
        return (1 << 26) * (2 * self.k + 1)

    def tuple_values(self) -> tuple[int, ...]:
        k = self.k
        return (k - 1, k + 1, k + 1, k + 2, k + 1, k + 2, k + 2, k) + (k,) * 8


WitnessFamily = Union[F1, F2a, F2b, F3, F4, F5even, F5odd]


def build(family: WitnessFamily) -> Assignment:
    """The rank-4 assignment of the family, verified against its closed form."""
    a = Assignment(4, family.tuple_values())
    got = det_group(a)
    if got != family.target():
        raise RuntimeError(
            f"witness family {family!r} evaluated to {got}, expected {family.target()}"
        )
    return a


def family_for(
    v: int,
    factor_cap: int = DEFAULT_FACTOR_CAP,
    seed: Optional[int] = None,
) -> Optional[WitnessFamily]:
    """The witness family realizing v, or None when v is not achievable."""
    verdict = classify_c24(v, factor_cap=factor_cap, seed=seed)
    match verdict:
        case NotMember():
            return None
        case Odd16m1(m=m):
            return F1(m)
        case V16_4m1(m=m):
            u = 4 * m + 1
            if u % 8 == 1:
                return F2a((u - 1) // 8)
            return F2b((u + 3) // 8)
        case V24_4m1(m=m):
            return F3(m)
        case V24_8m3(m=m):
            return F4(0, m)
        case V24_A(k=k, l=l):
            # 8k - 3 = 4(2k - 1) + 1
            return F4(2 * k - 1, l)
        case V26(m=m):
            if m % 2 == 0:
                return F5even(m // 2)
            return F5odd((m - 1) // 2)
    raise AssertionError(f"unhandled verdict {verdict!r}")


def witness_for(
    v: int,
    factor_cap: int = DEFAULT_FACTOR_CAP,
    seed: Optional[int] = None,
) -> Optional[Assignment]:
    """A 16-entry assignment with determinant exactly v, or None if v is not achievable."""
    family = family_for(v, factor_cap=factor_cap, seed=seed)
    if family is None:
        return None
    a = build(family)
    if det_group(a) != v:
        raise RuntimeError(f"witness for {v} dispatched to the wrong family {family!r}")
    return a
