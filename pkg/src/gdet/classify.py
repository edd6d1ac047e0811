"""Membership classification for the achievable-value sets of C2^2, C2^3, C2^4.

The achievable values of C2^4 are, with A = {(8k-3)(8l+3)}:

    16m+1,  2^16 (4m+1),  2^24 (4m+1),  2^24 (8m+3),  2^24 m' (m' in A),  2^26 m.

The families are distinguished by exact 2-adic valuation {0, 16, 24} or >= 26,
and within valuation 24 by the odd part mod 8 (1 or 5 / 3 / 7, mutually
exclusive).  The only non-trivial decision is whether an odd part u = 7 mod 8
lies in A; that is settled by a complete divisor search over the factorization
of u.  Negative inputs are fully supported; all residues are mathematical
(non-negative) remainders.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional, Union

from sympy import isprime

DEFAULT_FACTOR_CAP = 1 << 128

_TRIAL_LIMIT = 100_000
_small_primes: list[int] | None = None


class FactorizationInfeasibleError(Exception):
    """Raised when an odd part exceeds the factorization size policy."""


@dataclass(frozen=True)
class TwoAdicSplit:
    """v = 2^valuation * odd_part with odd_part odd (signed)."""

    valuation: int
    odd_part: int


def two_adic_split(v: int) -> TwoAdicSplit:
    """Maximal power of 2 dividing v, plus the signed odd cofactor."""
    if v == 0:
        raise ValueError("0 has no 2-adic valuation")
    w = (v & -v).bit_length() - 1
    return TwoAdicSplit(w, v >> w)


@dataclass(frozen=True)
class OddFactorization:
    """Sign and prime-power factorization of an odd integer."""

    sign: int
    prime_powers: tuple[tuple[int, int], ...]

    def reconstruct(self) -> int:
        out = self.sign
        for p, e in self.prime_powers:
            out *= p**e
        return out


def _sieve() -> list[int]:
    global _small_primes
    if _small_primes is None:
        flags = bytearray([1]) * (_TRIAL_LIMIT + 1)
        flags[0] = flags[1] = 0
        for i in range(2, int(_TRIAL_LIMIT**0.5) + 1):
            if flags[i]:
                flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
        _small_primes = [i for i in range(3, _TRIAL_LIMIT + 1) if flags[i]]
    return _small_primes


def _brent_rho(n: int, rng: random.Random) -> int:
    """A nontrivial factor of composite odd n (Brent's cycle variant)."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factor_odd(
    u: int,
    cap: int = DEFAULT_FACTOR_CAP,
    seed: Optional[int] = None,
) -> OddFactorization:
    """Complete prime factorization of an odd integer.

    Trial division below 10^5, then Brent-rho splitting with primality
    certification per cofactor.  Inputs with |u| > cap raise
    FactorizationInfeasibleError rather than risking an unbounded run.
    """
    if u == 0 or u % 2 == 0:
        raise ValueError(f"factor_odd needs an odd integer, got {u}")
    if abs(u) > cap:
        raise FactorizationInfeasibleError(
            f"|{u}| exceeds the factorization cap 2^{cap.bit_length() - 1}"
        )
    sign = 1 if u > 0 else -1
    rest = abs(u)
    found: dict[int, int] = {}
    for p in _sieve():
        if p * p > rest:
            break
        while rest % p == 0:
            found[p] = found.get(p, 0) + 1
            rest //= p
    rng = random.Random(seed)
    stack = [rest] if rest > 1 else []
    while stack:
        n = stack.pop()
        if isprime(n):
            found[n] = found.get(n, 0) + 1
            continue
        g = _brent_rho(n, rng)
        stack.append(g)
        stack.append(n // g)
    return OddFactorization(sign, tuple(sorted(found.items())))


def _divisors(f: OddFactorization) -> list[int]:
    divs = [1]
    for p, e in f.prime_powers:
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return divs


def is_in_A(
    u: int,
    cap: int = DEFAULT_FACTOR_CAP,
    seed: Optional[int] = None,
) -> Optional[tuple[int, int]]:
    """A representation u = (8k-3)(8l+3), or None if none exists.

    Every element of A is odd, so even or zero input returns None at once.
    Otherwise each signed divisor d of u is tested for d = 5 and u/d = 3
    (mod 8); among valid splits the one minimizing (|d|, d) is returned,
    which makes the output deterministic.
    """
    if u == 0 or u % 2 == 0:
        return None
    factorization = factor_odd(u, cap=cap, seed=seed)
    best: Optional[int] = None
    for d0 in _divisors(factorization):
        for d in (d0, -d0):
            if d % 8 == 5 and (u // d) % 8 == 3:
                if best is None or (abs(d), d) < (abs(best), best):
                    best = d
    if best is None:
        return None
    return ((best + 3) // 8, (u // best - 3) // 8)


@dataclass(frozen=True)
class Odd16m1:
    """Odd member 16m + 1."""

    m: int
    tag = "Odd16m1"
    member = True

    def value(self) -> int:
        return 16 * self.m + 1

    def describe(self) -> str:
        return f"Odd16m1 m={self.m}"


@dataclass(frozen=True)
class V16_4m1:
    """Member 2^16 (4m + 1)."""

    m: int
    tag = "V16_4m1"
    member = True

    def value(self) -> int:
        return (1 << 16) * (4 * self.m + 1)

    def describe(self) -> str:
        return f"V16_4m1 m={self.m}"


@dataclass(frozen=True)
class V24_4m1:
    """Member 2^24 (4m + 1)."""

    m: int
    tag = "V24_4m1"
    member = True

    def value(self) -> int:
        return (1 << 24) * (4 * self.m + 1)

    def describe(self) -> str:
        return f"V24_4m1 m={self.m}"


@dataclass(frozen=True)
class V24_8m3:
    """Member 2^24 (8m + 3)."""

    m: int
    tag = "V24_8m3"
    member = True

    def value(self) -> int:
        return (1 << 24) * (8 * self.m + 3)

    def describe(self) -> str:
        return f"V24_8m3 m={self.m}"


@dataclass(frozen=True)
class V24_A:
    """Member 2^24 (8k - 3)(8l + 3)."""

    k: int
    l: int
    tag = "V24_A"
    member = True

    def value(self) -> int:
        return (1 << 24) * (8 * self.k - 3) * (8 * self.l + 3)

    def describe(self) -> str:
        return f"V24_A k={self.k} l={self.l}"


@dataclass(frozen=True)
class V26:
    """Member 2^26 m (this clause covers 0 at m = 0)."""

    m: int
    tag = "V26"
    member = True

    def value(self) -> int:
        return (1 << 26) * self.m

    def describe(self) -> str:
        return f"V26 m={self.m}"


@dataclass(frozen=True)
class NotMember:
    """Non-member, with the violated constraint spelled out."""

    reason: str
    tag = "NotMember"
    member = False

    def describe(self) -> str:
        return f"NotMember: {self.reason}"


C24Class = Union[Odd16m1, V16_4m1, V24_4m1, V24_8m3, V24_A, V26, NotMember]


def classify_c24(
    v: int,
    factor_cap: int = DEFAULT_FACTOR_CAP,
    seed: Optional[int] = None,
) -> C24Class:
    """Decide membership of v in the achievable set of C2^4.

    Decision procedure: split v = 2^w * u (u odd) and branch on w.
    Factorization can only be needed in the w == 24, u = 7 (mod 8) branch,
    where FactorizationInfeasibleError propagates for oversized odd parts.
    """
    if v == 0:
        return V26(0)
    split = two_adic_split(v)
    w, u = split.valuation, split.odd_part
    if w == 0:
        if u % 16 == 1:
            return Odd16m1((u - 1) // 16)
        return NotMember(f"odd value, {u} != 1 (mod 16)")
    if w == 16:
        if u % 4 == 1:
            return V16_4m1((u - 1) // 4)
        return NotMember(f"valuation 16, odd part {u} != 1 (mod 4)")
    if w == 24:
        if u % 4 == 1:
            return V24_4m1((u - 1) // 4)
        if u % 8 == 3:
            return V24_8m3((u - 3) // 8)
        pair = is_in_A(u, cap=factor_cap, seed=seed)
        if pair is not None:
            return V24_A(*pair)
        return NotMember(
            f"valuation 24, odd part {u} = 7 (mod 8) but not of the form (8k-3)(8l+3)"
        )
    if w >= 26:
        return V26((1 << (w - 26)) * u)
    return NotMember(f"2-adic valuation {w} not in {{0, 16, 24}} and below 26")


@dataclass(frozen=True)
class LowRankClass:
    """Membership verdict for the C2^2 / C2^3 intro families."""

    member: bool
    clause: Optional[str] = None
    m: Optional[int] = None
    reason: Optional[str] = None

    def describe(self) -> str:
        if self.member:
            return f"{self.clause} m={self.m}"
        return f"NotMember: {self.reason}"


def classify_c22(v: int) -> LowRankClass:
    """Membership in {4m+1, 2^4 (2m+1), 2^6 m}."""
    if v == 0:
        return LowRankClass(True, "2^6 m", 0)
    if v % 4 == 1:
        return LowRankClass(True, "4m+1", (v - 1) // 4)
    split = two_adic_split(v)
    if split.valuation == 4:
        return LowRankClass(True, "2^4 (2m+1)", (split.odd_part - 1) // 2)
    if split.valuation >= 6:
        return LowRankClass(True, "2^6 m", v >> 6)
    return LowRankClass(
        False,
        reason=f"valuation {split.valuation}, odd part {split.odd_part}; no clause",
    )


def classify_c23(v: int) -> LowRankClass:
    """Membership in {8m+1, 2^8 (4m+1), 2^12 m}."""
    if v == 0:
        return LowRankClass(True, "2^12 m", 0)
    if v % 8 == 1:
        return LowRankClass(True, "8m+1", (v - 1) // 8)
    split = two_adic_split(v)
    if split.valuation == 8 and split.odd_part % 4 == 1:
        return LowRankClass(True, "2^8 (4m+1)", (split.odd_part - 1) // 4)
    if split.valuation >= 12:
        return LowRankClass(True, "2^12 m", v >> 12)
    return LowRankClass(
        False,
        reason=f"valuation {split.valuation}, odd part {split.odd_part}; no clause",
    )


def odd_class_c2n(n: int, v: int) -> bool:
    """Whether the odd integer v is an achievable odd value of C2^n (v = 1 mod 2^n)."""
    if v % 2 == 0:
        raise ValueError(f"odd_class_c2n needs an odd value, got {v}")
    return v % (1 << n) == 1
