"""Exact evaluation of the group determinant of C2^n.

The group C2^n is encoded by bit strings: the element (e0, ..., e_{n-1})
corresponds to the index j = sum(e_i * 2^i), and the group operation is
bitwise XOR (every element is an involution).  The group matrix is then
M[g][h] = x[g ^ h], and the determinant factors into the product of the
2^n signed character sums

    chi-th component = sum_j (-1)^popcount(j & chi) * x[j],

which a butterfly transform computes in n * 2^n additions.  A fraction-free
(Bareiss) elimination over exact integers serves as an independent oracle.
All arithmetic is arbitrary-precision Python int; nothing here can overflow.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

DEFAULT_RANK_CAP = 8
DEFAULT_ORACLE_CAP = 6


def rank_cap() -> int:
    """Maximum accepted rank; override with the GDET_MAX_RANK env var."""
    raw = os.environ.get("GDET_MAX_RANK")
    if raw:
        return int(raw)
    return DEFAULT_RANK_CAP


@dataclass(frozen=True)
class Assignment:
    """A rank n together with the 2^n integer values x_0, ..., x_{2^n - 1}."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"rank must be a non-negative integer, got {self.n!r}")
        cap = rank_cap()
        if self.n > cap:
            raise ValueError(f"rank {self.n} exceeds cap {cap}")
        vals = tuple(int(v) for v in self.values)
        if len(vals) != 1 << self.n:
            raise ValueError(
                f"rank {self.n} needs {1 << self.n} values, got {len(vals)}"
            )
        object.__setattr__(self, "values", vals)


def character_transform(a: Assignment) -> tuple[int, ...]:
    """All 2^n signed character sums of the assignment, via the butterfly."""
    out = list(a.values)
    for s in range(a.n):
        h = 1 << s
        for base in range(0, len(out), h << 1):
            for j in range(base, base + h):
                out[j], out[j + h] = out[j] + out[j + h], out[j] - out[j + h]
    return tuple(out)


def det_group(a: Assignment) -> int:
    """The group determinant: the product of all character sums."""
    det = 1
    for c in character_transform(a):
        det *= c
    return det


def det_matrix_oracle(a: Assignment, cap: int = DEFAULT_ORACLE_CAP) -> int:
    """The same determinant, from the XOR group matrix by Bareiss elimination.

    Exists solely as an independent correctness witness for det_group; it is
    O(2^{3n}) and capped at rank `cap` to bound memory.
    """
    if a.n > cap:
        raise ValueError(f"matrix oracle capped at rank {cap}, got {a.n}")
    size = 1 << a.n
    m = [[a.values[g ^ h] for h in range(size)] for g in range(size)]
    return _bareiss(m)


def _bareiss(m: list[list[int]]) -> int:
    """Fraction-free elimination; every division below is exact."""
    size = len(m)
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for i in range(k + 1, size):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[size - 1][size - 1]


def factor_step(a: Assignment) -> tuple[Assignment, Assignment]:
    """One factorization step: D_n(x) = D_{n-1}(plus) * D_{n-1}(minus).

    plus/minus are the half-length sums and differences x_j +/- x_{j + 2^{n-1}}.
    """
    if a.n < 1:
        raise ValueError("rank-zero assignment cannot be factored")
    h = 1 << (a.n - 1)
    plus = tuple(a.values[j] + a.values[j + h] for j in range(h))
    minus = tuple(a.values[j] - a.values[j + h] for j in range(h))
    return Assignment(a.n - 1, plus), Assignment(a.n - 1, minus)


@dataclass(frozen=True)
class FactorTree:
    """Binary factorization tree; leaves are rank <= 1 evaluations."""

    rank: int
    values: tuple[int, ...]
    value: int
    children: tuple["FactorTree", ...] = field(default=())

    @property
    def is_leaf(self) -> bool:
        return not self.children


def factor_tree(a: Assignment) -> FactorTree:
    """Full recursive factorization of det_group(a) down to D_1 (or D_0) leaves."""
    value = det_group(a)
    if a.n <= 1:
        return FactorTree(a.n, a.values, value)
    plus, minus = factor_step(a)
    return FactorTree(a.n, a.values, value, (factor_tree(plus), factor_tree(minus)))


def d2_closed_form(x0: int, x1: int, x2: int, x3: int) -> int:
    """D_2 as a symmetric quartic: sum x_i^4 - 2 sum x_i^2 x_j^2 + 8 x0 x1 x2 x3."""
    xs = (x0, x1, x2, x3)
    quartic = sum(x**4 for x in xs)
    cross = sum(xs[i] ** 2 * xs[j] ** 2 for i in range(4) for j in range(i + 1, 4))
    return quartic - 2 * cross + 8 * x0 * x1 * x2 * x3


@dataclass(frozen=True)
class BcdeQuad:
    """The four derived quadruples splitting D_4 into four D_2 factors."""

    b: tuple[int, int, int, int]
    c: tuple[int, int, int, int]
    d: tuple[int, int, int, int]
    e: tuple[int, int, int, int]

    def quads(self) -> tuple[tuple[int, int, int, int], ...]:
        return (self.b, self.c, self.d, self.e)

    def d2_product(self) -> int:
        prod = 1
        for q in self.quads():
            prod *= d2_closed_form(*q)
        return prod


def bcde_decompose(a: Assignment) -> BcdeQuad:
    """Split a rank-4 assignment into the b/c/d/e quadruples.

    D_4(a) equals the product of the four D_2 values of the result, and for
    each i the four entries b_i, c_i, d_i, e_i agree mod 2 and sum to a
    multiple of 4 (their sum is exactly 4 * a_i).
    """
    if a.n != 4:
        raise ValueError(f"bcde decomposition needs rank 4, got {a.n}")
    v = a.values
    b = tuple((v[i] + v[i + 8]) + (v[i + 4] + v[i + 12]) for i in range(4))
    c = tuple((v[i] + v[i + 8]) - (v[i + 4] + v[i + 12]) for i in range(4))
    d = tuple((v[i] - v[i + 8]) + (v[i + 4] - v[i + 12]) for i in range(4))
    e = tuple((v[i] - v[i + 8]) - (v[i + 4] - v[i + 12]) for i in range(4))
    return BcdeQuad(b, c, d, e)
