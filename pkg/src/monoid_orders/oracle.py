"""Independent brute-force ground truth over small prime fields.

Nothing here touches the polynomial formulas: ranks come from Gaussian
elimination, rank strata from exhaustive matrix enumeration, and subspace
counts from literal span-set closure.  Cross-checking these counts against
the q-polynomial evaluations validates the whole formula stack with zero
shared code.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import EnumerationTooLarge, IndexOutOfRange, NonPrimeModulus

DEFAULT_MATRIX_BOUND = 10**8
DEFAULT_VECTOR_BOUND = 2**16


def _require_prime(p: int) -> None:
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise NonPrimeModulus(f"{p} is not prime")


@dataclass(frozen=True)
class PrimeFieldMatrix:
    n: int
    p: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.n or any(
            len(row) != self.n for row in self.entries
        ):
            raise ValueError(f"expected {self.n}x{self.n} entries")
        if any(not 0 <= x < self.p for row in self.entries for x in row):
            raise ValueError("entries must lie in [0, p)")


def _row_rank(rows: list[list[int]], p: int) -> int:
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if rows[i][c] % p), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == n_rows:
            break
    return r


def rank(m: PrimeFieldMatrix) -> int:
    """Row rank over the p-element field, by Gaussian elimination."""
    _require_prime(m.p)
    return _row_rank([list(row) for row in m.entries], m.p)


@dataclass
class RankHistogram:
    n: int
    p: int
    counts: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def enumerate_rank_histogram(
    n: int, p: int, bound: int | None = None
) -> RankHistogram:
    """Rank counts over all p^(n^2) matrices, by exhaustive enumeration."""
    _require_prime(p)
    if bound is None:
        bound = DEFAULT_MATRIX_BOUND
    total = p ** (n * n)
    if total > bound:
        raise EnumerationTooLarge(f"p^(n^2) = {total} exceeds the bound {bound}")
    counts = {r: 0 for r in range(n + 1)}
    all_rows = list(itertools.product(range(p), repeat=n))
    for rows in itertools.product(all_rows, repeat=n):
        counts[_row_rank([list(r) for r in rows], p)] += 1
    return RankHistogram(n, p, counts)


def count_subspaces(n: int, r: int, p: int, bound: int | None = None) -> int:
    """Number of r-dimensional subspaces of the n-dimensional space over F_p.

    Subspaces are materialized as frozensets of vectors and grown one
    dimension at a time by span closure, so the count is formula-free.
    """
    _require_prime(p)
    if r < 0 or r > n:
        raise IndexOutOfRange(f"need 0 <= r <= n, got n={n}, r={r}")
    if bound is None:
        bound = DEFAULT_VECTOR_BOUND
    if p**n > bound:
        raise EnumerationTooLarge(f"p^n = {p ** n} exceeds the bound {bound}")
    vectors = list(itertools.product(range(p), repeat=n))
    zero = (0,) * n
    level: set[frozenset] = {frozenset({zero})}
    for _ in range(r):
        bigger: set[frozenset] = set()
        for space in level:
            for v in vectors:
                if v in space:
                    continue
                span = frozenset(
                    tuple((s[i] + c * v[i]) % p for i in range(n))
                    for s in space
                    for c in range(p)
                )
                bigger.add(span)
        level = bigger
    return len(level)
