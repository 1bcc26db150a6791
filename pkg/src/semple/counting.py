"""Exact word counts, stratified by the size of the last subscript.

N(k, r) counts the length-k words whose final subscript set has r elements.
Appending one symbol to a word counted by N(k-1, i) means choosing r
subscripts out of the i+1 available, which gives the recurrence

    N(k, r) = sum over i of C(i+1, r) * N(k-1, i),      1 <= r <= m-1,
    N(k, 0) = total number of words of length k-1,

seeded with N(1, 0) = 1.  For k <= m the numbers coincide with the unsigned
Stirling numbers of the first kind, c(k, r+1); stirling_first computes those
by their own recurrence so the two can be checked against each other.

Counts grow super-exponentially (the total is k! once m >= k), so everything
here is plain Python integers, which are exact at any size.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

__all__ = ["CountTable", "count_table", "count", "stirling_first"]


@dataclass(frozen=True)
class CountTable:
    """Counts at one level: entries[r] is N(k, r) for r = 0 ... m-1."""

    k: int
    m: int
    entries: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.entries)

    def as_dict(self) -> dict:
        # The total is a decimal string so consumers with fixed-width
        # integers cannot silently truncate it.
        return {"k": self.k, "m": self.m, "N": list(self.entries), "total": str(self.total)}


def count_table(k: int, m: int) -> CountTable:
    """Run the recurrence up to level k for base dimension m."""
    if k < 1:
        raise ValueError(f"level must be >= 1, got {k}")
    if m < 2:
        raise ValueError(f"base dimension must be >= 2, got {m}")
    row = [1] + [0] * (m - 1)
    for _ in range(k - 1):
        row = [sum(row)] + [
            sum(comb(i + 1, r) * row[i] for i in range(r - 1, m)) for r in range(1, m)
        ]
    return CountTable(k, m, tuple(row))


def count(k: int, m: int) -> int:
    """Number of valid length-k words over base dimension m."""
    return count_table(k, m).total


def stirling_first(n: int, j: int) -> int:
    """Unsigned Stirling number of the first kind c(n, j).

    Computed by the classical two-term recurrence, independently of the word
    recurrence above; used as a cross-check oracle.
    """
    if n < 0 or j < 0:
        raise ValueError("arguments must be nonnegative")
    if j > n:
        return 0
    row = [1]  # c(0, *)
    for i in range(1, n + 1):
        row = [0] + [
            (i - 1) * (row[t] if t < len(row) else 0) + row[t - 1]
            for t in range(1, i + 1)
        ]
    return row[j]
