"""Independent oracles and hypothesis strategies shared across test modules.

Everything here is deliberately written from scratch, against different
characterizations than the library uses, so the two sides can check each
other.
"""

from __future__ import annotations

import itertools

from hypothesis import strategies as st

from semple.codeword import CodeWord, validate


def blockwise_valid(symbols: tuple[tuple[int, ...], ...], m: int) -> bool:
    """Validity by the block characterization instead of the grammar rules:
    first symbol empty, every set smaller than m, and the occurrences of
    each j forming a consecutive run starting at position j."""
    k = len(symbols)
    if k == 0 or symbols[0]:
        return False
    if any(len(a) >= m for a in symbols):
        return False
    values = {j for a in symbols for j in a}
    for j in values:
        positions = [p for p in range(1, k + 1) if j in symbols[p - 1]]
        if positions != list(range(j, j + len(positions))):
            return False
    return True


def brute_count(k: int, m: int) -> int:
    """Count words by filtering every candidate multiplicity vector, without
    touching the recurrence or the enumerator."""
    ranges = [range(k + 2 - j) for j in range(2, k + 1)]
    total = 0
    for ns in itertools.product(*ranges):
        ok = True
        for p in range(1, k + 1):
            size = sum(1 for j, n in zip(range(2, k + 1), ns) if j <= p <= j + n - 1)
            if size >= m:
                ok = False
                break
        total += ok
    return total


# Succession rules of the RVT code, restated for an independent enumerator.
_RVT_NEXT = {
    "R": ("R", "V"),
    "V": ("R", "V", "T1", "L1"),
    "T1": ("R", "V", "T1", "L1"),
    "T2": ("R", "V", "T2", "L3"),
    "L1": ("R", "V", "T1", "T2", "L1", "L2", "L3"),
    "L2": ("R", "V", "T1", "T2", "L1", "L2", "L3"),
    "L3": ("R", "V", "T1", "T2", "L1", "L2", "L3"),
}


def all_rvt_words(k: int) -> list[tuple[str, ...]]:
    """Every valid RVT word of length k, by direct search."""
    words: list[tuple[str, ...]] = []
    stack = ["R"]

    def go() -> None:
        if len(stack) == k:
            words.append(tuple(stack))
            return
        for tag in _RVT_NEXT[stack[-1]]:
            stack.append(tag)
            go()
            stack.pop()

    go()
    return words


def reachable_from(n: int, adjacency: dict[int, list[int]], start: int) -> set[int]:
    """Vertices reachable from start (start included)."""
    seen = {start}
    frontier = [start]
    while frontier:
        node = frontier.pop()
        for nxt in adjacency.get(node, []):
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen


@st.composite
def word_at(draw, k: int, m: int) -> CodeWord:
    """A uniform-ish valid word of exactly this shape, built symbol by symbol."""
    symbols: list[tuple[int, ...]] = [()]
    for j in range(2, k + 1):
        pool = sorted(set(symbols[-1]) | {j})
        subset = draw(st.sets(st.sampled_from(pool), max_size=min(len(pool), m - 1)))
        symbols.append(tuple(sorted(subset)))
    return validate(symbols, m)


@st.composite
def valid_words(draw, max_k: int = 7, min_m: int = 2, max_m: int = 5) -> CodeWord:
    m = draw(st.integers(min_m, max_m))
    k = draw(st.integers(1, max_k))
    return draw(word_at(k, m))


@st.composite
def word_triples(draw, max_k: int = 6) -> tuple[CodeWord, CodeWord, CodeWord]:
    """Three words on the same space, for order-axiom tests."""
    m = draw(st.integers(2, 4))
    k = draw(st.integers(1, max_k))
    return tuple(draw(word_at(k, m)) for _ in range(3))
