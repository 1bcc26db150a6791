"""Code words labeling strata of the monster (Semple) tower.

A word of length k over base dimension m is a sequence of subscript sets
A_1 ... A_k, written V_{A} per symbol, with the empty set abbreviated R.
Three rules make a word valid:

1. the first symbol is R;
2. each A_j is contained in A_{j-1} together with {j}, so an integer can
   only enter a subscript at the position equal to itself;
3. every A_j has fewer than m elements.

A consequence of rules 1 and 2 is that the positions where j occurs form a
consecutive block starting at position j.  Recording the block lengths
n_2 ... n_k (the multiplicity vector) therefore encodes the word exactly,
and is the representation most other modules work with.

Text syntax: tokens "R", "V{2}", "V{2,14}" separated by whitespace or ".".
Subscripts inside braces are strictly increasing; "V{}" is an alias for R.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "CodeWord",
    "MultiplicityVector",
    "Violation",
    "InvalidWordError",
    "WordSyntaxError",
    "validate",
    "violations",
    "multiplicities",
    "from_multiplicities",
    "enumerate_words",
    "parse_word",
    "format_word",
]

Subscripts = tuple[int, ...]


@dataclass(frozen=True)
class Violation:
    """One broken grammar rule, located at a 1-indexed word position."""

    rule: int
    position: int
    message: str

    def __str__(self) -> str:
        return f"rule {self.rule} at position {self.position}: {self.message}"


class WordSyntaxError(ValueError):
    """Raised by parse_word on text that does not scan.

    The ``position`` attribute is the 0-based character offset of the
    offending token.
    """

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (character {position})")
        self.position = position


class InvalidWordError(ValueError):
    """Raised when a symbol sequence breaks the word grammar.

    Carries the full list of violations, one per broken rule and position.
    """

    def __init__(self, violations: Sequence[Violation]) -> None:
        super().__init__("; ".join(str(v) for v in violations))
        self.violations = list(violations)


@dataclass(frozen=True)
class CodeWord:
    """A stratum label: subscript sets A_1 ... A_k plus the base dimension m.

    Construct through validate(), parse_word(), or from_multiplicities();
    direct construction skips the grammar checks.
    """

    symbols: tuple[Subscripts, ...]
    m: int

    @property
    def k(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return format_word(self)

    def as_dict(self) -> dict:
        return {"m": self.m, "symbols": [list(a) for a in self.symbols]}


@dataclass(frozen=True)
class MultiplicityVector:
    """Occurrence counts n_j of each subscript j = 2 ... k in a length-k word.

    n_1 is 0 by convention, and a j that never occurs has n_j = 0.
    """

    k: int
    counts: tuple[int, ...]  # counts[i] is n_{i+2}

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"word length must be >= 1, got {self.k}")
        if len(self.counts) != self.k - 1:
            raise ValueError(
                f"expected {self.k - 1} counts for k={self.k}, got {len(self.counts)}"
            )
        if any(n < 0 for n in self.counts):
            raise ValueError("multiplicities must be nonnegative")

    def n(self, j: int) -> int:
        """n_j for j in 1..k (n_1 is identically 0)."""
        if j == 1:
            return 0
        if not 2 <= j <= self.k:
            raise IndexError(f"j={j} outside 2..{self.k}")
        return self.counts[j - 2]

    def items(self) -> Iterator[tuple[int, int]]:
        """Pairs (j, n_j) for j = 2 ... k, in increasing j."""
        for j in range(2, self.k + 1):
            yield j, self.counts[j - 2]


def _normalize(symbol: Iterable[int]) -> Subscripts:
    elems = sorted(set(symbol))
    for x in elems:
        if not isinstance(x, int) or isinstance(x, bool):
            raise TypeError(f"subscript elements must be integers, got {x!r}")
    return tuple(elems)


def _format_symbol(a: Subscripts) -> str:
    if not a:
        return "R"
    return "V{" + ",".join(str(j) for j in a) + "}"


def violations(symbols: Sequence[Iterable[int]], m: int) -> list[Violation]:
    """Check the three grammar rules, reporting every failure with its position."""
    if m < 2:
        raise ValueError(f"base dimension must be >= 2, got {m}")
    if not symbols:
        raise ValueError("word must be nonempty")
    norm = [_normalize(a) for a in symbols]
    found: list[Violation] = []
    if norm[0]:
        found.append(
            Violation(1, 1, f"first symbol must be R, got {_format_symbol(norm[0])}")
        )
    for j in range(2, len(norm) + 1):
        prev, cur = norm[j - 2], norm[j - 1]
        extra = sorted(set(cur) - set(prev) - {j})
        if extra:
            found.append(
                Violation(
                    2,
                    j,
                    f"{_format_symbol(cur)} may not follow {_format_symbol(prev)}:"
                    f" subscripts {extra} cannot enter at position {j}",
                )
            )
    for j, cur in enumerate(norm, start=1):
        if len(cur) >= m:
            found.append(
                Violation(
                    3,
                    j,
                    f"{_format_symbol(cur)} has {len(cur)} subscripts;"
                    f" at most {m - 1} allowed when m={m}",
                )
            )
    return found


def validate(symbols: Sequence[Iterable[int]], m: int) -> CodeWord:
    """Return the validated word, or raise InvalidWordError listing every violation."""
    found = violations(symbols, m)
    if found:
        raise InvalidWordError(found)
    return CodeWord(tuple(_normalize(a) for a in symbols), m)


def multiplicities(w: CodeWord) -> MultiplicityVector:
    """Count how many times each j = 2 ... k occurs as a subscript of w."""
    counts = [0] * (w.k - 1)
    for a in w.symbols:
        for j in a:
            counts[j - 2] += 1
    return MultiplicityVector(w.k, tuple(counts))


def from_multiplicities(v: MultiplicityVector, m: int) -> CodeWord:
    """Rebuild the word whose subscript blocks have the given lengths.

    Inverse of multiplicities().  Raises ValueError when some block does not
    fit in the word, and InvalidWordError when the rebuilt word breaks rule 3.
    """
    for j, n in v.items():
        if n > v.k + 1 - j:
            raise ValueError(
                f"n_{j}={n} does not fit in a word of length {v.k}"
                f" (at most {v.k + 1 - j})"
            )
    symbols = []
    for p in range(1, v.k + 1):
        symbols.append(tuple(j for j, n in v.items() if j <= p <= j + n - 1))
    return validate(symbols, m)


def _successors(prev: Subscripts, j: int, m: int) -> Iterator[Subscripts]:
    # Candidate subscript sets at position j, by size then lexicographically.
    pool = tuple(sorted(set(prev) | {j}))
    for size in range(min(len(pool), m - 1) + 1):
        yield from itertools.combinations(pool, size)


def enumerate_words(k: int, m: int) -> Iterator[CodeWord]:
    """Yield every valid (k, m) word exactly once, in a fixed order.

    Positions are extended left to right; at each position the candidate
    subscript sets are tried by size, then lexicographically.  The order is
    part of the interface ("R R R" before "R R V{3}" before "R V{2} R" ...),
    and the stream uses memory proportional to k, not to the output size.
    """
    if k < 1:
        raise ValueError(f"word length must be >= 1, got {k}")
    if m < 2:
        raise ValueError(f"base dimension must be >= 2, got {m}")

    prefix: list[Subscripts] = [()]

    def extend() -> Iterator[CodeWord]:
        if len(prefix) == k:
            yield CodeWord(tuple(prefix), m)
            return
        j = len(prefix) + 1
        for b in _successors(prefix[-1], j, m):
            prefix.append(b)
            yield from extend()
            prefix.pop()

    yield from extend()


_TOKEN = re.compile(r"R|V\{(\d+(?:,\d+)*)?\}")
_SEPARATORS = frozenset(" \t\n\r\f\v.")


def parse_word(text: str, m: int) -> CodeWord:
    """Parse and validate the text form of a word.

    Grammar: tokens "R" or "V{...}" separated by whitespace or ".", with
    strictly increasing decimal subscripts inside braces.  "V{}" is accepted
    as an alias for R.
    """
    symbols: list[Subscripts] = []
    pos, end = 0, len(text)
    while pos < end:
        if text[pos] in _SEPARATORS:
            pos += 1
            continue
        match = _TOKEN.match(text, pos)
        if match is None:
            raise WordSyntaxError(f"unrecognized token {text[pos : pos + 8]!r}", pos)
        if match.end() < end and text[match.end()] not in _SEPARATORS:
            raise WordSyntaxError("expected a separator after token", match.end())
        if match.group(0) == "R" or match.group(1) is None:
            symbols.append(())
        else:
            elems = tuple(int(x) for x in match.group(1).split(","))
            if any(b <= a for a, b in zip(elems, elems[1:])):
                raise WordSyntaxError(
                    "subscripts inside braces must be strictly increasing", pos
                )
            symbols.append(elems)
        pos = match.end()
    if not symbols:
        raise WordSyntaxError("empty word", 0)
    return validate(symbols, m)


def format_word(w: CodeWord) -> str:
    """Canonical text form: symbols joined by single spaces."""
    return " ".join(_format_symbol(a) for a in w.symbols)
