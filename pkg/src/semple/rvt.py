"""The legacy RVT code for the m = 3 tower.

Words over the seven tags R, V, T1, T2, L1, L2, L3 are constrained by
succession rules (which tag may follow which), and correspond one-to-one
with subscript code words over base dimension 3.  The correspondence is a
left-to-right state machine: which subscript set a tag denotes depends on
the previous tag and the previous subscript set, via one table per class of
previous tag.  Writing pos for the current position, i < j for the elements
of the previous subscript set:

    after R:              R -> {}    V -> {pos}
    after V or T1:        R -> {}    V -> {pos}   T1 -> {j}   L1 -> {j,pos}
    after T2:             R -> {}    V -> {pos}   T2 -> {j}   L3 -> {j,pos}
    after L1, L2, or L3:  R -> {}    V -> {pos}   T1 -> {j}   T2 -> {i}
                          L1 -> {j,pos}   L2 -> {i,j}   L3 -> {i,pos}

V, T1, T2 always denote singletons and L1, L2, L3 doubletons, which is why
the code exists only for m = 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from semple.codeword import CodeWord, Subscripts, validate

__all__ = [
    "ALPHABET",
    "RvtWord",
    "RvtError",
    "validate_rvt",
    "parse_rvt",
    "rvt_to_subscript",
    "subscript_to_rvt",
]

ALPHABET = ("R", "V", "T1", "T2", "L1", "L2", "L3")

_NEXT_ALLOWED = {
    "R": frozenset({"R", "V"}),
    "V": frozenset({"R", "V", "T1", "L1"}),
    "T1": frozenset({"R", "V", "T1", "L1"}),
    "T2": frozenset({"R", "V", "T2", "L3"}),
    "L1": frozenset(ALPHABET),
    "L2": frozenset(ALPHABET),
    "L3": frozenset(ALPHABET),
}


class RvtError(ValueError):
    """Raised for sequences breaking the RVT succession rules."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (position {position})")
        self.position = position


@dataclass(frozen=True)
class RvtWord:
    """A validated RVT word; construct through validate_rvt or parse_rvt."""

    symbols: tuple[str, ...]

    @property
    def k(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return " ".join(self.symbols)

    def as_dict(self) -> dict:
        return {"rvt": list(self.symbols)}


def validate_rvt(symbols: Sequence[str]) -> RvtWord:
    """Check the succession rules, reporting the first offending pair."""
    if not symbols:
        raise ValueError("word must be nonempty")
    for pos, tag in enumerate(symbols, start=1):
        if tag not in _NEXT_ALLOWED:
            raise RvtError(f"unknown symbol {tag!r}", pos)
    if symbols[0] != "R":
        raise RvtError("first symbol must be R", 1)
    for i in range(1, len(symbols)):
        prev, cur = symbols[i - 1], symbols[i]
        if cur not in _NEXT_ALLOWED[prev]:
            raise RvtError(f"{cur} may not follow {prev}", i + 1)
    return RvtWord(tuple(symbols))


def parse_rvt(text: str) -> RvtWord:
    """Parse the whitespace-separated text form, e.g. "R V T1 L1"."""
    return validate_rvt(tuple(text.split()))


def _table(prev_tag: str | None, prev_sub: Subscripts, pos: int) -> dict[str, Subscripts]:
    if prev_tag is None or prev_tag == "R":
        return {"R": (), "V": (pos,)}
    if prev_tag in ("V", "T1"):
        (j,) = prev_sub
        return {"R": (), "V": (pos,), "T1": (j,), "L1": (j, pos)}
    if prev_tag == "T2":
        (j,) = prev_sub
        return {"R": (), "V": (pos,), "T2": (j,), "L3": (j, pos)}
    i, j = prev_sub
    return {
        "R": (),
        "V": (pos,),
        "T1": (j,),
        "T2": (i,),
        "L1": (j, pos),
        "L2": (i, j),
        "L3": (i, pos),
    }


def rvt_to_subscript(w: RvtWord) -> CodeWord:
    """Translate an RVT word into the equivalent m = 3 subscript word."""
    symbols: list[Subscripts] = []
    prev_tag: str | None = None
    prev_sub: Subscripts = ()
    for pos, tag in enumerate(w.symbols, start=1):
        table = _table(prev_tag, prev_sub, pos)
        if tag not in table:
            raise RvtError(f"{tag} cannot appear here", pos)
        sub = table[tag]
        symbols.append(sub)
        prev_tag, prev_sub = tag, sub
    return validate(symbols, 3)


def subscript_to_rvt(w: CodeWord) -> RvtWord:
    """Translate an m = 3 subscript word back into RVT tags.

    Each translation table is injective, so reading left to right and
    inverting the table selected by the already-translated previous tag is
    deterministic.
    """
    if w.m != 3:
        raise ValueError(f"the RVT code is defined for dimension 3, got m={w.m}")
    tags: list[str] = []
    prev_tag: str | None = None
    prev_sub: Subscripts = ()
    for pos, sub in enumerate(w.symbols, start=1):
        inverse = {s: t for t, s in _table(prev_tag, prev_sub, pos).items()}
        tag = inverse.get(sub)
        if tag is None:
            raise ValueError(f"no RVT symbol for subscript {sub} at position {pos}")
        tags.append(tag)
        prev_tag, prev_sub = tag, sub
    return RvtWord(tuple(tags))
