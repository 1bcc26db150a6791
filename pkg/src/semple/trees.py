"""Increasing trees on {0, ..., k} and their correspondence with words.

An increasing tree is rooted at 0 with every parent label smaller than its
child's.  A length-k word maps to one by hanging vertex 1 off the root and,
for v >= 2, hanging vertex v off vertex v - 1 - n_{k+2-v}; the map is a
bijection with all k! trees as soon as m >= k.  For smaller m the word side
shrinks (rule 3 bites) while every word still maps to a tree, so the
reverse direction is partial and raises when the rebuilt word needs
subscript sets of size m or more.  The degree of the root always equals the
size of the word's last subscript set plus one.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterator

from semple.codeword import CodeWord, MultiplicityVector, from_multiplicities, multiplicities

__all__ = [
    "IncreasingTree",
    "word_to_tree",
    "tree_to_word",
    "enumerate_trees",
    "parse_tree",
]


@dataclass(frozen=True)
class IncreasingTree:
    """Rooted tree on vertices 0..k; parent[v-1] is the parent of vertex v."""

    parent: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parent:
            raise ValueError("tree needs at least vertices 0 and 1")
        for v, p in enumerate(self.parent, start=1):
            if not 0 <= p < v:
                raise ValueError(f"parent of {v} must lie in 0..{v - 1}, got {p}")

    @property
    def k(self) -> int:
        return len(self.parent)

    def root_degree(self) -> int:
        return sum(1 for p in self.parent if p == 0)

    def as_dict(self) -> dict:
        return {"k": self.k, "parent": list(self.parent)}

    def to_dot(self) -> str:
        lines = ["digraph tree {"]
        lines.extend(f"  {p} -> {v};" for v, p in enumerate(self.parent, start=1))
        lines.append("}")
        return "\n".join(lines) + "\n"


def word_to_tree(w: CodeWord) -> IncreasingTree:
    """The increasing tree of a word; total for every valid word."""
    counts = multiplicities(w)
    k = w.k
    parent = [0] * k
    for v in range(2, k + 1):
        parent[v - 1] = v - 1 - counts.n(k + 2 - v)
    return IncreasingTree(tuple(parent))


def tree_to_word(t: IncreasingTree, m: int) -> CodeWord:
    """The word of an increasing tree, read off the parent offsets.

    Raises InvalidWordError when the tree needs subscript sets of size >= m
    (never happens once m >= t.k).
    """
    k = t.k
    counts = [0] * (k - 1)
    for v in range(2, k + 1):
        counts[k - v] = v - 1 - t.parent[v - 1]  # n_{k+2-v}
    return from_multiplicities(MultiplicityVector(k, tuple(counts)), m)


def enumerate_trees(k: int) -> Iterator[IncreasingTree]:
    """All k! increasing trees on {0..k}, parent vectors in lexicographic order."""
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    for parents in itertools.product(*(range(v) for v in range(1, k + 1))):
        yield IncreasingTree(parents)


def parse_tree(text: str) -> IncreasingTree:
    """Read the JSON form {"k": ..., "parent": [...]}.

    "k" is optional but checked against the parent list when present.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"tree literal is not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or "parent" not in data:
        raise ValueError('tree literal must be an object with a "parent" list')
    parent = data["parent"]
    if not isinstance(parent, list) or not all(
        isinstance(p, int) and not isinstance(p, bool) for p in parent
    ):
        raise ValueError('"parent" must be a list of integers')
    if "k" in data and data["k"] != len(parent):
        raise ValueError(f'"k"={data["k"]} does not match {len(parent)} parent entries')
    return IncreasingTree(tuple(parent))
