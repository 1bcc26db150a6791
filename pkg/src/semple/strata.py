"""Intersection loci and the stratification poset of a monster space.

Every word W determines a locus: the intersection of the level-j divisor
towers I_j, each taken n_j - 1 prolongation steps deep (a j that never
occurs contributes nothing, i.e. the whole space).  The locus of W contains
the locus of W' exactly when n_j <= n'_j for every j, and its codimension
is the sum of the n_j.  Cover relations of the resulting partial order are
single increments of one n_j, which is also the excision recipe: removing
those finitely many smaller loci from the locus of W leaves the stratum.
"""

from __future__ import annotations

from dataclasses import dataclass

from semple.codeword import (
    CodeWord,
    MultiplicityVector,
    enumerate_words,
    from_multiplicities,
    multiplicities,
)
from semple.counting import count

__all__ = [
    "IntersectionLocus",
    "StratumPoset",
    "locus",
    "codimension",
    "ambient_dimension",
    "stratum_dimension",
    "contains",
    "excision_set",
    "hasse",
]


@dataclass(frozen=True)
class IntersectionLocus:
    """Closure of a stratum: which divisor towers are met, and how deep.

    factors lists (j, depth) with depth = n_j - 1 for every j occurring in
    the word; an empty factor list is the whole level-k space.
    """

    k: int
    m: int
    factors: tuple[tuple[int, int], ...]

    def __str__(self) -> str:
        if not self.factors:
            return f"M({self.k})"
        return " ∩ ".join(
            f"I{j}" if depth == 0 else f"I{j}[{depth}]" for j, depth in self.factors
        )

    def as_dict(self) -> dict:
        return {"k": self.k, "m": self.m, "factors": [list(f) for f in self.factors]}


def locus(w: CodeWord) -> IntersectionLocus:
    """The intersection locus whose closure the word labels."""
    factors = tuple((j, n - 1) for j, n in multiplicities(w).items() if n >= 1)
    return IntersectionLocus(w.k, w.m, factors)


def codimension(w: CodeWord) -> int:
    """Codimension of the locus of w: the total number of subscripts."""
    return sum(len(a) for a in w.symbols)


def ambient_dimension(k: int, m: int) -> int:
    """Dimension of the level-k monster space over an m-dimensional base."""
    if k < 0:
        raise ValueError(f"level must be >= 0, got {k}")
    if m < 2:
        raise ValueError(f"base dimension must be >= 2, got {m}")
    return m + (m - 1) * k


def stratum_dimension(w: CodeWord) -> int:
    return ambient_dimension(w.k, w.m) - codimension(w)


def contains(w: CodeWord, other: CodeWord) -> bool:
    """Whether the locus of w contains the locus of other.

    Holds exactly when every multiplicity of other is at least the
    corresponding multiplicity of w.
    """
    if w.k != other.k or w.m != other.m:
        raise ValueError(
            f"words live on different spaces:"
            f" (k={w.k}, m={w.m}) vs (k={other.k}, m={other.m})"
        )
    ours, theirs = multiplicities(w), multiplicities(other)
    return all(theirs.n(j) >= n for j, n in ours.items())


def excision_set(w: CodeWord) -> list[CodeWord]:
    """Valid words one multiplicity increment below w, in increasing j.

    Removing their loci from the locus of w leaves exactly the stratum of w.
    Increments that break the grammar (block sticking out of the word, or a
    subscript set reaching size m) are silently dropped.
    """
    v = multiplicities(w)
    out: list[CodeWord] = []
    for j in range(2, w.k + 1):
        bumped = list(v.counts)
        bumped[j - 2] += 1
        try:
            out.append(from_multiplicities(MultiplicityVector(w.k, tuple(bumped)), w.m))
        except ValueError:
            continue
    return out


@dataclass(frozen=True)
class StratumPoset:
    """All strata of one monster space, ordered by containment of closures.

    nodes are in enumeration order; covers holds index pairs (i, j) meaning
    the locus of nodes[i] directly contains the locus of nodes[j] (one
    multiplicity increment).  The all-R word is the unique maximum.
    """

    k: int
    m: int
    nodes: tuple[CodeWord, ...]
    covers: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict:
        return {
            "nodes": [str(w) for w in self.nodes],
            "covers": [list(c) for c in self.covers],
        }

    def to_dot(self) -> str:
        """Graphviz rendering, one rank per codimension."""
        lines = ["digraph stratification {", "  rankdir=TB;", "  node [shape=box];"]
        for i, w in enumerate(self.nodes):
            lines.append(f'  n{i} [label="{w}"];')
        by_codim: dict[int, list[int]] = {}
        for i, w in enumerate(self.nodes):
            by_codim.setdefault(codimension(w), []).append(i)
        for c in sorted(by_codim):
            members = " ".join(f"n{i};" for i in by_codim[c])
            lines.append(f"  {{ rank=same; {members} }}")
        for i, j in self.covers:
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def hasse(k: int, m: int, max_nodes: int = 100_000) -> StratumPoset:
    """Build the full stratification poset of the level-k space.

    Guarded by max_nodes since the node count grows like k!; the count is
    checked by recurrence before any enumeration happens.
    """
    total = count(k, m)
    if total > max_nodes:
        raise ValueError(
            f"poset for (k={k}, m={m}) has {total} nodes, above the limit {max_nodes}"
        )
    nodes = tuple(enumerate_words(k, m))
    index = {w: i for i, w in enumerate(nodes)}
    covers: list[tuple[int, int]] = []
    for i, w in enumerate(nodes):
        covers.extend((i, index[below]) for below in excision_set(w))
    covers.sort()
    return StratumPoset(k, m, nodes, tuple(covers))
