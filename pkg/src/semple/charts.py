"""Symbolic coordinate charts on monster spaces.

A chart on the level-k space is a sequence p_1 ... p_k with entries in
1..m, recording which coordinate is retained at each level.  Level j of the
chart has m active coordinates named x_q(p_1 ... p_j); the retained one,
q = p_j, is the same coordinate as one level down under a longer name, so a
name is canonical ("shortest") exactly when its subscript differs from the
last entry in parentheses.  Out of (k+1)m names, m + k(m-1) coordinates are
distinct.

The locus of a word meets the chart iff, for every occurring j, the window
p_j ... p_{j+n_j-1} avoids p_{j-1}; in that case the locus is cut out by the
vanishing of the n_j coordinates x_{p_{j-1}}(p_1 ... p_{j+i}), i < n_j,
which are pairwise distinct shortest names.  Everything here is symbolic:
names only, no point coordinates and no chart transitions.
"""

from __future__ import annotations

from dataclasses import dataclass

from semple.codeword import CodeWord, multiplicities

__all__ = [
    "Chart",
    "CoordinateName",
    "CoordinateTable",
    "DoesNotMeetChartError",
    "shortest_name",
    "coordinate_table",
    "parse_chart",
    "meets",
    "equations",
    "witness_chart",
]


@dataclass(frozen=True)
class CoordinateName:
    """A chart coordinate x_q(p_1 ... p_j); the prefix may be empty."""

    q: int
    prefix: tuple[int, ...]

    @property
    def is_shortest(self) -> bool:
        return not self.prefix or self.prefix[-1] != self.q

    def __str__(self) -> str:
        if not self.prefix:
            return f"x{self.q}"
        if self.q <= 9 and all(p <= 9 for p in self.prefix):
            body = "".join(str(p) for p in self.prefix)
        else:
            body = ",".join(str(p) for p in self.prefix)
        return f"x{self.q}({body})"

    def as_dict(self) -> dict:
        return {"q": self.q, "prefix": list(self.prefix)}


def shortest_name(name: CoordinateName) -> CoordinateName:
    """Canonical form: strip trailing prefix entries equal to the subscript.

    Idempotent, and names of the same coordinate canonicalize identically.
    """
    prefix = name.prefix
    while prefix and prefix[-1] == name.q:
        prefix = prefix[:-1]
    return CoordinateName(name.q, prefix)


@dataclass(frozen=True)
class Chart:
    """A coordinate chart, one retained-coordinate choice per level."""

    levels: tuple[int, ...]
    m: int

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError(f"base dimension must be >= 2, got {self.m}")
        for i, p in enumerate(self.levels, start=1):
            if not 1 <= p <= self.m:
                raise ValueError(f"chart entry p_{i}={p} outside 1..{self.m}")

    @property
    def k(self) -> int:
        return len(self.levels)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.levels)


def parse_chart(text: str, m: int) -> Chart:
    """Parse "3,2,1,2,3"; a bare digit string like "32123" works when m <= 9."""
    text = text.strip()
    if not text:
        return Chart((), m)
    try:
        if "," in text:
            levels = tuple(int(t) for t in text.split(","))
        elif text.isdigit() and m <= 9:
            levels = tuple(int(c) for c in text)
        else:
            levels = (int(text),)
    except ValueError:
        raise ValueError(f"chart must be comma-separated levels, got {text!r}") from None
    return Chart(levels, m)


@dataclass(frozen=True)
class CoordinateTable:
    """The (k+1) x m grid of coordinate names of a chart.

    rows[j][q-1] is x_q(p_1 ... p_j); row 0 holds the base names x_1 ... x_m.
    """

    chart: Chart
    rows: tuple[tuple[CoordinateName, ...], ...]

    def non_shortest(self) -> list[CoordinateName]:
        """The redundant names, one per level: x_{p_j}(p_1 ... p_j)."""
        return [name for row in self.rows for name in row if not name.is_shortest]

    def retained(self, level: int) -> CoordinateName:
        """The renamed pullback at a level >= 1 (a non-shortest name)."""
        if not 1 <= level <= self.chart.k:
            raise IndexError(f"level {level} outside 1..{self.chart.k}")
        return self.rows[level][self.chart.levels[level - 1] - 1]

    def distinct_names(self) -> set[CoordinateName]:
        """Canonical forms of all names; has m + k(m-1) elements."""
        return {shortest_name(name) for row in self.rows for name in row}


def coordinate_table(chart: Chart) -> CoordinateTable:
    rows = tuple(
        tuple(CoordinateName(q, chart.levels[:j]) for q in range(1, chart.m + 1))
        for j in range(chart.k + 1)
    )
    return CoordinateTable(chart, rows)


def _check_same_space(w: CodeWord, chart: Chart) -> None:
    if w.k != chart.k or w.m != chart.m:
        raise ValueError(
            f"word and chart disagree: (k={w.k}, m={w.m}) vs (k={chart.k}, m={chart.m})"
        )


def meets(w: CodeWord, chart: Chart) -> bool:
    """Whether the locus of w intersects the chart.

    Each occurring j needs its window p_j ... p_{j+n_j-1} to avoid p_{j-1};
    repetitions of p_{j-1} after the window name pulled-back coordinates and
    do not obstruct the locus.
    """
    _check_same_space(w, chart)
    p = chart.levels
    for j, n in multiplicities(w).items():
        if n >= 1 and p[j - 2] in p[j - 1 : j - 1 + n]:
            return False
    return True


class DoesNotMeetChartError(ValueError):
    """Asked for equations of a locus in a chart it avoids."""

    def __init__(self, word: CodeWord, chart: Chart) -> None:
        super().__init__("does not meet the chart")
        self.word = word
        self.chart = chart


def equations(w: CodeWord, chart: Chart) -> tuple[CoordinateName, ...]:
    """Coordinates whose vanishing cuts out the locus of w in the chart.

    One name per prolongation step, x_{p_{j-1}}(p_1 ... p_{j+i}), ordered by
    j then by depth i.  There are exactly codimension(w) of them, all
    pairwise distinct shortest names.
    """
    if not meets(w, chart):
        raise DoesNotMeetChartError(w, chart)
    p = chart.levels
    names: list[CoordinateName] = []
    for j, n in multiplicities(w).items():
        names.extend(CoordinateName(p[j - 2], p[: j + i]) for i in range(n))
    return tuple(names)


def witness_chart(w: CodeWord) -> Chart:
    """A chart guaranteed to meet the locus of w.

    Greedy and deterministic: p_j is the smallest value in 1..m outside
    {p_{i-1} : i in A_j} (so p_1 = 1).  Rule 3 keeps that set smaller than
    m, so a choice always exists.
    """
    p: list[int] = []
    for a in w.symbols:
        forbidden = {p[i - 2] for i in a}
        p.append(next(c for c in range(1, w.m + 1) if c not in forbidden))
    return Chart(tuple(p), w.m)
