"""Combinatorics of the coarse stratification of the monster (Semple) tower.

Strata of the level-k tower space over an m-dimensional base are labeled by
code words: sequences of subscript sets obeying a small grammar.  This
package validates, enumerates, counts, and orders those words, translates
the legacy RVT code (m = 3), realizes the bijection with increasing trees,
and writes down the exact defining equations of the corresponding
intersection loci in symbolic coordinate charts.
"""

from semple.charts import (
    Chart,
    CoordinateName,
    CoordinateTable,
    DoesNotMeetChartError,
    coordinate_table,
    equations,
    meets,
    parse_chart,
    shortest_name,
    witness_chart,
)
from semple.codeword import (
    CodeWord,
    InvalidWordError,
    MultiplicityVector,
    Violation,
    WordSyntaxError,
    enumerate_words,
    format_word,
    from_multiplicities,
    multiplicities,
    parse_word,
    validate,
    violations,
)
from semple.counting import CountTable, count, count_table, stirling_first
from semple.rvt import (
    RvtError,
    RvtWord,
    parse_rvt,
    rvt_to_subscript,
    subscript_to_rvt,
    validate_rvt,
)
from semple.strata import (
    IntersectionLocus,
    StratumPoset,
    ambient_dimension,
    codimension,
    contains,
    excision_set,
    hasse,
    locus,
    stratum_dimension,
)
from semple.trees import (
    IncreasingTree,
    enumerate_trees,
    parse_tree,
    tree_to_word,
    word_to_tree,
)

__version__ = "0.1.0"

__all__ = [
    "Chart",
    "CodeWord",
    "CoordinateName",
    "CoordinateTable",
    "CountTable",
    "DoesNotMeetChartError",
    "IncreasingTree",
    "IntersectionLocus",
    "InvalidWordError",
    "MultiplicityVector",
    "RvtError",
    "RvtWord",
    "StratumPoset",
    "Violation",
    "WordSyntaxError",
    "ambient_dimension",
    "codimension",
    "contains",
    "coordinate_table",
    "count",
    "count_table",
    "enumerate_trees",
    "enumerate_words",
    "equations",
    "excision_set",
    "format_word",
    "from_multiplicities",
    "hasse",
    "locus",
    "meets",
    "multiplicities",
    "parse_chart",
    "parse_rvt",
    "parse_tree",
    "parse_word",
    "rvt_to_subscript",
    "shortest_name",
    "stirling_first",
    "stratum_dimension",
    "subscript_to_rvt",
    "tree_to_word",
    "validate",
    "validate_rvt",
    "violations",
    "witness_chart",
    "word_to_tree",
]
