"""Command-line front end.

Every subcommand prints deterministically (no timestamps, fixed orderings),
so output is safe to pin in golden files.  Exit status: 0 on success, 1 on
a domain error (invalid word, locus missing the chart, ...), 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from typing import TextIO

from semple import charts, codeword, counting, rvt, strata, trees

# Which subcommand exposes each public library operation (each exactly
# once); tests check this table against the modules' public surfaces.
OPERATION_COVERAGE = {
    "codeword.validate": "validate",
    "codeword.violations": "validate",
    "codeword.parse_word": "validate",
    "codeword.format_word": "validate",
    "codeword.multiplicities": "validate",
    "codeword.from_multiplicities": "validate",
    "codeword.enumerate_words": "enumerate",
    "counting.count": "count",
    "counting.count_table": "count",
    "counting.stirling_first": "count",
    "rvt.validate_rvt": "translate",
    "rvt.parse_rvt": "translate",
    "rvt.rvt_to_subscript": "translate",
    "rvt.subscript_to_rvt": "translate",
    "strata.hasse": "poset",
    "strata.excision_set": "poset",
    "strata.contains": "poset",
    "strata.locus": "dims",
    "strata.codimension": "dims",
    "strata.ambient_dimension": "dims",
    "strata.stratum_dimension": "dims",
    "charts.shortest_name": "equations",
    "charts.coordinate_table": "equations",
    "charts.parse_chart": "equations",
    "charts.meets": "equations",
    "charts.equations": "equations",
    "charts.witness_chart": "witness",
    "trees.word_to_tree": "tree",
    "trees.tree_to_word": "tree",
    "trees.parse_tree": "tree",
    "trees.enumerate_trees": "tree",
}

SUBCOMMANDS = (
    "validate",
    "enumerate",
    "count",
    "translate",
    "poset",
    "equations",
    "witness",
    "tree",
    "dims",
)


class UsageError(Exception):
    """Bad flag combination that argparse alone cannot express."""


def _dump(doc: object, out: TextIO) -> None:
    json.dump(doc, out, indent=2)
    out.write("\n")


def _word_from_args(args: argparse.Namespace) -> codeword.CodeWord:
    if getattr(args, "counts", None) is not None:
        text = args.counts.strip()
        counts = tuple(int(t) for t in text.split(",")) if text else ()
        vector = codeword.MultiplicityVector(len(counts) + 1, counts)
        return codeword.from_multiplicities(vector, args.dimension)
    return codeword.parse_word(args.word, args.dimension)


def cmd_validate(args: argparse.Namespace, out: TextIO) -> int:
    try:
        w = _word_from_args(args)
    except codeword.InvalidWordError as exc:
        if args.format == "json":
            _dump({"valid": False, "violations": [asdict(v) for v in exc.violations]}, out)
        else:
            for v in exc.violations:
                out.write(f"invalid: {v}\n")
        return 1
    counts = codeword.multiplicities(w).counts
    if args.format == "json":
        _dump(
            {
                "valid": True,
                "m": w.m,
                "symbols": [list(a) for a in w.symbols],
                "multiplicities": list(counts),
            },
            out,
        )
    else:
        out.write(f"valid: {w}\n")
        if counts:
            out.write("multiplicities: " + ",".join(map(str, counts)) + "\n")
    return 0


def cmd_enumerate(args: argparse.Namespace, out: TextIO) -> int:
    for w in codeword.enumerate_words(args.level, args.dimension):
        if args.format == "json":
            out.write(json.dumps(w.as_dict()) + "\n")
        else:
            out.write(f"{w}\n")
    return 0


def cmd_count(args: argparse.Namespace, out: TextIO) -> int:
    if args.stirling:
        row = [counting.stirling_first(args.level, r + 1) for r in range(args.dimension)]
        if args.format == "json":
            _dump({"k": args.level, "m": args.dimension, "stirling": row}, out)
        else:
            out.write(" ".join(map(str, row)) + "\n")
        return 0
    table = counting.count_table(args.level, args.dimension)
    if args.format == "json":
        _dump(table.as_dict(), out)
    else:
        out.write(f"{table.total}\n")
    return 0


def cmd_translate(args: argparse.Namespace, out: TextIO) -> int:
    if args.dimension != 3:
        raise ValueError(f"the RVT code is defined for dimension 3, got m={args.dimension}")
    tokens = args.word.replace(".", " ").split()
    if any(t.startswith("V{") for t in tokens):
        result: codeword.CodeWord | rvt.RvtWord = rvt.subscript_to_rvt(
            codeword.parse_word(args.word, 3)
        )
    else:
        result = rvt.rvt_to_subscript(rvt.parse_rvt(args.word))
    if args.format == "json":
        _dump(result.as_dict(), out)
    else:
        out.write(f"{result}\n")
    return 0


def cmd_poset(args: argparse.Namespace, out: TextIO) -> int:
    words = args.word or []
    if len(words) > 2:
        raise UsageError("poset takes at most two -w words")
    if len(words) == 2:
        first = codeword.parse_word(words[0], args.dimension)
        second = codeword.parse_word(words[1], args.dimension)
        verdict = strata.contains(first, second)
        if args.format == "json":
            _dump({"contains": verdict}, out)
        else:
            out.write(f"{'true' if verdict else 'false'}\n")
        return 0
    if len(words) == 1:
        w = codeword.parse_word(words[0], args.dimension)
        below = strata.excision_set(w)
        if args.format == "json":
            _dump({"word": str(w), "covers": [str(x) for x in below]}, out)
        else:
            for x in below:
                out.write(f"{x}\n")
        return 0
    if args.level is None:
        raise UsageError("poset needs -k, or one or two -w words")
    poset = strata.hasse(args.level, args.dimension)
    if args.format == "dot":
        out.write(poset.to_dot())
    elif args.format == "json":
        _dump(poset.as_dict(), out)
    else:
        for i, w in enumerate(poset.nodes):
            out.write(f"{i}: {w}\n")
        for i, j in poset.covers:
            out.write(f"{i} -> {j}\n")
    return 0


def cmd_equations(args: argparse.Namespace, out: TextIO) -> int:
    chart = charts.parse_chart(args.chart, args.dimension)
    if args.word is None:
        table = charts.coordinate_table(chart)
        boxed = table.non_shortest()
        if args.format == "json":
            doc = {
                "chart": list(chart.levels),
                "m": chart.m,
                "names": [[str(n) for n in row] for row in table.rows],
                "non_shortest": [str(n) for n in boxed],
                "distinct": len(table.distinct_names()),
            }
            if chart.k >= 1:
                doc["retained"] = str(charts.shortest_name(table.retained(chart.k)))
            _dump(doc, out)
        else:
            out.write(f"chart: {chart}\n")
            out.write(f"m: {chart.m}\n")
            for row in table.rows:
                cells = [str(n) if n.is_shortest else f"[{n}]" for n in row]
                out.write(" ".join(cells) + "\n")
            if chart.k >= 1:
                out.write(f"retained: {charts.shortest_name(table.retained(chart.k))}\n")
            out.write(f"distinct: {len(table.distinct_names())}\n")
        return 0
    w = codeword.parse_word(args.word, args.dimension)
    try:
        names = charts.equations(w, chart)
    except charts.DoesNotMeetChartError:
        if args.format == "json":
            _dump({"error": "does not meet the chart"}, out)
        else:
            out.write("does not meet the chart\n")
        return 1
    if args.format == "json":
        _dump([n.as_dict() for n in names], out)
    else:
        for n in names:
            out.write(f"{n} = 0\n")
    return 0


def cmd_witness(args: argparse.Namespace, out: TextIO) -> int:
    w = codeword.parse_word(args.word, args.dimension)
    chart = charts.witness_chart(w)
    if args.format == "json":
        _dump({"m": chart.m, "levels": list(chart.levels)}, out)
    else:
        out.write(f"{chart}\n")
    return 0


def cmd_tree(args: argparse.Namespace, out: TextIO) -> int:
    if args.word is not None:
        if args.dimension is None:
            raise UsageError("tree -w needs -m to parse the word")
        t = trees.word_to_tree(codeword.parse_word(args.word, args.dimension))
        if args.format == "dot":
            out.write(t.to_dot())
        else:
            out.write(json.dumps(t.as_dict()) + "\n")
        return 0
    if args.tree is not None:
        if args.dimension is None:
            raise UsageError("tree -t needs -m to rebuild the word")
        if args.format == "dot":
            raise UsageError("dot output is for trees, not words")
        w = trees.tree_to_word(trees.parse_tree(args.tree), args.dimension)
        if args.format == "json":
            _dump(w.as_dict(), out)
        else:
            out.write(f"{w}\n")
        return 0
    if args.level is not None:
        if args.format == "dot":
            raise UsageError("dot output is for a single tree, not a stream")
        for t in trees.enumerate_trees(args.level):
            out.write(json.dumps(t.as_dict()) + "\n")
        return 0
    raise UsageError("tree needs -w, -t, or -k")


def cmd_dims(args: argparse.Namespace, out: TextIO) -> int:
    if args.word is None:
        if args.level is None:
            raise UsageError("dims needs -w or -k")
        ambient = strata.ambient_dimension(args.level, args.dimension)
        if args.format == "json":
            _dump({"k": args.level, "m": args.dimension, "ambient": ambient}, out)
        else:
            out.write(f"ambient: {ambient}\n")
        return 0
    w = codeword.parse_word(args.word, args.dimension)
    ambient = strata.ambient_dimension(w.k, w.m)
    codim = strata.codimension(w)
    where = strata.locus(w)
    if args.format == "json":
        _dump(
            {
                "k": w.k,
                "m": w.m,
                "word": str(w),
                "ambient": ambient,
                "codimension": codim,
                "stratum": strata.stratum_dimension(w),
                "locus": [list(f) for f in where.factors],
            },
            out,
        )
    else:
        out.write(f"ambient: {ambient}\n")
        out.write(f"codimension: {codim}\n")
        out.write(f"stratum: {strata.stratum_dimension(w)}\n")
        out.write(f"locus: {where}\n")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semple",
        description="Strata of the monster (Semple) tower: validate, enumerate,"
        " count, order, and translate stratum code words, and write chart"
        " equations of their loci.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def formats(p: argparse.ArgumentParser, choices: tuple[str, ...]) -> None:
        p.add_argument("-f", "--format", choices=choices, default="text")
        p.add_argument("-o", "--output", metavar="FILE", help="write here instead of stdout")

    p = sub.add_parser("validate", help="check a word against the grammar")
    p.add_argument("-m", "--dimension", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("-w", "--word", help="word literal, e.g. 'R V{2} V{2,3}'")
    group.add_argument("--counts", help="multiplicity vector n_2,...,n_k, e.g. 3,0,1,0")
    formats(p, ("text", "json"))
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("enumerate", help="stream every valid word of length k")
    p.add_argument("-k", "--level", type=int, required=True)
    p.add_argument("-m", "--dimension", type=int, required=True)
    formats(p, ("text", "json"))
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("count", help="count valid words by recurrence")
    p.add_argument("-k", "--level", type=int, required=True)
    p.add_argument("-m", "--dimension", type=int, required=True)
    p.add_argument(
        "--stirling",
        action="store_true",
        help="print the Stirling row c(k, r+1) instead (equals the counts when k <= m)",
    )
    formats(p, ("text", "json"))
    p.set_defaults(handler=cmd_count)

    p = sub.add_parser("translate", help="translate between RVT and subscript words (m=3)")
    p.add_argument("-m", "--dimension", type=int, default=3)
    p.add_argument("-w", "--word", required=True, help="either code; detected by token shape")
    formats(p, ("text", "json"))
    p.set_defaults(handler=cmd_translate)

    p = sub.add_parser("poset", help="stratification poset, excision sets, containment")
    p.add_argument("-k", "--level", type=int)
    p.add_argument("-m", "--dimension", type=int, required=True)
    p.add_argument(
        "-w",
        "--word",
        action="append",
        help="with one word: its excision set; with two: containment of loci",
    )
    formats(p, ("text", "json", "dot"))
    p.set_defaults(handler=cmd_poset)

    p = sub.add_parser("equations", help="chart coordinate names and locus equations")
    p.add_argument("-m", "--dimension", type=int, required=True)
    p.add_argument("-c", "--chart", required=True, help="chart literal, e.g. 32123 or 3,2,1,2,3")
    p.add_argument("-w", "--word", help="omit to print the chart's coordinate table")
    formats(p, ("text", "json"))
    p.set_defaults(handler=cmd_equations)

    p = sub.add_parser("witness", help="a chart guaranteed to meet the word's locus")
    p.add_argument("-m", "--dimension", type=int, required=True)
    p.add_argument("-w", "--word", required=True)
    formats(p, ("text", "json"))
    p.set_defaults(handler=cmd_witness)

    p = sub.add_parser("tree", help="words as increasing trees and back")
    p.add_argument("-m", "--dimension", type=int)
    p.add_argument("-k", "--level", type=int, help="alone: stream all increasing trees")
    group = p.add_mutually_exclusive_group()
    group.add_argument("-w", "--word")
    group.add_argument("-t", "--tree", help='tree literal {"k": ..., "parent": [...]}')
    formats(p, ("text", "json", "dot"))
    p.set_defaults(handler=cmd_tree)

    p = sub.add_parser("dims", help="ambient and stratum dimensions, locus factors")
    p.add_argument("-m", "--dimension", type=int, required=True)
    p.add_argument("-k", "--level", type=int)
    p.add_argument("-w", "--word")
    formats(p, ("text", "json"))
    p.set_defaults(handler=cmd_dims)

    return parser


def _render_domain_error(exc: ValueError, fmt: str, out: TextIO) -> None:
    if fmt == "json":
        doc: dict = {"error": str(exc)}
        if isinstance(exc, codeword.InvalidWordError):
            doc["violations"] = [asdict(v) for v in exc.violations]
        _dump(doc, out)
    else:
        out.write(f"error: {exc}\n")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    out: TextIO = sys.stdout
    opened = False
    if getattr(args, "output", None):
        out = open(args.output, "w", encoding="utf-8")
        opened = True
    try:
        return args.handler(args, out)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        _render_domain_error(exc, getattr(args, "format", "text"), out)
        return 1
    finally:
        if opened:
            out.close()


def run() -> None:
    raise SystemExit(main())
