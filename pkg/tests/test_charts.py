import itertools

import pytest
from hypothesis import given, strategies as st

from helpers import valid_words
from semple.charts import (
    Chart,
    CoordinateName,
    DoesNotMeetChartError,
    coordinate_table,
    equations,
    meets,
    parse_chart,
    shortest_name,
    witness_chart,
)
from semple.codeword import enumerate_words, parse_word, validate
from semple.strata import codimension, contains

C32123 = Chart((3, 2, 1, 2, 3), 3)
W_EXAMPLE = parse_word("R V{2} V{2} V{2,4} R", 3)


def all_charts(k, m):
    return [Chart(levels, m) for levels in itertools.product(range(1, m + 1), repeat=k)]


class TestShortestName:
    @pytest.mark.parametrize(
        "q,prefix,expected",
        [
            (2, (3, 2), "x2(3)"),
            (3, (3, 2, 1, 2, 3), "x3(3212)"),
            (1, (3, 2, 1), "x1(32)"),
        ],
    )
    def test_boxed_names(self, q, prefix, expected):
        assert str(shortest_name(CoordinateName(q, prefix))) == expected

    def test_strips_repeated_tail(self):
        assert shortest_name(CoordinateName(3, (3, 3, 3))) == CoordinateName(3, ())

    @given(st.integers(1, 4), st.lists(st.integers(1, 4), max_size=6).map(tuple))
    def test_idempotent(self, q, prefix):
        once = shortest_name(CoordinateName(q, prefix))
        assert shortest_name(once) == once
        assert once.is_shortest

    @given(st.integers(1, 4), st.lists(st.integers(1, 4), max_size=6).map(tuple))
    def test_reexpansion_is_same_coordinate(self, q, prefix):
        name = CoordinateName(q, prefix)
        longer = CoordinateName(q, prefix + (q,))
        assert shortest_name(longer) == shortest_name(name)

    def test_rendering(self):
        assert str(CoordinateName(2, ())) == "x2"
        assert str(CoordinateName(3, (3, 2, 1, 2))) == "x3(3212)"
        assert str(CoordinateName(1, (12, 3))) == "x1(12,3)"
        assert CoordinateName(3, (3, 2)).as_dict() == {"q": 3, "prefix": [3, 2]}


class TestChart:
    def test_parse_digit_string(self):
        assert parse_chart("32123", 3) == C32123

    def test_parse_commas(self):
        assert parse_chart("3,2,1,2,3", 3) == C32123

    def test_parse_empty(self):
        assert parse_chart("", 3) == Chart((), 3)

    def test_parse_multidigit_needs_commas(self):
        assert parse_chart("12", 15) == Chart((12,), 15)
        assert parse_chart("1,12", 15) == Chart((1, 12), 15)
        assert parse_chart("12", 9) == Chart((1, 2), 9)

    def test_out_of_range_entry(self):
        with pytest.raises(ValueError, match="p_2=4"):
            Chart((1, 4), 3)

    def test_parse_garbage(self):
        with pytest.raises(ValueError):
            parse_chart("3;2", 3)

    def test_str_round_trip(self):
        assert str(C32123) == "3,2,1,2,3"
        assert parse_chart(str(C32123), 3) == C32123


class TestCoordinateTable:
    def test_example_chart(self):
        table = coordinate_table(C32123)
        assert len(table.rows) == 6
        assert all(len(row) == 3 for row in table.rows)
        assert [str(n) for n in table.non_shortest()] == [
            "x3(3)",
            "x2(32)",
            "x1(321)",
            "x2(3212)",
            "x3(32123)",
        ]
        assert len(table.distinct_names()) == 13
        assert str(table.retained(5)) == "x3(32123)"
        assert str(shortest_name(table.retained(5))) == "x3(3212)"

    def test_empty_chart(self):
        table = coordinate_table(Chart((), 4))
        assert [str(n) for row in table.rows for n in row] == ["x1", "x2", "x3", "x4"]
        assert table.non_shortest() == []
        assert len(table.distinct_names()) == 4

    def test_distinct_count_law(self):
        # brute-force dedup against the closed form m + k(m-1)
        for chart in all_charts(4, 3):
            assert len(coordinate_table(chart).distinct_names()) == 3 + 4 * 2 == 11
        for chart in all_charts(3, 2):
            assert len(coordinate_table(chart).distinct_names()) == 2 + 3 * 1

    def test_one_redundant_name_per_level(self):
        for chart in all_charts(3, 3):
            boxed = coordinate_table(chart).non_shortest()
            assert [len(n.prefix) for n in boxed] == [1, 2, 3]

    def test_retained_bounds(self):
        with pytest.raises(IndexError):
            coordinate_table(C32123).retained(0)
        with pytest.raises(IndexError):
            coordinate_table(C32123).retained(6)


class TestMeets:
    def test_worked_example_meets(self):
        assert meets(W_EXAMPLE, C32123)

    def test_deeper_locus_misses(self):
        w = parse_word("R V{2} V{2} V{2,4} V{2}", 3)
        assert not meets(w, C32123)

    def test_all_r_meets_everything(self):
        w = validate([()] * 5, 3)
        for chart in [C32123, Chart((1, 1, 1, 1, 1), 3)]:
            assert meets(w, chart)

    def test_mismatch_rejected(self):
        with pytest.raises(ValueError):
            meets(parse_word("R", 3), C32123)
        with pytest.raises(ValueError):
            meets(parse_word("R V{2} V{2} V{2,4} R", 4), C32123)


class TestEquations:
    def test_worked_example(self):
        names = [str(n) for n in equations(W_EXAMPLE, C32123)]
        assert names == ["x3(32)", "x3(321)", "x3(3212)", "x1(3212)"]

    def test_excised_loci_extra_equations(self):
        base = set(str(n) for n in equations(W_EXAMPLE, C32123))
        extras = {
            "R V{2} V{2,3} V{2,4} R": "x2(321)",
            "R V{2} V{2} V{2,4} V{4}": "x1(32123)",
            "R V{2} V{2} V{2,4} V{5}": "x2(32123)",
        }
        for text, extra in extras.items():
            got = {str(n) for n in equations(parse_word(text, 3), C32123)}
            assert got == base | {extra}

    def test_miss_raises_exact_message(self):
        w = parse_word("R V{2} V{2} V{2,4} V{2}", 3)
        with pytest.raises(DoesNotMeetChartError) as info:
            equations(w, C32123)
        assert str(info.value) == "does not meet the chart"

    def test_count_shortness_distinctness(self):
        for w in enumerate_words(4, 3):
            for chart in all_charts(4, 3):
                if not meets(w, chart):
                    continue
                names = equations(w, chart)
                assert len(names) == codimension(w)
                assert len(set(names)) == len(names)
                assert all(n.is_shortest for n in names)

    def test_monotone_under_containment(self):
        words = list(enumerate_words(4, 3))
        charts = all_charts(4, 3)
        cached = {
            (i, c): set(equations(w, chart))
            for i, w in enumerate(words)
            for c, chart in enumerate(charts)
            if meets(w, chart)
        }
        for i, w in enumerate(words):
            for j, other in enumerate(words):
                if not contains(w, other):
                    continue
                for c in range(len(charts)):
                    if (i, c) in cached and (j, c) in cached:
                        assert cached[(i, c)] <= cached[(j, c)]


class TestWitness:
    def test_worked_example(self):
        assert str(witness_chart(W_EXAMPLE)) == "1,2,2,3,1"

    def test_all_r(self):
        assert witness_chart(validate([()] * 4, 5)).levels == (1, 1, 1, 1)

    def test_growing_subscripts(self):
        assert witness_chart(parse_word("R V{2} V{2,3}", 3)).levels == (1, 2, 3)

    def test_meets_always(self):
        for k in range(1, 6):
            for w in enumerate_words(k, 3):
                chart = witness_chart(w)
                assert meets(w, chart)
                assert len(equations(w, chart)) == codimension(w)

    @given(valid_words(max_k=8, min_m=2, max_m=5))
    def test_meets_random(self, w):
        chart = witness_chart(w)
        assert meets(w, chart)
        assert len(equations(w, chart)) == codimension(w)
