from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from edsolve.graph import (
    Graph,
    ParseError,
    is_eds,
    parse_graph,
    parse_matrix,
    to_dimacs,
    to_edgelist,
)
from edsolve import generators as gen

from conftest import graphs


def test_parse_dimacs_path():
    g = parse_graph("p edge 3 2\ne 1 2\ne 2 3", "dimacs")
    assert g.n == 3
    assert g.edges == {(0, 1), (1, 2)}


def test_parse_edgelist_dedupes():
    g = parse_graph("0 1\n0 1\n1 2", "edgelist")
    assert g == Graph(3, [(0, 1), (1, 2)])


def test_parse_edgelist_comments_and_reversed_duplicates():
    g = parse_graph("# header\n0 1  # first\n1 0\n\n2 1\n", "edgelist")
    assert g.edges == {(0, 1), (1, 2)}


@pytest.mark.parametrize(
    "text, fmt",
    [
        ("p edge 2 1\ne 1 1", "dimacs"),
        ("1 1", "edgelist"),
    ],
)
def test_self_loop_rejected(text, fmt):
    with pytest.raises(ParseError, match="self-loop"):
        parse_graph(text, fmt)


def test_dimacs_errors_carry_line_numbers():
    with pytest.raises(ParseError) as err:
        parse_graph("p edge 3 1\ne 1 4", "dimacs")
    assert err.value.line == 2
    with pytest.raises(ParseError, match="line 1"):
        parse_graph("p edge x 1", "dimacs")
    with pytest.raises(ParseError, match="problem line"):
        parse_graph("e 1 2", "dimacs")
    with pytest.raises(ParseError, match="line 2"):
        parse_graph("0 1\n0 1 2", "edgelist")


def test_auto_format_sniffs_problem_line():
    assert parse_graph("c hi\np edge 2 1\ne 1 2", "auto").edges == {(0, 1)}
    assert parse_graph("0 1", "auto").edges == {(0, 1)}


def test_graph_invariants():
    g = Graph(4, [(2, 0), (0, 1), (1, 2), (3, 2)])
    assert g.adjacency == ((1, 2), (0, 2), (0, 1, 3), (2,))
    assert [g.degree(v) for v in range(4)] == [2, 2, 3, 1]
    with pytest.raises(ValueError):
        Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])


def test_parse_matrix():
    assert parse_matrix("2 2\n11\n10").ones == {(0, 0), (0, 1), (1, 0)}
    assert parse_matrix("1 3\n000").ones == frozenset()
    with pytest.raises(ParseError, match="non-binary"):
        parse_matrix("2 2\n12\n00")
    with pytest.raises(ParseError, match="row length"):
        parse_matrix("2 2\n1\n00")


def test_is_eds_examples():
    assert is_eds(gen.complete(3), [(0, 1)])
    assert is_eds(gen.path(4), [(1, 2)])
    assert not is_eds(Graph(2, [(0, 1)]), [])
    with pytest.raises(ValueError):
        is_eds(gen.path(3), [(0, 2)])


@given(graphs(max_n=7), st.data())
def test_is_eds_matches_direct_domination(g, data):
    es = g.sorted_edges()
    m = data.draw(st.lists(st.sampled_from(es), unique=True)) if es else []
    direct = all(
        e in m or any(set(e) & set(f) for f in m) for e in es
    )
    assert is_eds(g, m) == direct


@given(graphs(max_n=9))
def test_round_trip_both_formats(g):
    assert parse_graph(to_dimacs(g), "dimacs") == g
    back = parse_graph(to_edgelist(g), "edgelist")
    assert back.edges == g.edges


def test_all_graphs_count():
    assert sum(1 for _ in gen.all_graphs(4)) == 2 ** len(list(combinations(range(4), 2)))
