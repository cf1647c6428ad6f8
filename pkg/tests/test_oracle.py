import pytest
from hypothesis import given, settings

from edsolve import generators as gen
from edsolve.graph import Graph, MatrixInstance, is_eds, is_maximal_matching
from edsolve.oracle import (
    InstanceTooLarge,
    brute_matrix_domination,
    brute_min_cied,
    brute_min_eds,
    brute_min_maximal_matching,
    dominates_entries,
)
from edsolve.state import init_state

from conftest import graphs


@pytest.mark.parametrize(
    "g, size",
    [
        (Graph(2, [(0, 1)]), 1),
        (gen.cycle(5), 2),
        (gen.complete(4), 2),
        (gen.complete(5), 2),
        (gen.path(3), 1),
        (gen.path(4), 1),
        (gen.path(5), 2),
        (gen.petersen(), 3),
        (gen.empty(4), 0),
    ],
)
def test_brute_min_eds_examples(g, size):
    got, sol = brute_min_eds(g)
    assert got == size == sol.size
    assert is_eds(g, sol.edges)


@pytest.mark.parametrize(
    "g, size",
    [(gen.path(4), 1), (gen.disjoint_edges(2), 2), (gen.cycle(6), 2)],
)
def test_brute_min_maximal_matching_examples(g, size):
    got, mm = brute_min_maximal_matching(g)
    assert got == size
    assert is_maximal_matching(g, mm)


def test_brute_matrix_examples():
    m = MatrixInstance(2, 2, frozenset({(0, 0), (0, 1), (1, 0)}))
    assert brute_matrix_domination(m) == (1, frozenset({(0, 0)}))
    ident = MatrixInstance(2, 2, frozenset({(0, 0), (1, 1)}))
    assert brute_matrix_domination(ident)[0] == 2
    assert brute_matrix_domination(MatrixInstance(3, 3, frozenset())) == (0, frozenset())


def test_brute_min_cied_trivial():
    s = init_state(gen.empty(0), 0)
    size, sol = brute_min_cied(s)
    assert size == 0 and sol.size == 0


def test_guards():
    with pytest.raises(InstanceTooLarge):
        brute_min_eds(gen.complete(8))
    with pytest.raises(InstanceTooLarge):
        brute_min_maximal_matching(gen.complete(8))
    big = MatrixInstance(5, 5, frozenset((r, c) for r in range(5) for c in range(5)))
    with pytest.raises(InstanceTooLarge):
        brute_matrix_domination(big)


@given(graphs(max_n=7))
@settings(max_examples=150)
def test_min_eds_equals_min_maximal_matching(g):
    a, sol = brute_min_eds(g)
    b, mm = brute_min_maximal_matching(g)
    assert a == b
    assert is_eds(g, sol.edges) and is_maximal_matching(g, mm)


def test_dominates_entries():
    m = MatrixInstance(2, 3, frozenset({(0, 0), (1, 2)}))
    assert not dominates_entries(m, [(0, 0)])
    assert dominates_entries(m, [(0, 0), (1, 2)])
