import random
from itertools import combinations

import pytest
from hypothesis import given, settings

from edsolve import generators as gen
from edsolve.graph import Graph, is_matching
from edsolve.matching import maximum_matching, min_cied
from edsolve.oracle import brute_min_cied
from edsolve.state import ContractViolation, init_state, mask_of

from conftest import graphs


def leaf(g, c=(), i=(), cliques=(), k=5):
    s = init_state(g, k)
    s.c, s.i, s.u2 = mask_of(c), mask_of(i), 0
    s.cliques = [mask_of(q) for q in cliques]
    s.p = 2 * k - len(c) - sum(len(q) - 1 for q in cliques)
    s.check_invariants()
    return s


def brute_matching_size(g):
    es = g.sorted_edges()
    for r in range(len(es), -1, -1):
        for combo in combinations(es, r):
            if is_matching(combo):
                return r
    return 0


@pytest.mark.parametrize(
    "g, size",
    [(gen.path(3), 1), (gen.cycle(5), 2), (gen.petersen(), 5), (gen.empty(3), 0), (gen.complete(5), 2)],
)
def test_maximum_matching_examples(g, size):
    mm = maximum_matching(g)
    assert len(mm) == size
    assert is_matching(mm) and all(g.has_edge(*e) for e in mm)


@given(graphs(max_n=9))
@settings(max_examples=300)
def test_maximum_matching_matches_brute_force(g):
    if g.m > 12:
        return
    assert len(maximum_matching(g)) == brute_matching_size(g)


def test_blossom_needed():
    # two triangles joined by a path: greedy choices must be undone through a blossom
    g = Graph(8, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 7)])
    assert len(maximum_matching(g)) == 4


def test_min_cied_examples():
    p3 = gen.path(3)
    assert min_cied(leaf(p3, c=[1], cliques=[[0], [2]])).size == 1
    assert min_cied(leaf(p3, c=[0, 2], cliques=[[1]])).size == 2
    assert min_cied(leaf(Graph(2, [(0, 1)]), cliques=[[0, 1]])).size == 1
    assert min_cied(leaf(Graph(2, [(0, 1)]), c=[0], i=[1])) is None
    assert min_cied(leaf(gen.empty(2), cliques=[[0], [1]])).size == 0


def test_min_cied_rejects_undecided():
    with pytest.raises(ContractViolation):
        min_cied(init_state(gen.path(3), 1))


def test_min_cied_agrees_with_brute_force():
    rng = random.Random(11)
    nones = 0
    for _ in range(300):
        n = rng.randint(2, 9)
        g = gen.gnp(n, rng.choice((0.2, 0.35, 0.5)), rng)
        s = gen.random_leaf_state(g, rng)
        got = min_cied(s)
        want = brute_min_cied(s)
        if want is None:
            nones += 1
            assert got is None
            continue
        assert got is not None and got.size == want[0]
        vm = mask_of(v for e in got.edges for v in e)
        assert not vm & s.i and not s.c & ~vm
        assert all((q & ~vm).bit_count() <= 1 for q in s.cliques)
    assert nones > 0
