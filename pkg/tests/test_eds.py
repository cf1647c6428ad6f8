import pytest
from hypothesis import given, settings

from edsolve import generators as gen
from edsolve.eds import Best, enumerate_signings, solve_eds
from edsolve.graph import Graph, is_eds
from edsolve.oracle import brute_min_eds
from edsolve.state import BranchStats, init_state

from conftest import graphs


@pytest.mark.parametrize(
    "g, k, decision, size",
    [
        (gen.path(3), 1, True, 1),
        (gen.complete(4), 1, False, None),
        (gen.empty(5), 0, True, 0),
        (gen.petersen(), 3, True, 3),
        (Graph(2, [(0, 1)]), 0, False, None),
        (gen.cycle(5), 2, True, 2),
    ],
)
def test_solve_eds_examples(g, k, decision, size):
    rep = solve_eds(g, k, debug=True)
    assert rep.decision is decision
    assert rep.best_size == size
    if decision:
        assert is_eds(g, rep.witness.edges) and rep.witness.size == size
    else:
        assert rep.witness is None
    assert not rep.stats.violations


def test_enumerate_empty_signing():
    s = init_state(gen.empty(3), 0)
    s.sweep_cliques()
    best = Best()
    enumerate_signings(s, best)
    assert s.stats.leaves == 1 and s.stats.subsets == 1
    assert best.solution.size == 0 and (best.y, best.z) == (0, 0)


def test_enumerate_single_two_path():
    s = init_state(gen.path(3), 1)
    best = Best()
    enumerate_signings(s, best)
    assert (best.y, best.z) == (1, 0)
    assert s.stats.subsets == 1
    assert best.solution.size == 1


def test_enumerate_halts_when_too_many_paths():
    g = Graph(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    s = init_state(g, 1)
    best = Best()
    enumerate_signings(s, best)
    assert s.stats.leaves == 0 and best.solution is None


def test_enumerate_subset_count():
    # three 2-paths, k=5: z = min(10-3, 5-3) = 2, so 1 + 3 + 3 subsets
    g = Graph(9, [(0, 1), (1, 2), (3, 4), (4, 5), (6, 7), (7, 8)])
    s = init_state(g, 5)
    best = Best()
    enumerate_signings(s, best)
    assert s.stats.subsets == 7
    assert best.solution.size == 3


def test_on_leaf_sees_every_leaf():
    s = init_state(Graph(6, [(0, 1), (1, 2), (3, 4), (4, 5)]), 3)
    seen = []
    enumerate_signings(s, Best(), on_leaf=lambda leaf, sol: seen.append(leaf.u2))
    assert seen == [0] * s.stats.leaves and len(seen) == 3


def test_stats_accumulate_into_caller_object():
    stats = BranchStats()
    solve_eds(gen.cycle(7), 2, stats=stats)
    assert stats.nodes > 0 and stats.rule_counts


@given(graphs(max_n=7))
@settings(max_examples=120, deadline=None)
def test_solve_eds_matches_oracle(g):
    opt, _ = brute_min_eds(g)
    for k in range(opt + 2):
        rep = solve_eds(g, k, debug=True)
        assert rep.decision == (opt <= k)
        if rep.decision:
            assert rep.best_size == opt and is_eds(g, rep.witness.edges)
        assert not rep.stats.violations
