import random
from itertools import combinations

import pytest

from edsolve import generators as gen
from edsolve.eds1 import solve_eds1
from edsolve.graph import Graph, Solution, endpoints, is_eds
from edsolve.kernel import (
    KernelStatus,
    greedy_maximal_matching,
    kernel_stats,
    kernelize,
    lift_solution,
    solve_with_kernel,
)
from edsolve.oracle import brute_min_eds
from edsolve.state import ContractViolation


def test_star_solved_by_m0():
    r = kernelize(gen.star(5), 1)
    assert r.status is KernelStatus.SOLVED_BY_M0
    assert r.m0 == {(0, 1)}
    assert lift_solution(r, Solution.of(r.m0)).edges == r.m0


def test_p4_kernel(p4):
    r = kernelize(p4, 1)
    assert r.status is KernelStatus.KERNEL
    assert r.m0 == {(0, 1), (2, 3)}
    assert r.overloaded == frozenset()
    assert r.deleted == {0, 3} and r.labeled == {1, 2}
    kg = r.kernel_graph
    assert kg.n == 4 and kg == Graph(4, [(0, 1), (0, 2), (1, 3)])
    assert r.origin == [1, 2, None, None]
    assert r.pendant_map == {1: 2, 2: 3}
    assert r.k_prime == 1
    assert solve_eds1(kg, 1).decision


def test_disjoint_edges_rejected():
    r = kernelize(gen.disjoint_edges(3), 1)
    assert r.status is KernelStatus.REJECTED
    assert not solve_with_kernel(gen.disjoint_edges(3), 1).decision


def test_p5_boundary_exceeds_quadratic_bound():
    r = kernelize(gen.path(5), 1)
    led = kernel_stats(r)
    assert led.n_kernel == 5 and led.vertex_bound == 4
    assert not led.within_vertex_bound and not led.bound_regime
    assert led.within_relaxed_bound
    assert not solve_eds1(r.kernel_graph, 1).decision
    assert brute_min_eds(gen.path(5))[0] == 2


def test_ledger_examples(p4):
    led = kernel_stats(kernelize(p4, 1))
    assert led.n_kernel == 4 == led.vertex_bound
    assert not led.violations()
    led = kernel_stats(kernelize(gen.disjoint_edges(2), 1))
    assert led.n_kernel == 4 and led.within_vertex_bound
    with pytest.raises(ContractViolation):
        kernel_stats(kernelize(gen.star(5), 1))


def test_lift_examples(p4):
    r = kernelize(p4, 1)
    assert lift_solution(r, Solution.of([(0, 1)])).edges == {(1, 2)}
    lifted = lift_solution(r, Solution.of([(0, 2), (1, 3)]))
    assert is_eds(p4, lifted.edges) and lifted.size <= 2
    with pytest.raises(ContractViolation):
        lift_solution(r, Solution.of([(0, 2)]))


def test_greedy_matching_scans_in_id_order():
    assert greedy_maximal_matching(gen.path(5)) == {(0, 1), (2, 3)}


def all_small_eds(g, k):
    for r in range(k + 1):
        for combo in combinations(g.sorted_edges(), r):
            if is_eds(g, combo):
                yield combo


def test_answer_preserved_and_overloaded_sound():
    rng = random.Random(5)
    kernels = 0
    for _ in range(300):
        g = gen.gnp(rng.randint(4, 9), rng.choice((0.2, 0.3, 0.45)), rng)
        if g.m > 20:
            continue
        opt = brute_min_eds(g)[0]
        for k in range(1, 5):
            r = kernelize(g, k)
            rep = solve_with_kernel(g, k)
            assert rep.decision == (opt <= k)
            if rep.decision:
                assert is_eds(g, rep.witness.edges) and rep.witness.size <= k
            if r.status is not KernelStatus.KERNEL:
                continue
            kernels += 1
            kg = r.kernel_graph
            assert solve_eds1(kg, k).decision == (opt <= k)
            assert not kernel_stats(r).violations()
            assert r.overloaded <= r.labeled <= r.vm
            assert not r.deleted & set(v for v in r.origin if v is not None)
            for w, kid in r.pendant_map.items():
                assert kg.neighbors(kid) == (r.kernel_id(w),)
            if opt <= k and g.m <= 14:
                for m in all_small_eds(g, k):
                    assert r.overloaded <= endpoints(m)
            if kg.m <= 10:
                for m in all_small_eds(kg, kg.m):
                    vm = endpoints(m)
                    assert all(r.kernel_id(w) in vm for w in r.labeled)
    assert kernels > 50
