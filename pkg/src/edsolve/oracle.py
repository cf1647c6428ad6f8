"""Exhaustive ground truth.  Slow on purpose: subsets in order of size, first hit wins."""

from __future__ import annotations

from itertools import combinations

from .graph import Edge, Graph, MatrixInstance, Solution, is_eds
from .state import ContractViolation, SearchState, bits

MAX_EDGES = 26
MAX_LEAF_EDGES = 24
MAX_ONES = 20


class InstanceTooLarge(ValueError):
    pass


def _cover_checker(g: Graph):
    masks = g.masks
    full = (1 << g.n) - 1

    def covers(cover: int) -> bool:
        free = full & ~cover
        return all(not masks[v] & free for v in bits(free))

    return covers


def brute_min_eds(g: Graph) -> tuple[int, Solution]:
    if g.m > MAX_EDGES:
        raise InstanceTooLarge(f"{g.m} edges > {MAX_EDGES}")
    edges = g.sorted_edges()
    emask = [(1 << u) | (1 << v) for u, v in edges]
    covers = _cover_checker(g)
    for r in range(len(edges) + 1):
        for combo in combinations(range(len(edges)), r):
            cover = 0
            for j in combo:
                cover |= emask[j]
            if covers(cover):
                sol = Solution.of(edges[j] for j in combo)
                assert is_eds(g, sol.edges)
                return r, sol
    raise AssertionError("unreachable: E itself is an eds")


def brute_min_cied(s: SearchState) -> tuple[int, Solution] | None:
    if s.u2:
        raise ContractViolation("brute_min_cied called with undecided U2 vertices")
    g = s.graph
    allowed = s.c | s.u1
    edges = [(u, v) for u, v in g.sorted_edges() if allowed >> u & 1 and allowed >> v & 1]
    if len(edges) > MAX_LEAF_EDGES:
        raise InstanceTooLarge(f"{len(edges)} candidate edges > {MAX_LEAF_EDGES}")
    emask = [(1 << u) | (1 << v) for u, v in edges]
    for r in range(len(edges) + 1):
        for combo in combinations(range(len(edges)), r):
            vm = 0
            for j in combo:
                vm |= emask[j]
            if s.c & ~vm:
                continue
            if all((q & ~vm).bit_count() <= 1 for q in s.cliques):
                return r, Solution.of(edges[j] for j in combo)
    return None


def brute_min_maximal_matching(g: Graph) -> tuple[int, frozenset[Edge]]:
    if g.m > MAX_EDGES:
        raise InstanceTooLarge(f"{g.m} edges > {MAX_EDGES}")
    edges = g.sorted_edges()
    emask = [(1 << u) | (1 << v) for u, v in edges]
    covers = _cover_checker(g)
    for r in range(len(edges) + 1):
        for combo in combinations(range(len(edges)), r):
            used = 0
            ok = True
            for j in combo:
                if used & emask[j]:
                    ok = False
                    break
                used |= emask[j]
            # a matching is maximal iff its endpoints cover every edge
            if ok and covers(used):
                return r, frozenset(edges[j] for j in combo)
    raise AssertionError("unreachable: a maximal matching always exists")


def dominates_entries(mat: MatrixInstance, selection) -> bool:
    rows = {r for r, _ in selection}
    cols = {c for _, c in selection}
    return all(r in rows or c in cols for r, c in mat.ones)


def brute_matrix_domination(mat: MatrixInstance) -> tuple[int, frozenset[tuple[int, int]]]:
    if len(mat.ones) > MAX_ONES:
        raise InstanceTooLarge(f"{len(mat.ones)} one-entries > {MAX_ONES}")
    ones = sorted(mat.ones)
    for r in range(len(ones) + 1):
        for combo in combinations(ones, r):
            if dominates_entries(mat, combo):
                return r, frozenset(combo)
    raise AssertionError("unreachable")
