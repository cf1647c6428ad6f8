"""Maximum matching in general graphs and the minimum (C, I)-eds at a leaf."""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .graph import Edge, Graph, Solution, norm_edge
from .state import ContractViolation, SearchState, bits


def _max_matching(adj: Sequence[Sequence[int]]) -> list[int]:
    """Edmonds' blossom-shrinking augmenting search; returns ``mate`` (-1 = exposed)."""
    n = len(adj)
    mate = [-1] * n
    # greedy warm start; maximality is still certified by the search below
    for v in range(n):
        if mate[v] == -1:
            for w in adj[v]:
                if mate[w] == -1:
                    mate[v], mate[w] = w, v
                    break

    def find_path(root: int) -> int:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if mate[a] == -1:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        return _augment(to, parent)
                    used[mate[to]] = True
                    queue.append(mate[to])
        return -1

    def _augment(v: int, parent: list[int]) -> int:
        end = v
        while v != -1:
            pv = parent[v]
            nxt = mate[pv]
            mate[v], mate[pv] = pv, v
            v = nxt
        return end

    for root in range(n):
        if mate[root] == -1 and adj[root]:
            find_path(root)
    return mate


def maximum_matching(g: Graph) -> set[Edge]:
    mate = _max_matching(g.adjacency)
    return {(v, w) for v, w in enumerate(mate) if v < w}


def min_cied(s: SearchState) -> Solution | None:
    """Minimum (C, I)-eds of a state with no U2 vertices, or ``None`` if infeasible.

    Every C vertex must be an endpoint, no I vertex may be, and each U1
    clique may leave at most one vertex uncovered.  One ghost vertex per
    clique, adjacent to the whole clique, turns the choice of the uncovered
    vertex into part of a single maximum matching problem; the answer has
    ``|C| + |U1| - mu`` edges where ``mu`` is that matching's size.
    """
    if s.u2:
        raise ContractViolation("min_cied called with undecided U2 vertices")
    g = s.graph
    masks = g.masks
    n = g.n
    u1 = s.u1
    allowed = s.c | u1
    cliques = s.cliques

    adj: list[list[int]] = [[] for _ in range(n + len(cliques))]
    for v in bits(allowed):
        adj[v] = list(bits(masks[v] & allowed))
    for j, q in enumerate(cliques):
        ghost = n + j
        adj[ghost] = list(bits(q))
        for v in bits(q):
            adj[v].append(ghost)
    mate = _max_matching(adj)
    mu = sum(1 for v, w in enumerate(mate) if v < w)

    # make every ghost matched without changing the matching size
    for j, q in enumerate(cliques):
        ghost = n + j
        if mate[ghost] == -1:
            v = next(x for x in bits(q) if mate[x] != -1)
            u = mate[v]
            mate[u] = -1
            mate[v], mate[ghost] = ghost, v
    exempt = 0
    for j in range(len(cliques)):
        exempt |= 1 << mate[n + j]
    required = allowed & ~exempt

    chosen: set[Edge] = set()
    covered = 0
    for v in bits(required):
        w = mate[v]
        if w != -1 and w < n and required >> w & 1:
            covered |= 1 << v
            if v < w:
                chosen.add((v, w))
    for v in bits(required & ~covered):
        if covered >> v & 1:
            continue
        nb = masks[v] & allowed
        if not nb:
            return None
        pick = nb & required & ~covered or nb
        w = (pick & -pick).bit_length() - 1
        chosen.add(norm_edge(v, w))
        covered |= (1 << v) | (1 << w)

    expected = s.c.bit_count() + u1.bit_count() - mu
    if len(chosen) != expected:
        raise AssertionError(f"leaf size {len(chosen)} disagrees with matching bound {expected}")
    return Solution(frozenset(chosen))
