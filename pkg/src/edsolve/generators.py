"""Instance families for tests, benchmarks and experiment scripts."""

from __future__ import annotations

import os
import random
from itertools import combinations
from typing import Iterator

import networkx as nx

from .graph import Graph, MatrixInstance
from .state import SearchState, components, init_state, is_clique


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_edges(count: int) -> Graph:
    return Graph(2 * count, [(2 * i, 2 * i + 1) for i in range(count)])


def empty(n: int) -> Graph:
    return Graph(n)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def from_networkx(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h)
    return Graph(h.number_of_nodes(), h.edges())


def gnp(n: int, prob: float, rng: random.Random) -> Graph:
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < prob])


def random_cubic(n: int, rng: random.Random) -> Graph:
    return from_networkx(nx.random_regular_graph(3, n, seed=rng.randrange(2**32)))


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on ``n`` vertices (``2**C(n,2)`` of them)."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield Graph(n, [pairs[j] for j in range(len(pairs)) if code >> j & 1])


def random_matrix(rows: int, cols: int, density: float, rng: random.Random) -> MatrixInstance:
    ones = frozenset(
        (r, c) for r in range(rows) for c in range(cols) if rng.random() < density
    )
    return MatrixInstance(rows, cols, ones)


def seeded_rng(default: int = 0) -> random.Random:
    """RNG seeded from ``EDSOLVE_SEED`` when set."""
    return random.Random(int(os.environ.get("EDSOLVE_SEED", default)))


def random_leaf_state(g: Graph, rng: random.Random, k: int | None = None) -> SearchState:
    """A random valid state with empty U2: I independent, N(I) in C, U1 = clique components.

    Undecided components that are not cliques lose random vertices to C
    until every one is a clique.
    """
    order = list(range(g.n))
    rng.shuffle(order)
    excluded = 0
    blocked = 0
    for v in order:
        if not blocked >> v & 1 and rng.random() < 0.3:
            excluded |= 1 << v
            blocked |= (1 << v) | g.masks[v]
    cover = 0
    for v in range(g.n):
        if excluded >> v & 1:
            cover |= g.masks[v]
        elif not cover >> v & 1 and rng.random() < 0.3:
            cover |= 1 << v
    cover &= ~excluded
    while True:
        rest = ((1 << g.n) - 1) & ~(cover | excluded)
        bad = [q for q in components(g.masks, rest) if not is_clique(g.masks, q)]
        if not bad:
            break
        members = [v for v in range(g.n) if bad[0] >> v & 1]
        cover |= 1 << rng.choice(members)
    s = init_state(g, k if k is not None else g.n)
    s.c, s.i, s.u2 = cover, excluded, 0
    s.cliques = components(g.masks, rest)
    s.p = 2 * s.k - cover.bit_count() - sum(q.bit_count() - 1 for q in s.cliques)
    return s
