"""Branch-and-reduce solver for parameterized edge dominating set.

Branches on tails, 4-cycles and maximum-degree vertices of the undecided
graph until every undecided component is a 2-path, then enumerates which of
those 2-paths have their middle vertex outside the cover.  Every leaf is
finished by :func:`edsolve.matching.min_cied`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Sequence

from .graph import Graph, Solution
from .matching import min_cied
from .state import (
    BranchStats,
    Phase,
    Scope,
    SearchState,
    bits,
    components,
    find_4cycle,
    find_tail,
    init_state,
    shape_of,
    two_path_triple,
)

# (operation, vertex) pairs applied to a cloned child
Move = Sequence[tuple[str, int]]


@dataclass
class Report:
    algorithm: str
    k: int
    decision: bool
    witness: Solution | None
    best_size: int | None
    stats: BranchStats = field(repr=False)
    y_used: int | None = None
    z_used: int | None = None


class Best:
    """Smallest leaf candidate seen so far (first one wins ties)."""

    __slots__ = ("solution", "y", "z")

    def __init__(self):
        self.solution: Solution | None = None
        self.y: int | None = None
        self.z: int | None = None

    def fold(self, sol: Solution | None, y: int, z: int) -> None:
        if sol is not None and (self.solution is None or sol.size < self.solution.size):
            self.solution, self.y, self.z = sol, y, z

    def report(self, algorithm: str, k: int, stats: BranchStats) -> Report:
        sol = self.solution
        if sol is not None and sol.size <= k:
            return Report(algorithm, k, True, sol, sol.size, stats, self.y, self.z)
        return Report(algorithm, k, False, None, None, stats)


def apply_move(s: SearchState, move: Move) -> None:
    for op, v in move:
        if op == "in":
            s.include_vertex(v)
        else:
            s.exclude_vertex(v)


def make_children(
    s: SearchState, rule: str, moves: Sequence[Move], required: Sequence[int], scope: Scope
) -> list[SearchState]:
    """Clone, apply each move, sweep, and record the budget drop of every child."""
    children = []
    for move in moves:
        child = s.clone()
        apply_move(child, move)
        child.sweep_cliques(scope)
        children.append(child)
    s.stats.record(rule, [s.p - c.p for c in children], required)
    return children


def vertex_moves(v: int) -> list[Move]:
    return [[("in", v)], [("out", v)]]


def cycle_moves(cyc: tuple[int, int, int, int]) -> list[Move]:
    a, b, c, d = cyc
    return [[("in", a), ("in", c)], [("in", b), ("in", d)]]


def enumerate_signings(
    s: SearchState, best: Best, cap: int | None = None, on_leaf: Callable | None = None
) -> None:
    """Enumerate unsigned 2-path subsets and solve every resulting leaf.

    ``cap`` bounds the number of solution edges touching the 2-paths
    (``k`` for the plain solver, ``floor((2k - p0) / 2)`` after the degree-3
    phase).
    """
    if cap is None:
        cap = s.k
    masks = s.graph.masks
    comps = components(masks, s.u2)
    for comp in comps:
        if shape_of(masks, comp).kind != "two_path":
            raise AssertionError("enumeration entered with a non 2-path component")
    paths = [two_path_triple(masks, comp) for comp in comps]
    y = len(paths)
    if y > min(s.p, cap):
        return
    z = min(s.p - y, cap - y)
    for size in range(z + 1):
        for unsigned in combinations(range(y), size):
            leaf = s.clone()
            leaf.phase = Phase.ENUMERATION
            picked = set(unsigned)
            for j, (v0, v1, v2) in enumerate(paths):
                if j in picked:
                    leaf.include_vertex(v0)
                    leaf.include_vertex(v2)
                    leaf.defer_singleton(v1)
                else:
                    leaf.include_vertex(v1)
                    leaf.defer_singleton(v0)
                    leaf.defer_singleton(v2)
            s.stats.subsets += 1
            s.stats.leaves += 1
            sol = min_cied(leaf)
            if on_leaf is not None:
                on_leaf(leaf, sol)
            best.fold(sol, y, z)


def _pick_max_degree(s: SearchState) -> tuple[int, int] | None:
    """Max-degree vertex (lowest id) of the lowest-id component that is not a 2-path."""
    masks = s.graph.masks
    for comp in components(masks, s.u2):
        if shape_of(masks, comp).kind == "two_path":
            continue
        best_v, best_d = -1, -1
        for v in bits(comp):
            d = (masks[v] & comp).bit_count()
            if d > best_d:
                best_v, best_d = v, d
        return best_v, best_d
    return None


class _EDS:
    def __init__(self, k: int, stats: BranchStats, debug: bool):
        self.k = k
        self.stats = stats
        self.debug = debug
        self.best = Best()

    def node(self, s: SearchState) -> None:
        self.stats.nodes += 1
        if self.debug:
            s.check_invariants()
        if s.p < 0:
            return
        tail = find_tail(s)
        if tail is not None:
            self.expand(s, "tail", vertex_moves(tail.v2), (2, 2))
            return
        cyc = find_4cycle(s)
        if cyc is not None:
            self.expand(s, "four_cycle", cycle_moves(cyc), (2, 2))
            return
        picked = _pick_max_degree(s)
        if picked is not None:
            v, d = picked
            self.expand(s, "max_degree", vertex_moves(v), (1, d))
            return
        enumerate_signings(s, self.best)

    def expand(self, s: SearchState, rule: str, moves, required) -> None:
        for child in make_children(s, rule, moves, required, Scope.U2):
            if child.p >= 0:
                self.node(child)


def solve_eds(g: Graph, k: int, *, debug: bool = False, stats: BranchStats | None = None) -> Report:
    """Decide whether ``g`` has an edge dominating set of size at most ``k``.

    The search is exhaustive, so a yes-answer carries a minimum-size witness.
    """
    stats = stats if stats is not None else BranchStats()
    solver = _EDS(k, stats, debug)
    s = init_state(g, k, stats)
    s.sweep_cliques(Scope.U2)
    solver.node(s)
    return solver.best.report("eds", k, stats)
