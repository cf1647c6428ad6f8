"""Refined solver: degree->=4 branching, frozen 2-paths, then the degree-3 phase.

Once no undecided vertex has degree four or more, the current 2-path
components are frozen as ``P`` and the rest of the undecided graph is
cleared by :func:`branch3_step`.  The budget spent in that phase (``p0``)
tightens the bound on how many 2-paths may be left unsigned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .eds import Best, Move, Report, cycle_moves, enumerate_signings, make_children, vertex_moves
from .graph import Graph
from .state import (
    BranchStats,
    ContractViolation,
    MacroGroup,
    Phase,
    Scope,
    SearchState,
    Tail,
    bits,
    components,
    find_4cycle,
    init_state,
    shape_of,
    two_path_triple,
)

STAR_RULES = frozenset({"3.1", "3.2", "3.3", "3.4", "3.5", "3.6"})


@dataclass
class Branch3Action:
    rule: str
    target: tuple[int, ...]
    moves: list[Move]
    required: tuple[int, int]
    degree: int = 0
    group: MacroGroup | None = None


def _tails(masks: tuple[int, ...], scope: int, deg: dict[int, int]) -> Iterator[Tail]:
    for v1 in bits(scope):
        if deg[v1] != 2:
            continue
        a, b = bits(masks[v1] & scope)
        if deg[a] == 1 and deg[b] > 1:
            yield Tail(a, v1, b)
        elif deg[b] == 1 and deg[a] > 1:
            yield Tail(b, v1, a)


def select_branch3(s: SearchState) -> Branch3Action:
    """First applicable Branch3 rule on ``G[U2']``; degrees are measured there."""
    masks = s.graph.masks
    scope = s.scope_mask(Scope.U2_RESTRICTED)
    if not scope:
        raise ContractViolation("branch3 step with empty U2'")
    deg = {v: (masks[v] & scope).bit_count() for v in bits(scope)}
    if max(deg.values()) >= 4:
        raise ContractViolation("branch3 step with a degree >= 4 vertex")

    for comp in components(masks, scope):
        kind = shape_of(masks, comp).kind
        if kind == "clique":
            raise ContractViolation("clique component left unswept in U2'")
        if kind == "two_path":
            v0, v1, v2 = two_path_triple(masks, comp)
            return Branch3Action("two_path", (v0, v1, v2), vertex_moves(v1), (1, 2), 2)

    def deg1_neighbours(v: int) -> int:
        return sum(1 for w in bits(masks[v] & scope) if deg[w] == 1)

    cubic = [v for v in bits(scope) if deg[v] == 3]
    for v in cubic:
        if deg1_neighbours(v) >= 2:
            return Branch3Action("3.1", (v,), vertex_moves(v), (1, 3), 3)
    tails = list(_tails(masks, scope, deg))
    for rule, want in (("3.2", 2), ("3.3", 3)):
        for t in tails:
            if deg[t.v2] == want:
                return Branch3Action(rule, tuple(t), vertex_moves(t.v2), (2, 2), want)
    for v in cubic:
        if deg1_neighbours(v) == 1:
            return Branch3Action("3.4", (v,), vertex_moves(v), (1, 3), 3)
    cyc = find_4cycle(s, Scope.U2_RESTRICTED)
    if cyc is not None:
        return Branch3Action("3.5", cyc, cycle_moves(cyc), (2, 2), 2)
    for v in cubic:
        if any(deg[w] == 2 for w in bits(masks[v] & scope)):
            return Branch3Action("3.6", (v,), vertex_moves(v), (1, 3), 3)
    top = max(deg.values())
    v = next(x for x in bits(scope) if deg[x] == top)
    return Branch3Action("3.7", (v,), vertex_moves(v), (1, top), top)


def branch3_step(s: SearchState) -> tuple[Branch3Action, list[SearchState]]:
    """Select the Branch3 rule for ``s`` and build its (swept) children."""
    if s.phase is not Phase.BRANCH3:
        raise ContractViolation("branch3_step outside the degree-3 phase")
    action = select_branch3(s)
    children = make_children(s, action.rule, action.moves, action.required, Scope.U2_RESTRICTED)
    return action, children


def freeze_paths(s: SearchState) -> None:
    """Enter the degree-3 phase: record ``p'`` and freeze the 2-path components."""
    masks = s.graph.masks
    frozen = []
    mask = 0
    for comp in components(masks, s.u2):
        if shape_of(masks, comp).kind == "two_path":
            frozen.append(two_path_triple(masks, comp))
            mask |= comp
    s.phase = Phase.BRANCH3
    s.p_snapshot = s.p
    s.frozen_paths = tuple(frozen)
    s.frozen = mask


def _acted(action: Branch3Action) -> int:
    out = 0
    for move in action.moves:
        for _, v in move:
            out |= 1 << v
    return out


class _EDS1:
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
        masks = s.graph.masks
        top_v, top_d = -1, 3
        for v in bits(s.u2):
            d = (masks[v] & s.u2).bit_count()
            if d > top_d:
                top_v, top_d = v, d
        if top_v >= 0:
            for child in make_children(s, "degree4", vertex_moves(top_v), (1, top_d), Scope.U2):
                if child.p >= 0:
                    self.node(child)
            return
        freeze_paths(s)
        self.branch3(s, None)

    def branch3(self, s: SearchState, group: MacroGroup | None) -> None:
        self.stats.nodes += 1
        if self.debug:
            s.check_invariants()
            self._check_frozen(s)
        if s.p < 0 or not s.scope_mask(Scope.U2_RESTRICTED):
            if group is not None:
                group.close(s.p)
            if s.p >= 0:
                self.finish(s)
            return

        action = select_branch3(s)
        if group is not None and (
            action.rule == "two_path"
            or (group.kind == "cycle" and _acted(action) & ~group.watch == 0)
        ):
            action.group = group
        else:
            if group is not None:
                group.close(s.p)
            action.group = self._open_group(s, action)
        if action.group is not None:
            action.group.trace.append(f"{action.rule}{list(action.target)}@p={s.p}")

        children = make_children(s, action.rule, action.moves, action.required, Scope.U2_RESTRICTED)
        for child in children:
            if child.p < 0:
                if action.group is not None:
                    action.group.close(child.p)
                continue
            self.branch3(child, action.group)

    def _open_group(self, s: SearchState, action: Branch3Action) -> MacroGroup | None:
        if action.rule in STAR_RULES:
            grp = MacroGroup(action.rule, s.p)
        elif action.rule == "3.7" and action.degree == 2:
            v = action.target[0]
            scope = s.scope_mask(Scope.U2_RESTRICTED)
            comp = next(c for c in components(s.graph.masks, scope) if c >> v & 1)
            grp = MacroGroup("3.7", s.p, kind="cycle", watch=comp)
        else:
            return None
        self.stats.groups.append(grp)
        return grp

    def finish(self, s: SearchState) -> None:
        p0 = s.p_snapshot - s.p
        self.stats.p0_hist[p0] += 1
        # |M2| <= k - p0/2 and |M2| is an integer
        cap = (2 * self.k - p0) // 2
        enumerate_signings(s, self.best, cap=cap)

    def _check_frozen(self, s: SearchState) -> None:
        if s.frozen & ~s.u2:
            raise ContractViolation("a frozen 2-path vertex was relabelled")
        rest = s.scope_mask(Scope.U2_RESTRICTED)
        masks = s.graph.masks
        if any(masks[v] & rest for v in bits(s.frozen)):
            raise ContractViolation("frozen 2-path adjacent to U2'")


def solve_eds1(g: Graph, k: int, *, debug: bool = False, stats: BranchStats | None = None) -> Report:
    """Same contract as :func:`edsolve.eds.solve_eds`, with the tighter search."""
    stats = stats if stats is not None else BranchStats()
    solver = _EDS1(k, stats, debug)
    s = init_state(g, k, stats)
    s.sweep_cliques(Scope.U2)
    solver.node(s)
    return solver.best.report("eds1", k, stats)
