"""Partition state (C, I, U1, U2) of the branch-and-reduce search.

Vertex sets are int bitmasks over vertex ids.  ``U1`` is kept as a list of
clique masks, one per deferred clique component.  The budget ``p`` is the
number of vertex-cover endpoints still allowed: every vertex moved into
``C`` costs one, every deferred clique ``Q`` costs ``|Q| - 1``.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from .graph import Graph


class ContractViolation(AssertionError):
    """A primitive was called outside its precondition."""


class Label(enum.Enum):
    IN_COVER = "C"
    EXCLUDED = "I"
    UNDECIDED1 = "U1"
    UNDECIDED2 = "U2"


class Scope(enum.Enum):
    U2 = "U2"
    # U2 minus the frozen 2-paths; the working set of the degree-3 phase
    U2_RESTRICTED = "U2'"


class Phase(enum.Enum):
    BRANCHING = "branching"
    BRANCH3 = "branch3"
    ENUMERATION = "enumeration"


def bits(mask: int) -> Iterator[int]:
    """Vertex ids in ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def components(masks: tuple[int, ...], scope: int) -> list[int]:
    """Connected components of the subgraph induced by ``scope``, by lowest id."""
    out = []
    rest = scope
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            nb = 0
            for v in bits(frontier):
                nb |= masks[v]
            frontier = nb & rest & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


def is_clique(masks: tuple[int, ...], comp: int) -> bool:
    size = comp.bit_count()
    return all((masks[v] & comp).bit_count() == size - 1 for v in bits(comp))


# -- instrumentation ---------------------------------------------------------

class NodeRecord(NamedTuple):
    rule: str
    deltas: tuple[int, ...]
    required: tuple[int, ...]


@dataclass
class MacroGroup:
    """Branch3 action merged with the follow-up branchings it triggers."""

    rule: str
    root_p: int
    kind: str = "star"  # "star" (3.1-3.6) or "cycle" (3.7 on a degree-2 vertex)
    watch: int = 0
    deltas: list[int] = field(default_factory=list)
    trace: list[str] = field(default_factory=list)

    def close(self, p: int) -> None:
        self.deltas.append(self.root_p - p)

    def weight(self, base: float = 1.5214) -> float:
        return sum(base ** -d for d in self.deltas)


@dataclass
class BranchStats:
    nodes: int = 0
    leaves: int = 0
    subsets: int = 0
    keep_records: bool = True
    records: list[NodeRecord] = field(default_factory=list)
    rule_counts: Counter = field(default_factory=Counter)
    violations: list[NodeRecord] = field(default_factory=list)
    groups: list[MacroGroup] = field(default_factory=list)
    p0_hist: Counter = field(default_factory=Counter)

    def record(self, rule: str, deltas, required) -> None:
        rec = NodeRecord(rule, tuple(deltas), tuple(required))
        self.rule_counts[rule] += 1
        if any(d < 0 for d in rec.deltas) or any(
            d < r for d, r in zip(rec.deltas, rec.required)
        ):
            self.violations.append(rec)
        if self.keep_records:
            self.records.append(rec)

    def merge(self, other: "BranchStats") -> None:
        self.nodes += other.nodes
        self.leaves += other.leaves
        self.subsets += other.subsets
        self.records.extend(other.records)
        self.rule_counts.update(other.rule_counts)
        self.violations.extend(other.violations)
        self.groups.extend(other.groups)
        self.p0_hist.update(other.p0_hist)

    def summary(self, trace: bool = False) -> dict:
        out = {
            "nodes": self.nodes,
            "leaves": self.leaves,
            "subsets": self.subsets,
            "rules": dict(sorted(self.rule_counts.items())),
            "violations": len(self.violations),
            "p0_hist": {str(k): v for k, v in sorted(self.p0_hist.items())},
        }
        if trace:
            out["deltas"] = [[r.rule, list(r.deltas)] for r in self.records]
        return out


# -- structures --------------------------------------------------------------

class Tail(NamedTuple):
    v0: int
    v1: int
    v2: int


@dataclass(frozen=True)
class Shape:
    kind: str  # clique | two_path | path | cycle | other
    param: int  # clique size, path/cycle length in edges, or max degree

    def __str__(self) -> str:
        return f"{self.kind}({self.param})"


# -- the state ---------------------------------------------------------------

class SearchState:
    """Five-tuple ``(G, C, I, U1, U2)`` plus budget and phase bookkeeping.

    Children are produced with :meth:`clone`; a parent is never mutated by
    work done in a child.
    """

    __slots__ = (
        "graph", "k", "p", "c", "i", "u2", "cliques",
        "phase", "p_snapshot", "frozen_paths", "frozen", "stats",
    )

    def __init__(self, graph: Graph, k: int, stats: BranchStats | None = None):
        if k < 0:
            raise ValueError("k must be non-negative")
        self.graph = graph
        self.k = k
        self.p = 2 * k
        self.c = 0
        self.i = 0
        self.u2 = (1 << graph.n) - 1
        self.cliques: list[int] = []
        self.phase = Phase.BRANCHING
        self.p_snapshot: int | None = None
        self.frozen_paths: tuple[tuple[int, int, int], ...] = ()
        self.frozen = 0
        self.stats = stats if stats is not None else BranchStats()

    def clone(self) -> "SearchState":
        s = SearchState.__new__(SearchState)
        s.graph = self.graph
        s.k = self.k
        s.p = self.p
        s.c = self.c
        s.i = self.i
        s.u2 = self.u2
        s.cliques = list(self.cliques)
        s.phase = self.phase
        s.p_snapshot = self.p_snapshot
        s.frozen_paths = self.frozen_paths
        s.frozen = self.frozen
        s.stats = self.stats
        return s

    # -- views ---------------------------------------------------------------

    @property
    def u1(self) -> int:
        out = 0
        for q in self.cliques:
            out |= q
        return out

    def label(self, v: int) -> Label:
        b = 1 << v
        if self.c & b:
            return Label.IN_COVER
        if self.i & b:
            return Label.EXCLUDED
        if self.u2 & b:
            return Label.UNDECIDED2
        return Label.UNDECIDED1

    @property
    def labels(self) -> list[Label]:
        return [self.label(v) for v in range(self.graph.n)]

    def clique_sets(self) -> list[frozenset[int]]:
        return [frozenset(bits(q)) for q in self.cliques]

    def scope_mask(self, scope: Scope = Scope.U2) -> int:
        if scope is Scope.U2:
            return self.u2
        return self.u2 & ~self.frozen

    def degree(self, v: int, scope: int) -> int:
        return (self.graph.masks[v] & scope).bit_count()

    # -- primitives ----------------------------------------------------------

    def include_vertex(self, v: int) -> int:
        b = 1 << v
        if not self.u2 & b:
            raise ContractViolation(f"include_vertex({v}): label is {self.label(v).value}")
        self.u2 &= ~b
        self.c |= b
        self.p -= 1
        return 1

    def exclude_vertex(self, v: int) -> int:
        b = 1 << v
        if not self.u2 & b:
            raise ContractViolation(f"exclude_vertex({v}): label is {self.label(v).value}")
        nb = self.graph.masks[v]
        if nb & self.u1:
            raise ContractViolation(f"exclude_vertex({v}): neighbour in U1")
        moved = nb & self.u2
        self.u2 &= ~(b | moved)
        self.i |= b
        self.c |= moved
        dp = moved.bit_count()
        self.p -= dp
        return dp

    def sweep_cliques(self, scope: Scope = Scope.U2) -> int:
        masks = self.graph.masks
        dp = 0
        while True:
            found = [q for q in components(masks, self.scope_mask(scope)) if is_clique(masks, q)]
            if not found:
                return dp
            for q in found:
                self.u2 &= ~q
                self.cliques.append(q)
                dp += q.bit_count() - 1
            self.p -= sum(q.bit_count() - 1 for q in found)

    def defer_singleton(self, v: int) -> None:
        """Move an undecided vertex into U1 as a one-vertex clique (no charge)."""
        b = 1 << v
        if not self.u2 & b:
            raise ContractViolation(f"defer_singleton({v}): label is {self.label(v).value}")
        self.u2 &= ~b
        self.cliques.append(b)

    # -- checks --------------------------------------------------------------

    def check_invariants(self) -> None:
        g = self.graph
        masks = g.masks
        full = (1 << g.n) - 1
        u1 = 0
        for q in self.cliques:
            if q & u1:
                raise ContractViolation("U1 cliques overlap")
            u1 |= q
        parts = (self.c, self.i, u1, self.u2)
        if sum(x.bit_count() for x in parts) != g.n or (self.c | self.i | u1 | self.u2) != full:
            raise ContractViolation("labels do not partition V")
        for v in bits(self.i):
            if masks[v] & self.i:
                raise ContractViolation("I is not independent")
            if masks[v] & (u1 | self.u2):
                raise ContractViolation(f"undecided vertex adjacent to excluded {v}")
        undecided = u1 | self.u2
        for q in self.cliques:
            if not is_clique(masks, q):
                raise ContractViolation("U1 entry is not a clique")
            for v in bits(q):
                if masks[v] & undecided & ~q:
                    raise ContractViolation("U1 entry is not a clique component")
        expected = 2 * self.k - self.c.bit_count() - sum(q.bit_count() - 1 for q in self.cliques)
        if self.p != expected:
            raise ContractViolation(f"budget p={self.p}, expected {expected}")
        seen = 0
        for v0, v1, v2 in self.frozen_paths:
            tri = mask_of((v0, v1, v2))
            if tri & seen:
                raise ContractViolation("frozen paths overlap")
            seen |= tri
            if not (g.has_edge(v0, v1) and g.has_edge(v1, v2)) or g.has_edge(v0, v2):
                raise ContractViolation("frozen path is not an induced 2-path")

    def __repr__(self) -> str:
        return (
            f"SearchState(p={self.p}, k={self.k}, C={list(bits(self.c))}, "
            f"I={list(bits(self.i))}, U1={[list(bits(q)) for q in self.cliques]}, "
            f"U2={list(bits(self.u2))}, phase={self.phase.value})"
        )


def init_state(graph: Graph, k: int, stats: BranchStats | None = None) -> SearchState:
    return SearchState(graph, k, stats)


# -- structure detection -----------------------------------------------------

def find_tail(s: SearchState, scope: Scope = Scope.U2) -> Tail | None:
    """Smallest tail by ``(v1, v0, v2)`` in the scoped undecided subgraph."""
    masks = s.graph.masks
    sm = s.scope_mask(scope)
    for v1 in bits(sm):
        nb = masks[v1] & sm
        if nb.bit_count() != 2:
            continue
        a, b = bits(nb)
        da = (masks[a] & sm).bit_count()
        db = (masks[b] & sm).bit_count()
        if da == 1 and db > 1:
            return Tail(a, v1, b)
        if db == 1 and da > 1:
            return Tail(b, v1, a)
    return None


def find_4cycle(s: SearchState, scope: Scope = Scope.U2) -> tuple[int, int, int, int] | None:
    """Smallest 4-cycle ``(a, b, c, d)`` in cycle order, ranked by sorted ids.

    Chords are allowed.
    """
    masks = s.graph.masks
    sm = s.scope_mask(scope)
    for a in bits(sm):
        allowed = sm & ~((1 << (a + 1)) - 1)  # vertices above a
        nbs = list(bits(masks[a] & allowed))
        best = None
        for x, b in enumerate(nbs):
            for d in nbs[x + 1:]:
                common = masks[b] & masks[d] & allowed
                for c in bits(common):
                    key = tuple(sorted((b, c, d)))
                    if best is None or key < best[0]:
                        best = (key, (a, b, c, d))
        if best is not None:
            return best[1]
    return None


def shape_of(masks: tuple[int, ...], comp: int) -> Shape:
    size = comp.bit_count()
    degs = [(masks[v] & comp).bit_count() for v in bits(comp)]
    if all(d == size - 1 for d in degs):
        return Shape("clique", size)
    maxdeg = max(degs)
    if maxdeg <= 2:
        n_edges = sum(degs) // 2
        if n_edges == size - 1:
            return Shape("two_path", 2) if size == 3 else Shape("path", size - 1)
        return Shape("cycle", size)
    return Shape("other", maxdeg)


def classify_components(s: SearchState, scope: Scope = Scope.U2) -> list[tuple[frozenset[int], Shape]]:
    masks = s.graph.masks
    return [
        (frozenset(bits(comp)), shape_of(masks, comp))
        for comp in components(masks, s.scope_mask(scope))
    ]


def two_path_triple(masks: tuple[int, ...], comp: int) -> tuple[int, int, int]:
    """Return ``(v0, v1, v2)`` for a 2-path component, middle vertex in the centre."""
    mid = next(v for v in bits(comp) if (masks[v] & comp).bit_count() == 2)
    v0, v2 = bits(comp & ~(1 << mid))
    return (v0, mid, v2)
