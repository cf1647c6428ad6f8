"""Linear-time kernel built around a greedy maximal matching.

Matched vertices whose neighbourhood outside the matching is too large
("overloaded") and matched vertices with a degree-1 neighbour are
*labeled*: every small edge dominating set must touch them.  Vertices whose
neighbours are all labeled are dropped, and every labeled vertex receives a
fresh pendant neighbour so the kernel itself forces the label.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .eds import Report
from .eds1 import solve_eds1
from .graph import Edge, Graph, Solution, is_eds, norm_edge
from .state import BranchStats, ContractViolation


class KernelStatus(enum.Enum):
    SOLVED_BY_M0 = "solved_by_m0"
    REJECTED = "rejected"
    KERNEL = "kernel"


@dataclass
class KernelResult:
    status: KernelStatus
    k: int
    source: Graph = field(repr=False)
    m0: frozenset[Edge]
    kernel_graph: Graph | None = None
    vm: frozenset[int] = frozenset()
    vstar: frozenset[int] = frozenset()
    x: dict[int, int] = field(default_factory=dict)
    overloaded: frozenset[int] = frozenset()
    labeled: frozenset[int] = frozenset()
    deleted: frozenset[int] = frozenset()
    # labeled original vertex -> kernel id of its pendant
    pendant_map: dict[int, int] = field(default_factory=dict)
    # kernel id -> original id, None for pendants
    origin: list[int | None] = field(default_factory=list)

    @property
    def m(self) -> int:
        return len(self.m0)

    @property
    def k_prime(self) -> int:
        return self.k

    def kernel_id(self, v: int) -> int:
        return self.origin.index(v)

    def roles(self) -> dict[str, list]:
        """Kernel ids of surviving originals and pendants, plus deleted original ids."""
        pendants = {kid: w for w, kid in self.pendant_map.items()}
        return {
            "original": [[kid, v] for kid, v in enumerate(self.origin) if v is not None],
            "pendant": [[kid, pendants[kid]] for kid in sorted(pendants)],
            "deleted": sorted(self.deleted),
        }


def greedy_maximal_matching(g: Graph) -> frozenset[Edge]:
    used: set[int] = set()
    out = []
    for u, v in g.sorted_edges():
        if u not in used and v not in used:
            used.update((u, v))
            out.append((u, v))
    return frozenset(out)


def kernelize(g: Graph, k: int) -> KernelResult:
    if k < 0:
        raise ValueError("k must be non-negative")
    m0 = greedy_maximal_matching(g)
    m = len(m0)
    if m <= k:
        return KernelResult(KernelStatus.SOLVED_BY_M0, k, g, m0)
    if m > 2 * k:
        # a matching is never larger than a vertex cover, and V(M) of an
        # eds with at most k edges is a vertex cover of size at most 2k
        return KernelResult(KernelStatus.REJECTED, k, g, m0)

    vm = {v for e in m0 for v in e}
    vstar = set(range(g.n)) - vm
    x = {v: sum(1 for w in g.neighbors(v) if w in vstar) for v in sorted(vm)}
    overloaded = {v for v in vm if m + x[v] > 2 * k}
    labeled = set(overloaded)

    deleted: set[int] = set()
    for v in sorted(vm):
        if v in deleted:
            continue
        ones = [w for w in g.neighbors(v) if g.degree(w) == 1 and w not in deleted]
        if ones:
            deleted.update(ones)
            labeled.add(v)

    for u in sorted(vstar):
        if u not in deleted and all(w in labeled for w in g.neighbors(u) if w not in deleted):
            deleted.add(u)

    survivors = [v for v in range(g.n) if v not in deleted]
    kid = {v: j for j, v in enumerate(survivors)}
    origin: list[int | None] = list(survivors)
    edges = [(kid[u], kid[v]) for u, v in g.sorted_edges() if u in kid and v in kid]
    pendant_map = {}
    for w in sorted(labeled):
        pendant_map[w] = len(origin)
        origin.append(None)
        edges.append((kid[w], pendant_map[w]))

    return KernelResult(
        KernelStatus.KERNEL, k, g, m0,
        kernel_graph=Graph(len(origin), edges),
        vm=frozenset(vm), vstar=frozenset(vstar), x=x,
        overloaded=frozenset(overloaded), labeled=frozenset(labeled),
        deleted=frozenset(deleted), pendant_map=pendant_map, origin=origin,
    )


def lift_solution(r: KernelResult, sol: Solution) -> Solution:
    """Map an eds of the kernel back to an eds of the source graph."""
    g = r.source
    if r.status is KernelStatus.REJECTED:
        raise ContractViolation("rejected instances have no kernel solutions")
    if r.status is KernelStatus.SOLVED_BY_M0:
        if not is_eds(g, sol.edges):
            raise ContractViolation("not an eds of the source graph")
        return sol
    kg = r.kernel_graph
    if not is_eds(kg, sol.edges):
        raise ContractViolation("not an eds of the kernel graph")
    owner = {kid: w for w, kid in r.pendant_map.items()}
    out: set[Edge] = set()
    for a, b in sol.edges:
        if a in owner or b in owner:
            w = owner[a] if a in owner else owner[b]
            out.add(norm_edge(w, g.neighbors(w)[0]))
        else:
            out.add(norm_edge(r.origin[a], r.origin[b]))
    lifted = Solution(frozenset(out))
    if not is_eds(g, lifted.edges):
        raise AssertionError("lifted solution does not dominate the source graph")
    return lifted


@dataclass
class KernelBoundsLedger:
    m: int
    k: int
    b: frozenset[int]
    q: int
    vstar1: frozenset[int]
    vstar2: frozenset[int]
    n_labeled: int
    e1: int
    e2: int
    e3: int
    n_kernel: int
    m_kernel: int
    vertex_bound: int
    edge_bound: int

    @property
    def bound_regime(self) -> bool:
        """True when ``k+1 <= m <= 2k-1``, where the quadratic vertex bound is proved."""
        return self.k + 1 <= self.m <= 2 * self.k - 1

    @property
    def within_vertex_bound(self) -> bool:
        return self.n_kernel <= self.vertex_bound

    @property
    def within_relaxed_bound(self) -> bool:
        # at m = 2k the counting chain only gives 4m = 8k
        return self.n_kernel <= max(self.vertex_bound, 8 * self.k)

    @property
    def within_edge_bound(self) -> bool:
        return self.m_kernel <= self.edge_bound

    def violations(self) -> list[str]:
        out = []
        if self.q > len(self.b) * (2 * self.k - self.m):
            out.append("q > |B|(2k-m)")
        if len(self.vstar1) > self.q:
            out.append("|V*1| > q")
        if len(self.vstar2) != self.n_labeled:
            out.append("|V*2| != |A'|")
        if self.e1 + self.e2 + self.e3 != self.m_kernel:
            out.append("E1+E2+E3 != |E|")
        return out

    def as_dict(self) -> dict:
        return {
            "m": self.m, "k": self.k, "B": len(self.b), "q": self.q,
            "Vstar1": len(self.vstar1), "Vstar2": len(self.vstar2), "labeled": self.n_labeled,
            "E1": self.e1, "E2": self.e2, "E3": self.e3,
            "vertices": self.n_kernel, "edges": self.m_kernel,
            "vertex_bound": self.vertex_bound, "edge_bound": self.edge_bound,
            "within_vertex_bound": self.within_vertex_bound,
            "within_edge_bound": self.within_edge_bound,
            "bound_regime": self.bound_regime,
            "violations": self.violations(),
        }


def kernel_stats(r: KernelResult) -> KernelBoundsLedger:
    if r.status is not KernelStatus.KERNEL:
        raise ContractViolation(f"no kernel ledger for status {r.status.value}")
    kg = r.kernel_graph
    k, m = r.k, r.m
    kept = {v: kid for kid, v in enumerate(r.origin) if v is not None}
    vm = {kept[v] for v in r.vm if v in kept}
    labeled = {kept[v] for v in r.labeled}
    b = vm - labeled
    vstar = set(range(kg.n)) - vm
    q = sum(r.x[r.origin[v]] for v in b)
    vstar1 = {w for v in b for w in kg.neighbors(v) if w in vstar}
    vstar2 = vstar - vstar1
    e1 = e2 = e3 = 0
    for u, v in kg.edges:
        if u in vm and v in vm:
            e1 += 1
        elif u in labeled or v in labeled:
            e2 += 1
        else:
            e3 += 1
    led = KernelBoundsLedger(
        m=m, k=k, b=frozenset(b), q=q, vstar1=frozenset(vstar1), vstar2=frozenset(vstar2),
        n_labeled=len(labeled), e1=e1, e2=e2, e3=e3, n_kernel=kg.n, m_kernel=kg.m,
        vertex_bound=2 * k * k + 2 * k,
        edge_bound=len(vm) * (len(vm) - 1) // 2
        + len(labeled) * len(vstar1) + len(vstar2)
        + len(b) * (2 * k - m),
    )
    return led


def solve_with_kernel(g: Graph, k: int, solver=None) -> Report:
    """Kernelize, solve the kernel, lift the witness back to ``g``.

    When the greedy matching already has at most ``k`` edges the answer is
    yes; the solver then runs on ``g`` itself so the witness is minimum.
    """
    if solver is None:
        solver = solve_eds1
    r = kernelize(g, k)
    if r.status is KernelStatus.REJECTED:
        return Report("auto", k, False, None, None, BranchStats())
    if r.status is KernelStatus.SOLVED_BY_M0:
        rep = solver(g, k)
        if not rep.decision:
            raise AssertionError("solver rejected an instance certified by M0")
        rep.algorithm = "auto"
        return rep
    rep = solver(r.kernel_graph, k)
    rep.algorithm = "auto"
    if rep.decision:
        rep.witness = lift_solution(r, rep.witness)
        rep.best_size = rep.witness.size
    return rep
