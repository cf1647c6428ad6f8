"""Search-tree growth on forced-no instances (k = OPT - 1)."""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from . import generators as gen
from .eds import solve_eds
from .eds1 import solve_eds1
from .graph import Graph

GROWTH_BASE = {"eds": 2.3715, "eds1": 2.3147}
LEAF_SLACK = 1e4
SOLVERS: dict[str, Callable] = {"eds": solve_eds, "eds1": solve_eds1}


def optimum(g: Graph, solver: Callable = solve_eds1, limit: int | None = None) -> int | None:
    """Minimum eds size by increasing ``k`` until the solver says yes (``None`` past ``limit``)."""
    k = 0
    while limit is None or k <= limit:
        if solver(g, k).decision:
            return k
        k += 1
    return None


@dataclass
class GrowthRow:
    family: str
    n: int
    opt: int
    k: int
    algorithm: str
    leaves: int
    nodes: int
    seconds: float

    @property
    def bound(self) -> float:
        return LEAF_SLACK * GROWTH_BASE[self.algorithm] ** self.k

    @property
    def within_bound(self) -> bool:
        return self.leaves <= self.bound

    def as_dict(self) -> dict:
        return {
            "family": self.family, "n": self.n, "opt": self.opt, "k": self.k,
            "algorithm": self.algorithm, "leaves": self.leaves, "nodes": self.nodes,
            "bound": self.bound, "within_bound": self.within_bound,
            "seconds": round(self.seconds, 4),
        }


def family_instances(family: str, kmax: int, rng: random.Random, per_k: int = 1) -> Iterator[tuple[Graph, int]]:
    """Yield ``(graph, opt)`` with ``1 <= opt <= kmax + 1`` for the named family."""
    if family == "paths":
        # a path on n vertices needs ceil((n-1)/3) edges; take the longest per optimum
        for opt in range(1, kmax + 2):
            yield gen.path(3 * opt + 1), opt
    elif family == "cycles":
        for opt in range(1, kmax + 2):
            yield gen.cycle(3 * opt), opt
    elif family in ("cubic", "gnp"):
        found = {opt: 0 for opt in range(1, kmax + 2)}
        n = 4
        while n <= 4 * kmax + 12 and any(c < per_k for c in found.values()):
            for _ in range(3 * per_k):
                g = gen.random_cubic(n, rng) if family == "cubic" else gen.gnp(n, 0.3, rng)
                opt = optimum(g, limit=kmax + 1)
                if opt is not None and opt >= 1 and found[opt] < per_k:
                    found[opt] += 1
                    yield g, opt
            n += 2 if family == "cubic" else 1
    else:
        raise ValueError(f"unknown family {family!r}")


def run_growth(family: str, kmax: int, rng: random.Random, algorithms=("eds", "eds1"), per_k: int = 1) -> list[GrowthRow]:
    rows = []
    for g, opt in family_instances(family, kmax, rng, per_k):
        k = opt - 1
        for name in algorithms:
            t0 = time.perf_counter()
            rep = SOLVERS[name](g, k)
            dt = time.perf_counter() - t0
            if rep.decision:
                raise AssertionError(f"{name} found an eds below the optimum on {g}")
            rows.append(GrowthRow(family, g.n, opt, k, name, rep.stats.leaves, rep.stats.nodes, dt))
    return rows


def fit_growth(rows: list[GrowthRow]) -> dict[str, dict]:
    """Least-squares fit of ``log(leaves)`` against ``k`` per algorithm."""
    out = {}
    for name in sorted({r.algorithm for r in rows}):
        pts = [(r.k, math.log(max(r.leaves, 1))) for r in rows if r.algorithm == name]
        if len({k for k, _ in pts}) < 2:
            continue
        ks, logs = np.array(pts, dtype=float).T
        slope, intercept = np.polyfit(ks, logs, 1)
        out[name] = {
            "base": float(math.exp(slope)),
            "intercept": float(intercept),
            "points": len(pts),
            "claimed_base": GROWTH_BASE[name],
        }
    return out
