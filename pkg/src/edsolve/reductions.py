"""Minimum maximal matching and 0/1 matrix domination, both solved as edge domination."""

from __future__ import annotations

from collections import Counter

from .eds1 import solve_eds1
from .graph import Edge, Graph, MatrixInstance, endpoints, is_eds, is_matching, is_maximal_matching, norm_edge
from .state import ContractViolation


def eds_to_maximal_matching(g: Graph, eds) -> frozenset[Edge]:
    """Turn an edge dominating set into a maximal matching that is no larger.

    While some vertex ``u`` carries two solution edges, take one of them,
    ``uw``.  If dropping it leaves every edge at ``w`` dominated, drop it;
    otherwise swap it for the lowest undominated edge ``wz``.
    """
    f = {norm_edge(*e) for e in eds}
    if not is_eds(g, f):
        raise ContractViolation("input is not an edge dominating set")
    size_in = len(f)
    while not is_matching(f):
        load = Counter(v for e in f for v in e)
        u = min(v for v, c in load.items() if c >= 2)
        e = min(x for x in f if u in x)
        w = e[1] if e[0] == u else e[0]
        rest = f - {e}
        covered = endpoints(rest)
        loose = [z for z in g.neighbors(w) if w not in covered and z not in covered]
        if loose:
            rest.add(norm_edge(w, loose[0]))
        f = rest
    out = frozenset(f)
    if not is_maximal_matching(g, out) or len(out) > size_in:
        raise AssertionError("matching transformation broke its contract")
    return out


def solve_mmm(g: Graph, k: int) -> frozenset[Edge] | None:
    """A maximal matching with at most ``k`` edges, or ``None``."""
    rep = solve_eds1(g, k)
    if not rep.decision:
        return None
    return eds_to_maximal_matching(g, rep.witness.edges)


def matrix_graph(mat: MatrixInstance) -> Graph:
    """Bipartite graph: rows are ``0..rows-1``, column ``c`` is ``rows + c``."""
    return Graph(mat.rows + mat.cols, [(r, mat.rows + c) for r, c in mat.ones])


def solve_matrix_domination(mat: MatrixInstance, k: int) -> frozenset[tuple[int, int]] | None:
    """At most ``k`` one-entries sharing a row or column with every one-entry, or ``None``."""
    g = matrix_graph(mat)
    rep = solve_eds1(g, k)
    if not rep.decision:
        return None
    return frozenset((u, v - mat.rows) for u, v in rep.witness.edges)
