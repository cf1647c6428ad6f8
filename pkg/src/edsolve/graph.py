"""Graph and 0/1 matrix data model, text formats and the edge-domination check."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

Edge = tuple[int, int]


class ParseError(ValueError):
    """Malformed or rejected instance text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Besides the sorted adjacency lists, every vertex carries its
    neighbourhood as an int bitmask (``masks[v]``); the search code works on
    those.
    """

    __slots__ = ("n", "edges", "adjacency", "masks")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        es = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            es.add(norm_edge(u, v))
        adj: list[list[int]] = [[] for _ in range(n)]
        masks = [0] * n
        for u, v in es:
            adj[u].append(v)
            adj[v].append(u)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self.edges: frozenset[Edge] = frozenset(es)
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self.masks: tuple[int, ...] = tuple(masks)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self.masks[u] >> v & 1)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def induced(self, vertices: Iterable[int]) -> list[Edge]:
        """Edges of the subgraph induced by ``vertices`` (original ids)."""
        vs = set(vertices)
        return sorted(e for e in self.edges if e[0] in vs and e[1] in vs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


@dataclass(frozen=True)
class MatrixInstance:
    rows: int
    cols: int
    ones: frozenset[tuple[int, int]]

    def __post_init__(self):
        for r, c in self.ones:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")


@dataclass(frozen=True)
class Solution:
    edges: frozenset[Edge] = field(default_factory=frozenset)

    @property
    def size(self) -> int:
        return len(self.edges)

    @classmethod
    def of(cls, edges: Iterable[Edge]) -> "Solution":
        return cls(frozenset(norm_edge(u, v) for u, v in edges))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


# -- parsing -----------------------------------------------------------------

def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def _parse_dimacs(text: str) -> Graph:
    n = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        tok = raw.split()
        if not tok or tok[0] == "c":
            continue
        if tok[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(tok) != 4 or tok[1] not in ("edge", "col"):
                raise ParseError("expected 'p edge <n> <m>'", lineno)
            n, _ = _ints(tok[2:], lineno)
            if n < 0:
                raise ParseError("negative vertex count", lineno)
        elif tok[0] == "e":
            if n is None:
                raise ParseError("edge line before problem line", lineno)
            if len(tok) != 3:
                raise ParseError("expected 'e <u> <v>'", lineno)
            u, v = _ints(tok[1:], lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex id out of range 1..{n}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unknown line type {tok[0]!r}", lineno)
    if n is None:
        raise ParseError("missing problem line")
    return Graph(n, edges)


def _parse_edgelist(text: str, n: int | None = None) -> Graph:
    edges: list[Edge] = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if len(tok) != 2:
            raise ParseError("expected 'u v'", lineno)
        u, v = _ints(tok, lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        if u < 0 or v < 0 or (n is not None and max(u, v) >= n):
            raise ParseError("vertex id out of range", lineno)
        edges.append((u, v))
        top = max(top, u, v)
    return Graph(top + 1 if n is None else n, edges)


def parse_graph(text: str, format: str = "edgelist") -> Graph:
    """Parse ``text`` as ``"dimacs"`` or ``"edgelist"`` (``"auto"`` sniffs a ``p`` line)."""
    if format == "auto":
        format = "dimacs" if any(
            ln.split()[:1] == ["p"] for ln in text.splitlines()
        ) else "edgelist"
    if format == "dimacs":
        return _parse_dimacs(text)
    if format == "edgelist":
        return _parse_edgelist(text)
    raise ValueError(f"unknown graph format {format!r}")


def parse_matrix(text: str) -> MatrixInstance:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty matrix input")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError("expected '<m> <n>' header", 1)
    rows, cols = _ints(head, 1)
    if len(lines) - 1 != rows:
        raise ParseError(f"expected {rows} rows, found {len(lines) - 1}")
    ones = set()
    for r, row in enumerate(lines[1:]):
        if len(row) != cols:
            raise ParseError(f"row length {len(row)} != {cols}", r + 2)
        for c, ch in enumerate(row):
            if ch == "1":
                ones.add((r, c))
            elif ch != "0":
                raise ParseError(f"non-binary character {ch!r}", r + 2)
    return MatrixInstance(rows, cols, frozenset(ones))


def to_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def to_edgelist(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.sorted_edges())


def format_matrix(mat: MatrixInstance) -> str:
    rows = [
        "".join("1" if (r, c) in mat.ones else "0" for c in range(mat.cols))
        for r in range(mat.rows)
    ]
    return "\n".join([f"{mat.rows} {mat.cols}", *rows]) + "\n"


# -- predicates --------------------------------------------------------------

def endpoints(edges: Iterable[Edge]) -> set[int]:
    vs: set[int] = set()
    for u, v in edges:
        vs.add(u)
        vs.add(v)
    return vs


def is_vertex_cover(g: Graph, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    return all(u in vs or v in vs for u, v in g.edges)


def is_eds(g: Graph, edges: Iterable[Edge]) -> bool:
    """True iff every edge of ``g`` shares an endpoint with some edge in ``edges``.

    Raises ``ValueError`` if a listed edge is not in ``g``.
    """
    es = [norm_edge(u, v) for u, v in edges]
    for e in es:
        if e not in g.edges:
            raise ValueError(f"edge {e} not in graph")
    return is_vertex_cover(g, endpoints(es))


def is_matching(edges: Iterable[Edge]) -> bool:
    seen: set[int] = set()
    for u, v in edges:
        if u in seen or v in seen:
            return False
        seen.add(u)
        seen.add(v)
    return True


def is_maximal_matching(g: Graph, edges: Iterable[Edge]) -> bool:
    es = list(edges)
    return is_matching(es) and all(norm_edge(*e) in g.edges for e in es) and is_eds(g, es)
