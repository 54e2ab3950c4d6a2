"""Immutable simple undirected graphs on vertices 0..n-1."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from pathlib import Path

from .errors import GraphInputError, ParameterRangeError

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """A simple undirected graph with vertex ids ``0..n-1``.

    Edges are stored normalized (smaller endpoint first) and sorted, and
    every adjacency list is ascending, so iteration order is deterministic.
    Instances are immutable; use :func:`build_graph` to construct one.
    """

    __slots__ = ("n", "edges", "adj", "_edge_set")

    def __init__(self, n: int, edges: Iterable[Edge]):
        if n < 0:
            raise GraphInputError(f"vertex count must be nonnegative, got {n}")
        seen: set[Edge] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphInputError(f"self-loop at vertex {u}")
            e = _norm(u, v)
            if e in seen:
                raise GraphInputError(f"duplicate edge {e}")
            seen.add(e)
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in seen:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in nbrs))
        object.__setattr__(self, "_edge_set", frozenset(seen))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def e(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self._edge_set

    def neighbors(self, u: int) -> tuple[int, ...]:
        self._check_vertex(u)
        return self.adj[u]

    def vertices(self) -> range:
        return range(self.n)

    def _check_vertex(self, u: int) -> None:
        if not 0 <= u < self.n:
            raise GraphInputError(f"vertex {u} out of range 0..{self.n - 1}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.e})"


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Build a :class:`Graph`, rejecting self-loops, duplicates and bad ids."""
    return Graph(n, ((int(u), int(v)) for u, v in edge_list))


def degree(G: Graph, u: int) -> int:
    return len(G.neighbors(u))


def induced_subgraph(G: Graph, X: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Return ``G[X]`` together with the map old id -> new id.

    New ids follow the ascending order of ``X``.
    """
    xs = sorted(set(X))
    for x in xs:
        G._check_vertex(x)
    index = {v: i for i, v in enumerate(xs)}
    sub_edges = [
        (index[u], index[v]) for u, v in G.edges if u in index and v in index
    ]
    return Graph(len(xs), sub_edges), index


def crossing_edges(G: Graph, X: Iterable[int], Y: Iterable[int]) -> list[Edge]:
    """All edges with one endpoint in X and the other in Y, sorted."""
    xs, ys = set(X), set(Y)
    for v in xs | ys:
        G._check_vertex(v)
    if xs & ys:
        raise GraphInputError(f"vertex sets overlap on {sorted(xs & ys)}")
    return [
        (u, v) for u, v in G.edges if (u in xs and v in ys) or (u in ys and v in xs)
    ]


def is_dense(G: Graph, k: int) -> bool:
    """True iff ``e(G) > (k-1) n / 2``, i.e. G is in the class D_{n,k}."""
    if k < 2:
        raise ParameterRangeError(f"k must be at least 2, got {k}")
    return 2 * G.e > (k - 1) * G.n


def components(G: Graph, within: Iterable[int] | None = None) -> list[list[int]]:
    """Connected components of ``G`` (or of ``G[within]``), each sorted,
    ordered by smallest vertex."""
    allowed = set(G.vertices()) if within is None else set(within)
    seen: set[int] = set()
    out = []
    for s in sorted(allowed):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            x = stack.pop()
            for y in G.adj[x]:
                if y in allowed and y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        out.append(sorted(comp))
    return out


def parse_edge_list(text: str) -> Graph:
    """Parse the whitespace edge-list format.

    One ``u v`` pair per line; ``#`` comments and blank lines are skipped.
    An optional ``n <count>`` header before the first edge fixes the vertex
    count, otherwise it is one more than the largest id.
    """
    n: int | None = None
    pairs: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] == "n":
            if n is not None or pairs or len(fields) != 2:
                raise GraphInputError(f"line {lineno}: misplaced or malformed header")
            n = _parse_int(fields[1], lineno)
            continue
        if len(fields) != 2:
            raise GraphInputError(f"line {lineno}: expected two vertex ids, got {line!r}")
        pairs.append((_parse_int(fields[0], lineno), _parse_int(fields[1], lineno)))
    if n is None:
        n = 1 + max((max(p) for p in pairs), default=-1)
    return build_graph(n, pairs)


def _parse_int(tok: str, lineno: int) -> int:
    try:
        val = int(tok)
    except ValueError:
        raise GraphInputError(f"line {lineno}: {tok!r} is not an integer") from None
    if val < 0:
        raise GraphInputError(f"line {lineno}: negative vertex id {val}")
    return val


def read_edge_list(path: str | Path) -> Graph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphInputError(f"cannot read {path}: {exc}") from exc
    return parse_edge_list(text)


def format_edge_list(G: Graph) -> str:
    lines = [f"n {G.n}"]
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"
