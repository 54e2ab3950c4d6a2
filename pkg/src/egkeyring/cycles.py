"""Exact long-cycle and long-path search by pruned backtracking.

Cycles and paths are plain tuples of vertex ids. A cycle ``(c0, ..., cL-1)``
has length L (the closing edge ``cL-1 c0`` is implicit); a path
``(p0, ..., pL)`` has length L. Every search expands neighbours in
ascending order, so the first hit is the lexicographically least
qualifying sequence and results are reproducible.

All searches are exponential in the worst case. Each one draws on a
:class:`Budget` of node expansions and raises
:class:`~egkeyring.errors.SearchBudgetExceeded` instead of guessing when it
runs dry.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence

from .errors import GraphInputError, ParameterRangeError, SearchBudgetExceeded
from .graph import Graph

Cycle = tuple[int, ...]
Path = tuple[int, ...]

DEFAULT_BUDGET = 20_000_000


class Budget:
    """Node-expansion allowance shared by one or more searches."""

    def __init__(self, limit: int = DEFAULT_BUDGET):
        self.limit = limit
        self.used = 0

    def spend(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.limit:
            raise SearchBudgetExceeded(f"search exceeded {self.limit} node expansions")

    def __repr__(self) -> str:
        return f"Budget(used={self.used}, limit={self.limit})"


def as_budget(budget: Budget | int | None) -> Budget:
    if budget is None:
        return Budget()
    if isinstance(budget, Budget):
        return budget
    return Budget(int(budget))


def is_cycle(G: Graph, cycle: Sequence[int]) -> bool:
    """Check that ``cycle`` is a simple cycle of G (at least 3 vertices)."""
    L = len(cycle)
    if L < 3 or len(set(cycle)) != L:
        return False
    if any(not 0 <= v < G.n for v in cycle):
        return False
    return all(G.has_edge(cycle[i], cycle[(i + 1) % L]) for i in range(L))


def is_path(G: Graph, path: Sequence[int]) -> bool:
    """Check that ``path`` is a simple path of G (a single vertex counts)."""
    if not path or len(set(path)) != len(path):
        return False
    if any(not 0 <= v < G.n for v in path):
        return False
    return all(G.has_edge(path[i], path[i + 1]) for i in range(len(path) - 1))


def two_core(G: Graph) -> set[int]:
    """Vertices of the 2-core: the only ones that can lie on a cycle."""
    deg = [len(a) for a in G.adj]
    alive = set(G.vertices())
    stack = [v for v in alive if deg[v] < 2]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in G.adj[v]:
            if w in alive:
                deg[w] -= 1
                if deg[w] < 2:
                    stack.append(w)
    return alive


def _reachable(G: Graph, start: int, allowed: set[int], blocked: set[int],
               terminal: int | None = None) -> set[int]:
    # vertices of `allowed - blocked` reachable from start; `terminal` is
    # collected but never expanded
    seen: set[int] = set()
    stack = [start]
    while stack:
        x = stack.pop()
        for y in G.adj[x]:
            if y in allowed and y not in blocked and y not in seen:
                seen.add(y)
                if y != terminal:
                    stack.append(y)
    return seen


def _cycles_from(G: Graph, root: int, allowed: set[int], min_length: int,
                 budget: Budget, canonical: bool) -> Iterator[Cycle]:
    """Yield cycles through ``root`` inside ``allowed`` in lexicographic order.

    With ``canonical`` each cycle is produced once (second vertex smaller
    than the last), otherwise both orientations appear.
    """
    adj = G.adj
    root_nbrs = set(adj[root]) & allowed
    path = [root]
    on_path = {root}

    def viable() -> bool:
        x = path[-1]
        reach = _reachable(G, x, allowed, on_path)
        if len(path) + len(reach) < min_length:
            return False
        return x in root_nbrs or not root_nbrs.isdisjoint(reach)

    def extend() -> Iterator[Cycle]:
        budget.spend()
        x = path[-1]
        if len(path) >= 3 and len(path) >= min_length and x in root_nbrs:
            if not canonical or path[1] < x:
                yield tuple(path)
        for y in adj[x]:
            if y in on_path or y not in allowed:
                continue
            path.append(y)
            on_path.add(y)
            if viable():
                yield from extend()
            path.pop()
            on_path.discard(y)

    if root in allowed and root_nbrs:
        yield from extend()


def find_long_cycle(G: Graph, L: int, budget: Budget | int | None = None) -> Cycle | None:
    """Find a cycle of length at least ``L``, or return None if none exists.

    The search is rooted at each start vertex in turn, using only larger
    vertices, so the result is the lexicographically least qualifying cycle
    whose smallest vertex is as small as possible.
    """
    if L < 3:
        raise ParameterRangeError(f"minimum cycle length must be at least 3, got {L}")
    budget = as_budget(budget)
    core = two_core(G)
    for s in sorted(core):
        allowed = {v for v in core if v >= s}
        if len(allowed) < L:
            break
        for c in _cycles_from(G, s, allowed, L, budget, canonical=False):
            return c
    return None


def find_cycle_through(G: Graph, u: int, L: int,
                       budget: Budget | int | None = None) -> Cycle | None:
    """Find a cycle through ``u`` of length at least ``L`` (listed from u)."""
    G._check_vertex(u)
    if L < 3:
        raise ParameterRangeError(f"minimum cycle length must be at least 3, got {L}")
    budget = as_budget(budget)
    for c in _cycles_from(G, u, two_core(G), L, budget, canonical=False):
        return c
    return None


def enumerate_cycles_through(G: Graph, u: int, budget: int | None = None,
                             search_budget: Budget | int | None = None,
                             min_length: int = 3) -> Iterator[Cycle]:
    """Yield every cycle through ``u`` exactly once, stopping after ``budget``.

    Each cycle starts at ``u`` and is oriented so its second vertex is
    smaller than its last. ``min_length`` skips (and prunes towards) shorter
    cycles.
    """
    G._check_vertex(u)
    sb = as_budget(search_budget)
    gen = _cycles_from(G, u, two_core(G), max(3, min_length), sb, canonical=True)
    for count, c in enumerate(gen):
        if budget is not None and count >= budget:
            return
        yield c


def find_long_path_between(G: Graph, u: int, v: int, L: int,
                           budget: Budget | int | None = None) -> Path | None:
    """Find a u-v path with at least ``L`` edges, or None if there is none."""
    G._check_vertex(u)
    G._check_vertex(v)
    if u == v:
        raise GraphInputError("path endpoints must be distinct")
    budget = as_budget(budget)
    adj = G.adj
    everything = set(G.vertices())
    path = [u]
    on_path = {u}

    def viable() -> bool:
        reach = _reachable(G, path[-1], everything, on_path, terminal=v)
        return v in reach and len(path) - 1 + len(reach) >= L

    def extend() -> Path | None:
        budget.spend()
        x = path[-1]
        for y in adj[x]:
            if y in on_path:
                continue
            if y == v:
                if len(path) >= L:
                    return tuple(path) + (v,)
                continue
            path.append(y)
            on_path.add(y)
            if viable():
                found = extend()
                if found is not None:
                    return found
            path.pop()
            on_path.discard(y)
        return None

    if v not in _reachable(G, u, everything, on_path, terminal=v):
        return None
    return extend()


def cycle_edges(cycle: Sequence[int]) -> list[tuple[int, int]]:
    L = len(cycle)
    return [tuple(sorted((cycle[i], cycle[(i + 1) % L]))) for i in range(L)]


def remap(seq: Iterable[int], back: Sequence[int]) -> tuple[int, ...]:
    """Translate vertex ids of a subgraph back to the host via ``back``."""
    return tuple(back[x] for x in seq)
