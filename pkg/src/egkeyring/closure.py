"""Closure sets: a constructive stand-in for maximal long-cycle-rich vertex sets.

A vertex set X is *rich* (for parameter k) when inside ``G[X]`` every vertex
lies on a cycle of length at least ``ceil(k/2)`` and every pair of vertices is
joined by a path of at least that length. The vertex set of any cycle of
length at least k is rich, the union of two intersecting rich sets is rich,
and adding a path whose two ends lie in a rich set keeps it rich.

``close_under_paths`` grows the vertex set of a long cycle by repeatedly
absorbing such paths until no component of ``G - X`` touches X in two
places (the *fixpoint condition*). ``merge_family`` keeps a list of closures
pairwise disjoint and sparsely connected.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from math import ceil
from typing import NamedTuple

from .cycles import (Budget, Cycle, Path, as_budget, find_cycle_through,
                     find_long_path_between, is_cycle)
from .errors import PreconditionError
from .graph import Graph, components, crossing_edges, induced_subgraph


def half(k: int) -> int:
    """Smallest integer length that is at least k/2."""
    return ceil(k / 2)


@dataclass(frozen=True)
class ClosureSet:
    vertices: tuple[int, ...]
    seed: Cycle
    host: Graph = field(compare=False, repr=False)

    def __contains__(self, v: int) -> bool:
        return v in self._set

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def _set(self) -> frozenset[int]:
        return frozenset(self.vertices)


@dataclass(frozen=True)
class ClosureFamily:
    members: tuple[ClosureSet, ...]
    k: int
    host: Graph = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def covered(self) -> set[int]:
        return {v for m in self.members for v in m.vertices}

    def owner(self) -> dict[int, int]:
        """Map each covered vertex to the index of its member."""
        return {v: i for i, m in enumerate(self.members) for v in m.vertices}


def empty_family(G: Graph, k: int) -> ClosureFamily:
    return ClosureFamily((), k, G)


def check_property_a(G: Graph, X: Iterable[int], k: int,
                     budget: Budget | int | None = None) -> tuple[bool, dict[int, Cycle]]:
    """Does every vertex of X lie on a cycle of length >= ceil(k/2) in G[X]?

    Returns ``(ok, witnesses)`` where witnesses maps vertices to cycles of G
    starting at that vertex. Stops at the first vertex without one.
    """
    budget = as_budget(budget)
    sub, index = induced_subgraph(G, X)
    back = sorted(index, key=index.get)
    L = max(3, half(k))
    witnesses: dict[int, Cycle] = {}
    for u in back:
        if u in witnesses:
            continue
        c = find_cycle_through(sub, index[u], L, budget)
        if c is None:
            return False, witnesses
        cyc = tuple(back[x] for x in c)
        # every vertex of a long cycle is covered by a rotation of it
        for i, w in enumerate(cyc):
            witnesses.setdefault(w, cyc[i:] + cyc[:i])
    return True, witnesses


def check_property_b(G: Graph, X: Iterable[int], k: int,
                     budget: Budget | int | None = None) -> tuple[bool, dict[tuple[int, int], Path]]:
    """Is every pair of X joined by a path of length >= ceil(k/2) in G[X]?"""
    budget = as_budget(budget)
    sub, index = induced_subgraph(G, X)
    back = sorted(index, key=index.get)
    L = half(k)
    witnesses: dict[tuple[int, int], Path] = {}
    for i in range(len(back)):
        for j in range(i + 1, len(back)):
            p = find_long_path_between(sub, i, j, L, budget)
            if p is None:
                return False, witnesses
            witnesses[(back[i], back[j])] = tuple(back[x] for x in p)
    return True, witnesses


class Absorption(NamedTuple):
    component: tuple[int, ...]
    a: int
    b: int
    path: Path


def absorbable_component(G: Graph, X: Iterable[int]) -> Absorption | None:
    """Find a component of G - X attached to two distinct vertices of X.

    Components are tried by smallest vertex; the attachment pair is the two
    smallest attachment vertices, joined by a shortest path through the
    component. Returns None when X satisfies the fixpoint condition.
    """
    xs = set(X)
    rest = [v for v in G.vertices() if v not in xs]
    for comp in components(G, rest):
        inside = set(comp)
        attach = sorted({y for x in comp for y in G.adj[x] if y in xs})
        if len(attach) < 2:
            continue
        a, b = attach[0], attach[1]
        return Absorption(tuple(comp), a, b, _path_through(G, a, b, inside))
    return None


def _path_through(G: Graph, a: int, b: int, inside: set[int]) -> Path:
    # BFS from a whose interior stays in `inside`
    parent: dict[int, int] = {}
    queue = deque()
    for y in G.adj[a]:
        if y in inside and y not in parent:
            parent[y] = a
            queue.append(y)
    while queue:
        x = queue.popleft()
        if G.has_edge(x, b):
            out = [b, x]
            while out[-1] != a:
                out.append(parent[out[-1]])
            return tuple(reversed(out))
        for y in G.adj[x]:
            if y in inside and y not in parent:
                parent[y] = x
                queue.append(y)
    raise AssertionError("attachment vertices are not joined through the component")


def absorb(G: Graph, X: Iterable[int],
           on_step: Callable[[frozenset[int]], None] | None = None) -> frozenset[int]:
    """Grow X by absorbing attachment paths until the fixpoint condition holds."""
    cur = frozenset(X)
    while True:
        hit = absorbable_component(G, cur)
        if hit is None:
            return cur
        cur = cur | frozenset(hit.path)
        if on_step is not None:
            on_step(cur)


def close_under_paths(G: Graph, seed: Sequence[int], k: int,
                      on_step: Callable[[frozenset[int]], None] | None = None) -> ClosureSet:
    """Closure of the vertex set of a cycle of length at least k.

    ``on_step`` is called with the vertex set after every absorption.
    """
    seed = tuple(seed)
    if not is_cycle(G, seed):
        raise PreconditionError(f"seed {seed} is not a cycle of the graph")
    if len(seed) < k:
        raise PreconditionError(f"seed cycle has length {len(seed)} < k = {k}")
    H = absorb(G, seed, on_step)
    return ClosureSet(tuple(sorted(H)), seed, G)


def _conflict(G: Graph, A: frozenset[int], B: frozenset[int]) -> bool:
    if A & B:
        return True
    return len(crossing_edges(G, A, B)) >= 2


def merge_family(G: Graph, family: ClosureFamily, fresh: ClosureSet) -> ClosureFamily:
    """Add ``fresh`` to the family, merging until the family invariants hold.

    Intersecting members, and disjoint members joined by two or more edges,
    are united and re-closed. Merged members keep the position and seed of
    the earliest member involved.
    """
    pool: list[tuple[frozenset[int], Cycle]] = [
        (frozenset(m.vertices), m.seed) for m in family.members
    ]
    pool.append((frozenset(fresh.vertices), fresh.seed))
    pool = [(absorb(G, s), seed) for s, seed in pool]
    while True:
        pair = next(
            ((i, j) for i in range(len(pool)) for j in range(i + 1, len(pool))
             if _conflict(G, pool[i][0], pool[j][0])),
            None,
        )
        if pair is None:
            break
        i, j = pair
        united = absorb(G, pool[i][0] | pool[j][0])
        pool[i] = (united, pool[i][1])
        del pool[j]
    members = tuple(ClosureSet(tuple(sorted(s)), seed, G) for s, seed in pool)
    return ClosureFamily(members, family.k, G)


def closure_violations(G: Graph, cs: ClosureSet, k: int, *, audit_rich: bool = True,
                       budget: Budget | int | None = None) -> list[str]:
    """Audit one closure set; an empty list means every invariant holds.

    ``audit_rich`` runs the (exponential) richness checks as well.
    """
    problems = []
    H = set(cs.vertices)
    if not set(cs.seed) <= H:
        problems.append("seed not contained in closure")
    if len(H) < len(cs.seed):
        problems.append("closure smaller than its seed")
    if len(cs.seed) < k:
        problems.append(f"seed shorter than k={k}")
    if len(components(G, H)) != 1:
        problems.append("closure does not induce a connected subgraph")
    hit = absorbable_component(G, H)
    if hit is not None:
        problems.append(f"fixpoint fails: component {hit.component} attaches at {hit.a}, {hit.b}")
    if audit_rich:
        if not check_property_a(G, H, k, budget)[0]:
            problems.append("some vertex lies on no long cycle inside the closure")
        if not check_property_b(G, H, k, budget)[0]:
            problems.append("some pair has no long path inside the closure")
    return problems


def family_violations(G: Graph, family: ClosureFamily) -> list[str]:
    """Audit disjointness, single crossing edges and external common neighbours."""
    problems = []
    sets = [set(m.vertices) for m in family.members]
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if sets[i] & sets[j]:
                problems.append(f"members {i} and {j} intersect")
                continue
            n_cross = len(crossing_edges(G, sets[i], sets[j]))
            if n_cross > 1:
                problems.append(f"members {i} and {j} are joined by {n_cross} edges")
    for i, H in enumerate(sets):
        for z in G.vertices():
            if z not in H and sum(1 for y in G.adj[z] if y in H) >= 2:
                problems.append(f"vertex {z} has two neighbours in member {i}")
    return problems
