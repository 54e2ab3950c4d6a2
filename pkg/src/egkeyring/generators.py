"""Seeded random dense graphs and small named graph families."""

from __future__ import annotations

import random
from itertools import combinations

from .errors import GraphInputError, ParameterRangeError
from .graph import Graph, build_graph


def gen_random_dense(n: int, k: int, seed: int) -> Graph:
    """Insert uniformly shuffled edges until 2e > (k-1)n.

    Deterministic in ``(n, k, seed)``.
    """
    if k < 3 or n < k:
        raise ParameterRangeError(f"need n >= k >= 3, got n={n}, k={k}")
    target = (k - 1) * n // 2 + 1
    pairs = list(combinations(range(n), 2))
    if target > len(pairs):
        raise ParameterRangeError(f"no simple graph on {n} vertices has more than (k-1)n/2 edges for k={k}")
    rng = random.Random(seed)
    rng.shuffle(pairs)
    return build_graph(n, pairs[:target])


def clique(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterRangeError(f"a cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def wheel(rim: int) -> Graph:
    """Hub 0 joined to every vertex of the rim cycle 1..rim."""
    if rim < 3:
        raise ParameterRangeError(f"a wheel needs a rim of at least 3, got {rim}")
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i + 1) for i in range(1, rim)] + [(rim, 1)]
    return build_graph(rim + 1, edges)


def figure_eight(a: int, b: int) -> Graph:
    """Cycles 0..a-1 and (0, a, ..., a+b-2) sharing vertex 0."""
    if a < 3 or b < 3:
        raise ParameterRangeError("both cycles need at least 3 vertices")
    first = [(i, (i + 1) % a) for i in range(a)]
    second_vs = [0] + list(range(a, a + b - 1))
    second = [(second_vs[i], second_vs[(i + 1) % b]) for i in range(b)]
    return build_graph(a + b - 1, first + second)


def cycle_with_pendants(length: int, pendants: int) -> Graph:
    """Cycle 0..length-1 with ``pendants`` leaves hung on vertex 0."""
    base = cycle(length)
    leaves = [(0, length + i) for i in range(pendants)]
    return build_graph(length + pendants, list(base.edges) + leaves)


def disjoint_union(*parts: Graph | int) -> Graph:
    """Disjoint union, relabelled consecutively; an int part means a clique."""
    edges, offset = [], 0
    for part in parts:
        g = clique(part) if isinstance(part, int) else part
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return build_graph(offset, edges)


def cycles_joined_by_edge(a: int, b: int) -> Graph:
    """Cycles 0..a-1 and a..a+b-1 joined by the edge (0, a)."""
    g = disjoint_union(cycle(a), cycle(b))
    return build_graph(g.n, list(g.edges) + [(0, a)])


STRUCTURED = {
    "clique": clique,
    "cycle": cycle,
    "wheel": wheel,
    "figure_eight": figure_eight,
    "cycle_with_pendants": cycle_with_pendants,
    "disjoint_union": disjoint_union,
    "cycles_joined_by_edge": cycles_joined_by_edge,
}


def gen_structured(kind: str, *params) -> Graph:
    try:
        make = STRUCTURED[kind]
    except KeyError:
        raise GraphInputError(f"unknown graph kind {kind!r}; choose from {sorted(STRUCTURED)}") from None
    try:
        return make(*params)
    except TypeError as exc:
        raise ParameterRangeError(f"bad parameters for {kind}: {exc}") from None
