"""Brute-force keyring search used to cross-check the constructive route.

A keyring with r leaves and at least k edges exists exactly when some
vertex u lies on a cycle C with ``|C| + r >= k`` and has at least r
neighbours off C. The oracle tries every vertex and every cycle through it.
"""

from __future__ import annotations

from .cycles import Budget, as_budget, enumerate_cycles_through
from .graph import Graph
from .keyring import Keyring


def oracle_find_keyring(G: Graph, k: int, r: int,
                        budget: Budget | int | None = None) -> Keyring | None:
    """Return some keyring with r leaves and >= k edges, or None if none exists."""
    budget = as_budget(budget)
    need = max(3, k - r)
    for u in G.vertices():
        if len(G.adj[u]) < r + 2:
            continue
        for c in enumerate_cycles_through(G, u, search_budget=budget, min_length=need):
            on = set(c)
            off = [x for x in G.adj[u] if x not in on]
            if len(off) >= r:
                return Keyring(u, c, tuple(off[:r]))
    return None


def oracle_exists_keyring(G: Graph, k: int, r: int,
                          budget: Budget | int | None = None) -> bool:
    return oracle_find_keyring(G, k, r, budget) is not None
