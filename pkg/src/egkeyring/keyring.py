"""Keyrings: a cycle with r pendant leaves hung on one of its vertices."""

from __future__ import annotations

from dataclasses import dataclass

from .closure import half
from .cycles import Budget, Cycle, as_budget, find_long_cycle, is_cycle
from .errors import InternalInvariantError, NotDenseError, ParameterRangeError, PreconditionError
from .graph import Graph, is_dense
from .lemma import HeavyCycleWitness, LemmaTrace, find_heavy_cycle


@dataclass(frozen=True)
class Keyring:
    center: int
    cycle: Cycle
    leaves: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.leaves)

    @property
    def edge_count(self) -> int:
        return len(self.cycle) + len(self.leaves)

    @property
    def vertex_count(self) -> int:
        return len(self.cycle) + len(self.leaves)

    def edges(self) -> list[tuple[int, int]]:
        L = len(self.cycle)
        out = [tuple(sorted((self.cycle[i], self.cycle[(i + 1) % L]))) for i in range(L)]
        out.extend(tuple(sorted((self.center, x))) for x in self.leaves)
        return sorted(out)


@dataclass(frozen=True)
class NeighborSplit:
    """Neighbours of ``center`` split by the cycle.

    ``on_cycle`` lists them in the order met when walking the cycle away
    from the center in its stored direction; ``off_cycle`` is ascending.
    """

    center: int
    on_cycle: tuple[int, ...]
    off_cycle: tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.on_cycle)

    @property
    def off_cycle_count(self) -> int:
        return len(self.off_cycle)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _rotate_to(cycle: Cycle, u: int) -> Cycle:
    i = cycle.index(u)
    return cycle[i:] + cycle[:i]


def split_neighbors(G: Graph, cycle: Cycle, u: int) -> NeighborSplit:
    if u not in cycle:
        raise PreconditionError(f"vertex {u} is not on the cycle")
    walk = _rotate_to(tuple(cycle), u)[1:]
    nbrs = set(G.adj[u])
    on_cycle = tuple(x for x in walk if x in nbrs)
    on_set = set(on_cycle)
    off_cycle = tuple(x for x in G.adj[u] if x not in on_set)
    return NeighborSplit(u, on_cycle, off_cycle)


def check_leaf_range(k: int, r: int) -> None:
    if k < 6:
        raise ParameterRangeError(f"k={k}: no r satisfies ceil(k/2) <= r <= k-3")
    if not half(k) <= r <= k - 3:
        raise ParameterRangeError(f"r={r} outside [{half(k)}, {k - 3}] for k={k}")


def extract_keyring(G: Graph, witness: HeavyCycleWitness, r: int) -> Keyring:
    """Build a keyring with r leaves and at least k edges from a heavy cycle.

    With ``s`` off-cycle neighbours of the center: if r <= s the witness
    cycle keeps all its vertices and takes r of them as leaves. Otherwise the
    first r-s cycle neighbours become leaves and the cycle is shortcut by
    the chord from the center to the next one.
    """
    k = witness.k
    check_leaf_range(k, r)
    bad = witness.problems(G)
    if bad:
        raise PreconditionError("invalid witness: " + "; ".join(bad))
    u = witness.center
    cycle = _rotate_to(witness.cycle, u)
    split = split_neighbors(G, cycle, u)
    s, t = split.off_cycle_count, split.t

    if r <= s:
        return Keyring(u, cycle, split.off_cycle[:r])

    # the degree bound t + s >= k-1 together with r <= k-3 forces this
    if not r - s + 1 < t:
        raise InternalInvariantError(f"r - s + 1 = {r - s + 1} is not below t = {t}")
    pivot = split.on_cycle[r - s]
    harvested = split.on_cycle[: r - s]
    new_cycle = (u,) + cycle[cycle.index(pivot):]
    if len(new_cycle) < 3 or not set(harvested).isdisjoint(new_cycle):
        raise InternalInvariantError(f"shortcut cycle {new_cycle} is malformed")
    return Keyring(u, new_cycle, split.off_cycle + harvested)


def verify_keyring(G: Graph, K: Keyring, k: int, r: int) -> Verdict:
    """Check that K is a keyring subgraph of G with r leaves and >= k edges."""
    cyc, leaves = tuple(K.cycle), tuple(K.leaves)
    if not is_cycle(G, cyc):
        return Verdict(False, "cycle does not validate in the graph")
    if K.center not in cyc:
        return Verdict(False, "center is not on the cycle")
    if len(set(leaves)) != len(leaves):
        return Verdict(False, "repeated leaf")
    if any(not 0 <= x < G.n for x in leaves):
        return Verdict(False, "leaf id out of range")
    if not set(leaves).isdisjoint(cyc):
        return Verdict(False, "a leaf lies on the cycle")
    for x in leaves:
        if not G.has_edge(K.center, x):
            return Verdict(False, f"leaf {x} is not adjacent to the center {K.center}")
    if len(leaves) != r:
        return Verdict(False, f"keyring has {len(leaves)} leaves, expected {r}")
    if K.edge_count < k:
        return Verdict(False, f"keyring has {K.edge_count} edges, fewer than k={k}")
    return Verdict(True)


def extract(G: Graph, k: int, r: int, budget: Budget | int | None = None,
            trace: LemmaTrace | None = None) -> Keyring:
    """Keyring with r leaves and at least k edges, for ceil(k/2) <= r <= k-3."""
    check_leaf_range(k, r)
    if not is_dense(G, k):
        raise NotDenseError(f"{G!r} has at most (k-1)n/2 edges for k={k}")
    witness = find_heavy_cycle(G, k, budget, trace)
    K = extract_keyring(G, witness, r)
    verdict = verify_keyring(G, K, k, r)
    if not verdict:
        raise InternalInvariantError(f"extracted keyring rejected: {verdict.reason}")
    return K


def find_keyring_any_r(G: Graph, k: int, r: int,
                       budget: Budget | int | None = None) -> Keyring:
    """Keyring with r leaves and at least k edges for any 0 <= r <= k-3.

    r = 0 is a long cycle, r >= ceil(k/2) is constructed by :func:`extract`;
    the range in between falls back to exhaustive search.
    """
    if not 0 <= r <= k - 3:
        raise ParameterRangeError(f"r={r} outside [0, {k - 3}] for k={k}")
    if not is_dense(G, k):
        raise NotDenseError(f"{G!r} has at most (k-1)n/2 edges for k={k}")
    budget = as_budget(budget)
    if r == 0:
        c = find_long_cycle(G, k, budget)
        if c is None:
            raise InternalInvariantError(f"dense graph without a cycle of length >= {k}")
        return Keyring(c[0], c, ())
    if r >= half(k):
        return extract(G, k, r, budget)
    from .oracle import oracle_find_keyring

    K = oracle_find_keyring(G, k, r, budget)
    if K is None:
        raise InternalInvariantError(f"dense graph without a keyring for k={k}, r={r}")
    return K
