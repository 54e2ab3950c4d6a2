"""Find a cycle of length >= ceil(k/2) through a vertex of degree >= k-1.

Every graph with more than (k-1)n/2 edges has such a "heavy cycle". The
search keeps a family of disjoint closure sets and alternates three moves:

1. close every cycle of length >= k that avoids the family and merge it in;
2. look for a family vertex of degree >= k-1; if there is one, a cycle of
   length >= ceil(k/2) through it exists inside its member and we are done;
3. otherwise contract each member to a single node. The contracted graph
   again has more than (k-1)/2 edges per node, hence a cycle of length
   >= k, which lifts to a long cycle of G that leaves every member. Its
   closure strictly grows the family, so the loop terminates.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .closure import (ClosureFamily, ClosureSet, close_under_paths, empty_family,
                      half, merge_family)
from .cycles import (Budget, Cycle, as_budget, find_cycle_through, find_long_cycle,
                     find_long_path_between, is_cycle)
from .errors import InternalInvariantError, NotDenseError, ParameterRangeError
from .graph import Edge, Graph, components, induced_subgraph, is_dense


@dataclass(frozen=True)
class HeavyCycleWitness:
    cycle: Cycle
    center: int
    k: int

    def problems(self, G: Graph) -> list[str]:
        out = []
        if not is_cycle(G, self.cycle):
            out.append("cycle does not validate in the graph")
        if self.center not in self.cycle:
            out.append("center is not on the cycle")
        if len(self.cycle) < half(self.k):
            out.append(f"cycle length {len(self.cycle)} < ceil(k/2) = {half(self.k)}")
        if not 0 <= self.center < G.n or len(G.adj[self.center]) < self.k - 1:
            out.append(f"center degree below k-1 = {self.k - 1}")
        return out

    def is_valid(self, G: Graph) -> bool:
        return not self.problems(G)


@dataclass(frozen=True)
class ContractedGraph:
    """Members collapsed to supernodes ``0..m-1``; plain vertices follow.

    ``provenance`` maps each contracted edge to the unique host edge behind it.
    """

    graph: Graph
    m: int
    plain: tuple[int, ...]
    provenance: dict[Edge, Edge]

    @property
    def residual_count(self) -> int:
        """Number of plain (uncontracted) vertices."""
        return len(self.plain)

    def is_supernode(self, node: int) -> bool:
        return node < self.m

    def edge_classes(self) -> tuple[list[Edge], list[Edge], list[Edge]]:
        """Split edges into supernode pairs, mixed pairs and plain pairs."""
        e1, e2, e3 = [], [], []
        for a, b in self.graph.edges:
            n_super = (a < self.m) + (b < self.m)
            (e1 if n_super == 2 else e2 if n_super == 1 else e3).append((a, b))
        return e1, e2, e3


@dataclass(frozen=True)
class ContractionCheck:
    """Counting-chain quantities recorded at one contraction."""

    k: int
    host_edges: int
    member_sizes: tuple[int, ...]
    member_edges: tuple[int, ...]
    m: int
    residual_count: int
    contracted_edges: int
    dense_case: bool

    def violations(self) -> list[str]:
        out = []
        if self.contracted_edges != self.host_edges - sum(self.member_edges):
            out.append("e(G') != e(G) - sum e(G[H_i])")
        if self.dense_case:
            for h, eh in zip(self.member_sizes, self.member_edges):
                if h < self.k:
                    out.append(f"member of size {h} < k")
                if 2 * eh > (self.k - 2) * h:
                    out.append(f"member with {eh} edges on {h} vertices exceeds (k-2)h/2")
            if not 2 * self.contracted_edges > (self.k - 1) * (self.m + self.residual_count):
                out.append("contracted graph is not dense")
        return out


@dataclass
class LemmaTrace:
    """Optional event log of a run, used by audits and tests."""

    host: Graph | None = None
    closures: list[ClosureSet] = field(default_factory=list)
    families: list[ClosureFamily] = field(default_factory=list)
    contractions: list[ContractionCheck] = field(default_factory=list)
    lifted: list[Cycle] = field(default_factory=list)
    rounds: int = 0


def build_residual_closures(G: Graph, k: int, family: ClosureFamily,
                            budget: Budget | int | None = None,
                            trace: LemmaTrace | None = None) -> ClosureFamily:
    """Close and merge long cycles of the graph outside the family until none remain."""
    budget = as_budget(budget)
    while True:
        covered = family.covered()
        rest = [v for v in G.vertices() if v not in covered]
        sub, index = induced_subgraph(G, rest)
        c = find_long_cycle(sub, k, budget)
        if c is None:
            return family
        cyc = tuple(rest[x] for x in c)
        cs = close_under_paths(G, cyc, k)
        family = merge_family(G, family, cs)
        if trace is not None:
            trace.closures.append(cs)
            trace.families.append(family)


def heavy_vertex_scan(G: Graph, k: int, family: ClosureFamily) -> tuple[int, int] | None:
    """First (member index, vertex) with degree >= k-1, or None."""
    for i, member in enumerate(family.members):
        for u in member.vertices:
            if len(G.adj[u]) >= k - 1:
                return i, u
    return None


def contract(G: Graph, k: int, family: ClosureFamily,
             trace: LemmaTrace | None = None) -> ContractedGraph:
    """Collapse each family member to one node.

    When no member vertex has degree >= k-1 and G is dense, the contracted
    graph is asserted to be dense as well; a failure means the family
    invariants were broken upstream.
    """
    owner = family.owner()
    m = len(family.members)
    plain = tuple(v for v in G.vertices() if v not in owner)
    node_of = {v: m + j for j, v in enumerate(plain)}
    node_of.update(owner)
    provenance: dict[Edge, Edge] = {}
    member_edges = [0] * m
    for u, v in G.edges:
        a, b = node_of[u], node_of[v]
        if a == b:
            member_edges[a] += 1
            continue
        key = (a, b) if a < b else (b, a)
        if key in provenance:
            raise InternalInvariantError(
                f"host edges {provenance[key]} and {(u, v)} collapse onto one contracted edge"
            )
        provenance[key] = (u, v)
    cg = ContractedGraph(Graph(m + len(plain), provenance), m, plain, provenance)

    dense_case = heavy_vertex_scan(G, k, family) is None and is_dense(G, k)
    check = ContractionCheck(
        k=k,
        host_edges=G.e,
        member_sizes=tuple(len(mb) for mb in family.members),
        member_edges=tuple(member_edges),
        m=m,
        residual_count=len(plain),
        contracted_edges=cg.graph.e,
        dense_case=dense_case,
    )
    if trace is not None:
        trace.contractions.append(check)
    bad = check.violations()
    if bad:
        raise InternalInvariantError("counting chain broken: " + "; ".join(bad))
    return cg


def _member_endpoint(cg: ContractedGraph, member: set[int], a: int, b: int) -> int:
    u, v = cg.provenance[(a, b) if a < b else (b, a)]
    return u if u in member else v


def lift_cycle(G: Graph, family: ClosureFamily, cg: ContractedGraph,
               cycle: Cycle) -> Cycle:
    """Turn a cycle of the contracted graph into a cycle of G.

    Each supernode is replaced by a path inside its member between the host
    endpoints of its two cycle edges, or by a single vertex when they meet.
    """
    if not is_cycle(cg.graph, cycle):
        raise ValueError("not a cycle of the contracted graph")
    L = len(cycle)
    out: list[int] = []
    for i, node in enumerate(cycle):
        if not cg.is_supernode(node):
            out.append(cg.plain[node - cg.m])
            continue
        member = family.members[node]
        mset = set(member.vertices)
        entry = _member_endpoint(cg, mset, cycle[i - 1], node)
        exit_ = _member_endpoint(cg, mset, node, cycle[(i + 1) % L])
        if entry == exit_:
            out.append(entry)
            continue
        sub, index = induced_subgraph(G, member.vertices)
        p = find_long_path_between(sub, index[entry], index[exit_], half(family.k))
        if p is None:
            raise InternalInvariantError(
                f"no long path between {entry} and {exit_} inside member {node}"
            )
        out.extend(member.vertices[x] for x in p)
    lifted = tuple(out)
    if not is_cycle(G, lifted):
        raise InternalInvariantError(f"lifted sequence {lifted} is not a cycle")
    return lifted


def contraction_round(G: Graph, k: int, family: ClosureFamily,
                      budget: Budget | int | None = None,
                      trace: LemmaTrace | None = None) -> ClosureFamily | None:
    """Contract, find a long contracted cycle, lift it and merge its closure.

    Returns the grown family, or None when the contracted graph has no
    cycle of length >= k (impossible when G is dense and no member vertex
    is heavy).
    """
    cg = contract(G, k, family, trace)
    c = find_long_cycle(cg.graph, k, budget)
    if c is None:
        return None
    lifted = lift_cycle(G, family, cg, c)
    if trace is not None:
        trace.lifted.append(lifted)
    cs = close_under_paths(G, lifted, k)
    grown = merge_family(G, family, cs)
    before = (len(family.covered()), -len(family))
    after = (len(grown.covered()), -len(grown))
    if not after > before:
        raise InternalInvariantError(f"merge made no progress: {before} -> {after}")
    if trace is not None:
        trace.closures.append(cs)
        trace.families.append(grown)
    return grown


def grow_family(G: Graph, k: int, budget: Budget | int | None = None,
                trace: LemmaTrace | None = None) -> ClosureFamily:
    """Alternate residual closures and contraction rounds until neither grows.

    Works on any graph; used to exercise closures and contractions on
    inputs that are not dense.
    """
    budget = as_budget(budget)
    family = empty_family(G, k)
    while True:
        if trace is not None:
            trace.rounds += 1
        family = build_residual_closures(G, k, family, budget, trace)
        grown = contraction_round(G, k, family, budget, trace)
        if grown is None:
            return family
        family = grown


def dense_component(G: Graph, k: int) -> list[int]:
    """Vertices of the first connected component with 2e > (k-1)n."""
    for comp in components(G):
        sub, _ = induced_subgraph(G, comp)
        if is_dense(sub, k):
            return comp
    raise NotDenseError(f"no component of {G!r} has more than (k-1)n/2 edges for k={k}")


def find_heavy_cycle(G: Graph, k: int, budget: Budget | int | None = None,
                     trace: LemmaTrace | None = None,
                     max_rounds: int | None = None) -> HeavyCycleWitness:
    """Return a cycle of length >= ceil(k/2) containing a vertex of degree >= k-1.

    Runs on the first dense connected component of G; raises
    :class:`NotDenseError` if there is none.
    """
    if k < 3:
        raise ParameterRangeError(f"k must be at least 3, got {k}")
    budget = as_budget(budget)
    comp = dense_component(G, k)
    H, _ = induced_subgraph(G, comp)
    if trace is not None:
        trace.host = H
    if max_rounds is None:
        max_rounds = H.n * (H.n // k + 1) + H.n
    family = empty_family(H, k)
    for _ in range(max_rounds):
        if trace is not None:
            trace.rounds += 1
        family = build_residual_closures(H, k, family, budget, trace)
        hit = heavy_vertex_scan(H, k, family)
        if hit is not None:
            i, u = hit
            member = family.members[i].vertices
            sub, index = induced_subgraph(H, member)
            c = find_cycle_through(sub, index[u], max(3, half(k)), budget)
            if c is None:
                raise InternalInvariantError(f"member {i} has no long cycle through {u}")
            cycle = tuple(comp[member[x]] for x in c)
            return HeavyCycleWitness(cycle, comp[u], k)
        grown = contraction_round(H, k, family, budget, trace)
        if grown is None:
            raise InternalInvariantError("dense contracted graph has no cycle of length >= k")
        family = grown
    raise InternalInvariantError(f"no witness after {max_rounds} rounds")
